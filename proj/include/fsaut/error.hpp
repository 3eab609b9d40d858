#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fsaut {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidLetter : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A tuple handed to from_images does not freely generate A_N.
class NotInjectiveOrNotSurjective : public Error {
 public:
  using Error::Error;
};

/// An image uses a generator beyond the declared support width.
class IndexEscape : public Error {
 public:
  using Error::Error;
};

/// A move log containing a dropped entry cannot be realized as an automorphism.
class DegenerateEntry : public Error {
 public:
  using Error::Error;
};

class RangeOverlap : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NotAPartialBasis : public Error {
 public:
  using Error::Error;
};

/// The peak search ran out of budget; this is "unknown", not "no".
class SearchBudgetExceeded : public Error {
 public:
  SearchBudgetExceeded(const std::string& what, std::size_t budget)
      : Error(what), budget_(budget) {}
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t budget_;
};

class InternalVerificationFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fsaut
