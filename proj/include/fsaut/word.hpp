#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace fsaut {

/// Generator index i of a_i. Indices start at 1.
using Index = std::uint32_t;

/// a_index^sign with sign in {+1, -1}.
struct Letter {
  Index index = 1;
  std::int8_t sign = 1;

  constexpr Letter inverse() const noexcept { return {index, static_cast<std::int8_t>(-sign)}; }
  constexpr bool cancels(Letter other) const noexcept {
    return index == other.index && sign == -other.sign;
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

constexpr Letter letter(Index index, int sign = 1) noexcept {
  return {index, static_cast<std::int8_t>(sign < 0 ? -1 : 1)};
}

/// Total order a1 < a1^-1 < a2 < a2^-1 < ...
constexpr bool letter_less(Letter a, Letter b) noexcept {
  if (a.index != b.index) return a.index < b.index;
  return a.sign > b.sign;
}

/// A freely reduced word; the empty word is the identity.
class Word {
 public:
  Word() = default;
  /// Reduces `raw`. Throws InvalidLetter on index 0 or a sign outside {+1, -1}.
  explicit Word(std::span<const Letter> raw);
  Word(std::initializer_list<Letter> raw);

  static Word generator(Index index, int sign = 1);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t k) const { return letters_[k]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  struct Trusted {};
  Word(Trusted, std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
  friend Word concat(const Word&, const Word&);
  friend Word invert_word(const Word&);
  friend Word power(const Word&, int);

  std::vector<Letter> letters_;
};

Word reduce(std::span<const Letter> raw);
Word concat(const Word& u, const Word& v);
Word invert_word(const Word& w);
/// Largest generator index in w; 0 for the identity.
Index max_index(const Word& w) noexcept;
/// w^k for any integer k.
Word power(const Word& w, int k);

inline Word operator*(const Word& u, const Word& v) { return concat(u, v); }

/// Number of letters cancelled when forming u*v.
std::size_t cancellation(std::span<const Letter> u, std::span<const Letter> v) noexcept;

/// Shortlex order under letter_less.
bool shortlex_less(const Word& u, const Word& v) noexcept;

/// An ordered finite tuple of reduced words.
using WordTuple = std::vector<Word>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

struct WordTupleHash {
  std::size_t operator()(const WordTuple& t) const noexcept;
};

}  // namespace fsaut
