#include "fsaut/text.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <sstream>
#include <vector>

#include "fsaut/error.hpp"

namespace fsaut {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

template <class Visit>
void for_each_line(std::string_view text, Visit&& visit) {
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    visit(std::string_view(line), number);
  }
}

bool blank(std::string_view s) { return std::all_of(s.begin(), s.end(), is_space); }

// Parses a<k> into k; `column` is 1-based for errors.
Index parse_index(std::string_view digits, std::size_t line, std::size_t column) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("expected a generator index after 'a'", line, column);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || value > std::numeric_limits<Index>::max())
    throw ParseError("generator index out of range", line, column);
  if (value == 0) throw ParseError("generator indices start at 1", line, column);
  return static_cast<Index>(value);
}

Word parse_word_at(std::string_view text, std::size_t line, std::size_t offset) {
  std::vector<Letter> raw;
  std::size_t k = 0;
  while (k < text.size()) {
    if (is_space(text[k])) {
      ++k;
      continue;
    }
    const std::size_t start = k;
    while (k < text.size() && !is_space(text[k])) ++k;
    std::string_view token = text.substr(start, k - start);
    const std::size_t column = offset + start + 1;
    if (token == "1") continue;
    if (token.front() != 'a') throw ParseError("unexpected token '" + std::string(token) + "'", line, column);
    int sign = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      const std::string_view exponent = token.substr(caret + 1);
      if (exponent == "-1") {
        sign = -1;
      } else if (exponent != "1") {
        throw ParseError("exponent must be 1 or -1", line, column + caret + 1);
      }
      token = token.substr(0, caret);
    }
    raw.push_back(letter(parse_index(token.substr(1), line, column + 1), sign));
  }
  return Word(raw);
}

}  // namespace

Word parse_word(std::string_view text, std::size_t line) { return parse_word_at(text, line, 0); }

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w) {
    if (!out.empty()) out += ' ';
    out += 'a';
    out += std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

FinSuppAut parse_aut(std::string_view text) {
  std::map<Index, Word> listed;
  Index width = 0;
  for_each_line(text, [&](std::string_view line, std::size_t number) {
    if (blank(line)) return;
    const std::size_t arrow = line.find("->");
    if (arrow == std::string_view::npos) throw ParseError("expected 'a<i> -> <word>'", number, 1);
    std::size_t start = 0;
    while (start < arrow && is_space(line[start])) ++start;
    std::size_t stop = arrow;
    while (stop > start && is_space(line[stop - 1])) --stop;
    const std::string_view lhs = line.substr(start, stop - start);
    if (lhs.empty() || lhs.front() != 'a')
      throw ParseError("left-hand side must be a generator a<i>", number, start + 1);
    const Index i = parse_index(lhs.substr(1), number, start + 2);
    const Word image = parse_word_at(line.substr(arrow + 2), number, arrow + 2);
    if (!listed.emplace(i, image).second)
      throw ParseError("a" + std::to_string(i) + " is mapped twice", number, start + 1);
    width = std::max({width, i, max_index(image)});
  });
  std::vector<Word> images;
  images.reserve(width);
  for (Index i = 1; i <= width; ++i) {
    auto it = listed.find(i);
    images.push_back(it == listed.end() ? Word::generator(i) : it->second);
  }
  return FinSuppAut::from_images(std::move(images));
}

std::string format_aut(const FinSuppAut& phi) {
  if (phi.is_identity()) return "# identity\n";
  std::string out;
  for (Index i = 1; i <= phi.width(); ++i) {
    if (phi.image(i) == Word::generator(i)) continue;
    out += "a" + std::to_string(i) + " -> " + format_word(phi.image(i)) + "\n";
  }
  return out;
}

WordTuple parse_tuple(std::string_view text) {
  WordTuple out;
  for_each_line(text, [&](std::string_view line, std::size_t number) {
    if (!blank(line)) out.push_back(parse_word(line, number));
  });
  return out;
}

std::string format_tuple(const WordTuple& t) {
  std::string out;
  for (const Word& w : t) out += format_word(w) + "\n";
  return out;
}

}  // namespace fsaut
