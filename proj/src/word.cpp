#include "fsaut/word.hpp"

#include <algorithm>
#include <string>

#include "fsaut/error.hpp"

namespace fsaut {

namespace {

void check_letter(Letter l) {
  if (l.index == 0) throw InvalidLetter("generator index must be at least 1");
  if (l.sign != 1 && l.sign != -1)
    throw InvalidLetter("letter sign must be +1 or -1, got " + std::to_string(int{l.sign}));
}

// Single left-to-right pass; the output vector doubles as the stack.
void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back().cancels(l)) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

}  // namespace

Word::Word(std::span<const Letter> raw) {
  letters_.reserve(raw.size());
  for (Letter l : raw) {
    check_letter(l);
    push_reduced(letters_, l);
  }
}

Word::Word(std::initializer_list<Letter> raw)
    : Word(std::span<const Letter>(raw.begin(), raw.size())) {}

Word Word::generator(Index index, int sign) { return Word{letter(index, sign)}; }

Word reduce(std::span<const Letter> raw) { return Word(raw); }

std::size_t cancellation(std::span<const Letter> u, std::span<const Letter> v) noexcept {
  std::size_t k = 0;
  const std::size_t limit = std::min(u.size(), v.size());
  while (k < limit && u[u.size() - 1 - k].cancels(v[k])) ++k;
  return k;
}

Word concat(const Word& u, const Word& v) {
  const std::size_t k = cancellation(u.letters_, v.letters_);
  std::vector<Letter> out;
  out.reserve(u.size() + v.size() - 2 * k);
  out.insert(out.end(), u.letters_.begin(), u.letters_.end() - static_cast<std::ptrdiff_t>(k));
  out.insert(out.end(), v.letters_.begin() + static_cast<std::ptrdiff_t>(k), v.letters_.end());
  return Word(Word::Trusted{}, std::move(out));
}

Word invert_word(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(Word::Trusted{}, std::move(out));
}

Index max_index(const Word& w) noexcept {
  Index m = 0;
  for (Letter l : w) m = std::max(m, l.index);
  return m;
}

Word power(const Word& w, int k) {
  const Word base = k < 0 ? invert_word(w) : w;
  Word out;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = concat(out, base);
  return out;
}

bool shortlex_less(const Word& u, const Word& v) noexcept {
  if (u.size() != v.size()) return u.size() < v.size();
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end(), letter_less);
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Letter l : w) {
    const std::size_t code = (static_cast<std::size_t>(l.index) << 1) | (l.sign < 0 ? 1u : 0u);
    h ^= code + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t WordTupleHash::operator()(const WordTuple& t) const noexcept {
  std::size_t h = t.size();
  for (const Word& w : t) h ^= WordHash{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

}  // namespace fsaut
