#include "fsaut/nielsen.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "fsaut/error.hpp"

namespace fsaut {

bool MoveLog::has_drop() const noexcept {
  return std::any_of(moves.begin(), moves.end(),
                     [](const NielsenMove& m) { return m.kind == NielsenMove::Kind::Drop; });
}

void apply_move(WordTuple& t, const NielsenMove& move) {
  auto check = [&](std::size_t k) {
    if (k >= t.size())
      throw IndexOutOfRange("Nielsen move position " + std::to_string(k + 1) +
                            " outside tuple of size " + std::to_string(t.size()));
  };
  check(move.i);
  switch (move.kind) {
    case NielsenMove::Kind::Invert:
      t[move.i] = invert_word(t[move.i]);
      break;
    case NielsenMove::Kind::Swap:
      check(move.j);
      std::swap(t[move.i], t[move.j]);
      break;
    case NielsenMove::Kind::Multiply: {
      check(move.j);
      if (move.i == move.j) throw IndexOutOfRange("Multiply needs two distinct positions");
      const Word y = move.inverse ? invert_word(t[move.j]) : t[move.j];
      t[move.i] = move.side == NielsenMove::Side::Right ? concat(t[move.i], y) : concat(y, t[move.i]);
      break;
    }
    case NielsenMove::Kind::Drop:
      t.erase(t.begin() + static_cast<std::ptrdiff_t>(move.i));
      break;
  }
}

WordTuple replay(WordTuple t, const MoveLog& log) {
  for (const NielsenMove& m : log.moves) apply_move(t, m);
  return t;
}

namespace {

// The half-word order: length first, then the smaller and the larger of the
// left halves of w and w^-1 (the middle letter belongs to the left half).
struct HalfKey {
  std::size_t length;
  std::vector<Letter> low;
  std::vector<Letter> high;
};

bool letters_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), letter_less);
}

HalfKey half_key(const Word& w) {
  const std::size_t h = (w.size() + 1) / 2;
  std::vector<Letter> left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(h));
  std::vector<Letter> right;
  right.reserve(h);
  for (std::size_t k = 0; k < h; ++k) right.push_back(w[w.size() - 1 - k].inverse());
  if (letters_less(right, left)) std::swap(left, right);
  return {w.size(), std::move(left), std::move(right)};
}

bool key_less(const HalfKey& a, const HalfKey& b) {
  if (a.length != b.length) return a.length < b.length;
  if (letters_less(a.low, b.low)) return true;
  if (letters_less(b.low, a.low)) return false;
  return letters_less(a.high, b.high);
}

struct Candidate {
  NielsenMove move;
  std::size_t new_length;
};

// Visits Multiply candidates in tie-break order: (i, j) lexicographic, Left
// before Right, +1 before -1. Stops when the visitor returns true.
template <class Visit>
void for_each_multiply(const WordTuple& t, const WordTuple& inverses, Visit&& visit) {
  using Side = NielsenMove::Side;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (i == j) continue;
      for (Side side : {Side::Left, Side::Right}) {
        for (bool inv : {false, true}) {
          const Word& y = inv ? inverses[j] : t[j];
          const std::size_t k = side == Side::Right ? cancellation(t[i].letters(), y.letters())
                                                    : cancellation(y.letters(), t[i].letters());
          const std::size_t len = t[i].size() + y.size() - 2 * k;
          if (visit(Candidate{NielsenMove::multiply(i, j, side, inv), len})) return;
        }
      }
    }
  }
}

std::optional<NielsenMove> best_shortening(const WordTuple& t, const WordTuple& inverses) {
  std::optional<NielsenMove> best;
  std::size_t best_gain = 0;
  for_each_multiply(t, inverses, [&](const Candidate& c) {
    const std::size_t old_len = t[c.move.i].size();
    if (c.new_length < old_len && old_len - c.new_length > best_gain) {
      best_gain = old_len - c.new_length;
      best = c.move;
    }
    return false;
  });
  return best;
}

std::optional<NielsenMove> first_key_descent(const WordTuple& t, const WordTuple& inverses) {
  std::optional<NielsenMove> found;
  std::vector<std::optional<HalfKey>> keys(t.size());
  for_each_multiply(t, inverses, [&](const Candidate& c) {
    if (c.new_length != t[c.move.i].size()) return false;
    WordTuple probe{t[c.move.i], t[c.move.j]};
    NielsenMove local = c.move;
    local.i = 0;
    local.j = 1;
    apply_move(probe, local);
    auto& old_key = keys[c.move.i];
    if (!old_key) old_key = half_key(t[c.move.i]);
    if (key_less(half_key(probe[0]), *old_key)) {
      found = c.move;
      return true;
    }
    return false;
  });
  return found;
}

}  // namespace

NielsenResult nielsen_reduce(WordTuple t) {
  NielsenResult result;
  auto record = [&](const NielsenMove& m) {
    apply_move(t, m);
    result.log.moves.push_back(m);
  };

  for (std::size_t k = 0; k < t.size();) {
    if (t[k].empty()) {
      record(NielsenMove::drop(k));
      result.degenerate = true;
    } else {
      ++k;
    }
  }

  WordTuple inverses;
  for (;;) {
    inverses.clear();
    for (const Word& w : t) inverses.push_back(invert_word(w));
    std::optional<NielsenMove> move = best_shortening(t, inverses);
    if (!move) move = first_key_descent(t, inverses);
    if (!move) break;
    record(*move);
    if (t[move->i].empty()) {
      record(NielsenMove::drop(move->i));
      result.degenerate = true;
    }
  }

  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k].front().sign < 0 && t[k].back().sign < 0) record(NielsenMove::invert(k));
  }
  for (std::size_t p = 0; p < t.size(); ++p) {
    std::size_t q = p;
    for (std::size_t r = p + 1; r < t.size(); ++r) {
      if (shortlex_less(t[r], t[q])) q = r;
    }
    if (q != p) record(NielsenMove::swap(p, q));
  }

  result.reduced = std::move(t);
  return result;
}

bool is_basis_of(const WordTuple& t, Index m) {
  for (const Word& w : t) {
    if (max_index(w) > m)
      throw IndexOutOfRange("entry uses a_" + std::to_string(max_index(w)) + " beyond a_" +
                            std::to_string(m));
  }
  if (t.size() != m) return false;
  if (std::any_of(t.begin(), t.end(), [](const Word& w) { return w.empty(); })) return false;
  const NielsenResult r = nielsen_reduce(t);
  if (r.degenerate || r.reduced.size() != m) return false;
  // After normalization a basis of A_m is exactly (a_1, ..., a_m).
  for (Index k = 0; k < m; ++k) {
    if (r.reduced[k] != Word::generator(k + 1)) return false;
  }
  return true;
}

FinSuppAut log_to_automorphism(const MoveLog& log, Index n) {
  if (log.has_drop()) throw DegenerateEntry("move log contains a dropped entry");
  for (const NielsenMove& m : log.moves) {
    const bool two = m.kind == NielsenMove::Kind::Swap || m.kind == NielsenMove::Kind::Multiply;
    if (m.i >= n || (two && m.j >= n))
      throw IndexOutOfRange("move log refers to a position beyond " + std::to_string(n));
  }
  WordTuple standard;
  standard.reserve(n);
  for (Index k = 1; k <= n; ++k) standard.push_back(Word::generator(k));
  return FinSuppAut::unchecked_from_images(replay(std::move(standard), log));
}

}  // namespace fsaut
