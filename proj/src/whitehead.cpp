#include "fsaut/whitehead.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "fsaut/error.hpp"
#include "fsaut/nielsen.hpp"
#include "fsaut/stallings.hpp"

namespace fsaut {

namespace {

using Cut = WhiteheadMove::Cut;

void check_cap(Index m, Index cap) {
  if (m > cap)
    throw CapExceeded("Whitehead search on A_" + std::to_string(m) + " exceeds the cap of " +
                      std::to_string(cap));
}

void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back().cancels(l)) {
    stack.pop_back();
  } else {
    stack.push_back(l);
  }
}

// Image of y^sign under a multiplier move, pushed onto a reducing stack.
void push_image(std::vector<Letter>& stack, Letter y, Letter x, Cut cut) {
  if (y.index == x.index || cut == Cut::Fixed) {
    push_reduced(stack, y);
    return;
  }
  const bool left = cut == Cut::Left || cut == Cut::Both;
  const bool right = cut == Cut::Right || cut == Cut::Both;
  if (y.sign > 0) {
    if (left) push_reduced(stack, x.inverse());
    push_reduced(stack, y);
    if (right) push_reduced(stack, x);
  } else {
    if (right) push_reduced(stack, x.inverse());
    push_reduced(stack, y);
    if (left) push_reduced(stack, x);
  }
}

struct CompactMove {
  Letter multiplier;
  std::vector<Cut> cuts;
};

Word apply_compact(const CompactMove& move, const Word& w, std::vector<Letter>& scratch) {
  scratch.clear();
  for (Letter l : w) push_image(scratch, l, move.multiplier, move.cuts[l.index - 1]);
  return Word(scratch);
}

std::size_t total_length(const WordTuple& t) {
  return std::accumulate(t.begin(), t.end(), std::size_t{0},
                         [](std::size_t acc, const Word& w) { return acc + w.size(); });
}

WordTuple apply_to_tuple(const CompactMove& move, const WordTuple& t, std::vector<Letter>& scratch) {
  WordTuple out;
  out.reserve(t.size());
  for (const Word& w : t) out.push_back(apply_compact(move, w, scratch));
  return out;
}

// Length of move(t) without building the tuple.
std::size_t image_length(const CompactMove& move, const WordTuple& t, std::vector<Letter>& scratch) {
  std::size_t total = 0;
  for (const Word& w : t) {
    scratch.clear();
    for (Letter l : w) push_image(scratch, l, move.multiplier, move.cuts[l.index - 1]);
    total += scratch.size();
  }
  return total;
}

std::vector<CompactMove> multiplier_moves(Index m) {
  std::vector<CompactMove> out;
  for_each_multiplier_move(m, [&](const WhiteheadMove& mv) {
    out.push_back({mv.multiplier, mv.cuts});
    return true;
  });
  return out;
}

// Representative of t up to a signed renaming of the generators: generators are
// renumbered by first appearance and each first occurrence made positive.
WordTuple relabel_key(const WordTuple& t, Index m) {
  std::vector<Letter> rename(m + 1, Letter{0, 1});
  Index next = 1;
  WordTuple out;
  out.reserve(t.size());
  std::vector<Letter> buf;
  for (const Word& w : t) {
    buf.clear();
    for (Letter l : w) {
      Letter& r = rename[l.index];
      if (r.index == 0) r = letter(next++, l.sign);
      buf.push_back(letter(r.index, l.sign == r.sign ? 1 : -1));
    }
    out.push_back(Word(buf));
  }
  return out;
}

FinSuppAut to_automorphism(const CompactMove& move, Index m) {
  WhiteheadMove full;
  full.type = WhiteheadMove::Type::Multiplier;
  full.rank = m;
  full.multiplier = move.multiplier;
  full.cuts = move.cuts;
  return full.automorphism();
}

}  // namespace

Word WhiteheadMove::image(Index i) const {
  if (type == Type::Permutation) return Word{permutation[i - 1]};
  std::vector<Letter> stack;
  push_image(stack, letter(i), multiplier, cuts[i - 1]);
  return Word(stack);
}

FinSuppAut WhiteheadMove::automorphism() const {
  std::vector<Word> images;
  images.reserve(rank);
  for (Index i = 1; i <= rank; ++i) images.push_back(image(i));
  return FinSuppAut::unchecked_from_images(std::move(images));
}

void for_each_multiplier_move(Index m, const std::function<bool(const WhiteheadMove&)>& visit) {
  WhiteheadMove move;
  move.type = WhiteheadMove::Type::Multiplier;
  move.rank = m;
  for (Index x = 1; x <= m; ++x) {
    for (int sign : {1, -1}) {
      move.multiplier = letter(x, sign);
      move.cuts.assign(m, Cut::Fixed);
      // Base-4 counter over the cuts of the other generators.
      for (;;) {
        Index k = 1;
        for (; k <= m; ++k) {
          if (k == x) continue;
          auto& c = move.cuts[k - 1];
          if (c != Cut::Both) {
            c = static_cast<Cut>(static_cast<unsigned char>(c) + 1);
            break;
          }
          c = Cut::Fixed;
        }
        if (k > m) break;
        if (!visit(move)) return;
      }
    }
  }
}

std::vector<WhiteheadMove> enumerate_whitehead(Index m, Index cap) {
  check_cap(m, cap);
  std::vector<WhiteheadMove> out;
  std::vector<Index> order(m);
  std::iota(order.begin(), order.end(), Index{1});
  do {
    for (std::uint32_t signs = 0; signs < (1u << m); ++signs) {
      WhiteheadMove move;
      move.type = WhiteheadMove::Type::Permutation;
      move.rank = m;
      for (Index k = 0; k < m; ++k) move.permutation.push_back(letter(order[k], (signs >> k) & 1u ? -1 : 1));
      out.push_back(std::move(move));
    }
  } while (std::next_permutation(order.begin(), order.end()));
  for_each_multiplier_move(m, [&](const WhiteheadMove& mv) {
    out.push_back(mv);
    return true;
  });
  return out;
}

std::optional<FinSuppAut> carry_to_standard(const WordTuple& t, Index m,
                                            const WhiteheadOptions& options) {
  check_cap(m, options.cap);
  const std::size_t n = t.size();
  if (n > m) throw IndexOutOfRange("tuple of size " + std::to_string(n) + " cannot be a partial basis of A_" + std::to_string(m));
  for (const Word& w : t) {
    if (w.empty()) throw IndexOutOfRange("partial basis entries must be nontrivial");
    if (max_index(w) > m)
      throw IndexOutOfRange("entry uses a_" + std::to_string(max_index(w)) + " beyond a_" + std::to_string(m));
  }

  if (rank(build_graph(t)) != n) return std::nullopt;

  const std::vector<CompactMove> moves = multiplier_moves(m);
  std::vector<Letter> scratch;
  WordTuple current = t;
  FinSuppAut alpha;

  for (;;) {
    // Greedy descent.
    for (;;) {
      const std::size_t length = total_length(current);
      std::size_t best_length = length;
      const CompactMove* best = nullptr;
      for (const CompactMove& mv : moves) {
        const std::size_t len = image_length(mv, current, scratch);
        if (len < best_length) {
          best_length = len;
          best = &mv;
        }
      }
      if (best == nullptr) break;
      current = apply_to_tuple(*best, current, scratch);
      alpha = compose(to_automorphism(*best, m), alpha);
    }

    const std::size_t length = total_length(current);
    if (length == n) break;

    // Plateau search through length-preserving moves.
    struct Node {
      WordTuple tuple;
      std::size_t parent;
      std::size_t move;
    };
    std::vector<Node> nodes{{current, 0, 0}};
    std::unordered_set<WordTuple, WordTupleHash> seen{relabel_key(current, m)};
    std::optional<std::pair<std::size_t, std::size_t>> exit;  // (node, move)
    for (std::size_t head = 0; head < nodes.size() && !exit; ++head) {
      for (std::size_t k = 0; k < moves.size(); ++k) {
        const std::size_t len = image_length(moves[k], nodes[head].tuple, scratch);
        if (len < length) {
          exit = {head, k};
          break;
        }
        if (len > length) continue;
        WordTuple next = apply_to_tuple(moves[k], nodes[head].tuple, scratch);
        if (!seen.insert(relabel_key(next, m)).second) continue;
        if (nodes.size() >= options.budget)
          throw SearchBudgetExceeded("plateau search exceeded " + std::to_string(options.budget) +
                                     " tuples at total length " + std::to_string(length),
                                     options.budget);
        nodes.push_back({std::move(next), head, k});
      }
    }
    if (!exit) return std::nullopt;

    std::vector<std::size_t> path{exit->second};
    for (std::size_t v = exit->first; v != 0; v = nodes[v].parent) path.push_back(nodes[v].move);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      current = apply_to_tuple(moves[*it], current, scratch);
      alpha = compose(to_automorphism(moves[*it], m), alpha);
    }
  }

  // current is a tuple of n single letters; finish with a signed permutation.
  std::vector<Word> sigma(m);
  std::vector<bool> used(m + 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Letter l = current[i][0];
    if (used[l.index]) return std::nullopt;
    used[l.index] = true;
    sigma[l.index - 1] = Word::generator(static_cast<Index>(i + 1), l.sign);
  }
  Index next = static_cast<Index>(n) + 1;
  for (Index k = 1; k <= m; ++k) {
    if (!used[k]) sigma[k - 1] = Word::generator(next++);
  }
  FinSuppAut result = compose(FinSuppAut::unchecked_from_images(std::move(sigma)), alpha);
  for (std::size_t i = 0; i < n; ++i) {
    if (apply(result, t[i]) != Word::generator(static_cast<Index>(i + 1)))
      throw InternalVerificationFailure("Whitehead witness does not carry the tuple to the standard prefix");
  }
  return result;
}

WordTuple complement_basis(const WordTuple& t, Index m, const WhiteheadOptions& options) {
  const std::optional<FinSuppAut> alpha = carry_to_standard(t, m, options);
  if (!alpha) throw NotAPartialBasis("tuple is not a partial basis of A_" + std::to_string(m));
  const FinSuppAut back = invert(*alpha);
  WordTuple complement;
  for (Index i = static_cast<Index>(t.size()) + 1; i <= m; ++i) complement.push_back(apply(back, Word::generator(i)));
  WordTuple full = t;
  full.insert(full.end(), complement.begin(), complement.end());
  if (!is_basis_of(full, m))
    throw InternalVerificationFailure("complement does not extend the tuple to a basis");
  return complement;
}

}  // namespace fsaut
