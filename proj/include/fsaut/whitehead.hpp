#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "fsaut/automorphism.hpp"
#include "fsaut/word.hpp"

namespace fsaut {

/// A Whitehead automorphism of A_m.
///
/// Permutation moves send a_i to permutation[i-1], a signed letter. Multiplier
/// moves fix the multiplier's generator and send every other generator y to
/// one of y, y x, x^-1 y, x^-1 y x according to its cut.
struct WhiteheadMove {
  enum class Type { Permutation, Multiplier };
  enum class Cut : unsigned char { Fixed, Right, Left, Both };

  Type type = Type::Permutation;
  Index rank = 0;
  std::vector<Letter> permutation;
  Letter multiplier{};
  std::vector<Cut> cuts;  // one per generator; the multiplier's own entry is Fixed

  /// Image of a_i, 1 <= i <= rank.
  Word image(Index i) const;
  FinSuppAut automorphism() const;
};

struct WhiteheadOptions {
  Index cap = 8;
  /// Number of equal-length tuples the plateau search may visit.
  std::size_t budget = 100000;
};

/// Every multiplier move of A_m with at least one non-fixed cut, in a fixed
/// order. Stops early when the visitor returns false.
void for_each_multiplier_move(Index m, const std::function<bool(const WhiteheadMove&)>& visit);

/// The complete list of Whitehead automorphisms of A_m: all 2^m m! signed
/// permutations (the identity among them) followed by all nontrivial
/// multiplier moves. Throws CapExceeded when m > cap.
std::vector<WhiteheadMove> enumerate_whitehead(Index m, Index cap = WhiteheadOptions{}.cap);

/// Finds alpha in Aut(A_m) with alpha(t_i) = a_i for every i, witnessing that
/// t is a partial basis of A_m. Returns nullopt when t provably is not one.
///
/// Tuples whose subgroup has rank below |t| are rejected up front. Otherwise
/// greedy descent in total length through multiplier moves; on a plateau
/// above the target length, a breadth-first search through length-preserving
/// moves, taken up to signed renaming of generators, looks for a tuple that
/// can be shortened. Throws
/// SearchBudgetExceeded if that search exceeds options.budget tuples,
/// CapExceeded if m > options.cap, IndexOutOfRange on malformed input.
std::optional<FinSuppAut> carry_to_standard(const WordTuple& t, Index m,
                                            const WhiteheadOptions& options = {});

/// Words c_{n+1}, ..., c_m with t followed by c a basis of A_m.
/// Throws NotAPartialBasis if carry_to_standard fails.
WordTuple complement_basis(const WordTuple& t, Index m, const WhiteheadOptions& options = {});

}  // namespace fsaut
