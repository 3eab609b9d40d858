#pragma once

#include <cstddef>
#include <vector>

#include "fsaut/automorphism.hpp"
#include "fsaut/word.hpp"

namespace fsaut {

/// An elementary Nielsen move on a tuple T. Indices are 0-based positions.
struct NielsenMove {
  enum class Kind {
    Invert,    // T_i <- T_i^-1
    Swap,      // T_i <-> T_j
    Multiply,  // T_i <- T_i T_j^e (Right) or T_j^e T_i (Left), e = inverse ? -1 : +1
    Drop,      // remove the (empty) entry T_i; marks a rank collapse
  };
  enum class Side { Left, Right };

  Kind kind = Kind::Invert;
  std::size_t i = 0;
  std::size_t j = 0;
  Side side = Side::Right;
  bool inverse = false;

  static NielsenMove invert(std::size_t i) { return {Kind::Invert, i, 0, Side::Right, false}; }
  static NielsenMove swap(std::size_t i, std::size_t j) { return {Kind::Swap, i, j, Side::Right, false}; }
  static NielsenMove multiply(std::size_t i, std::size_t j, Side side, bool inverse) {
    return {Kind::Multiply, i, j, side, inverse};
  }
  static NielsenMove drop(std::size_t i) { return {Kind::Drop, i, 0, Side::Right, false}; }

  friend bool operator==(const NielsenMove&, const NielsenMove&) = default;
};

struct MoveLog {
  std::vector<NielsenMove> moves;

  bool has_drop() const noexcept;
  friend bool operator==(const MoveLog&, const MoveLog&) = default;
};

/// Applies one move in place. Throws IndexOutOfRange on a bad position.
void apply_move(WordTuple& t, const NielsenMove& move);
WordTuple replay(WordTuple t, const MoveLog& log);

struct NielsenResult {
  WordTuple reduced;
  MoveLog log;
  /// Some entry collapsed to the identity and was dropped.
  bool degenerate = false;
};

/// Deterministic Nielsen reduction.
///
/// Repeatedly takes the Multiply move with the largest length decrease (ties:
/// lowest (i, j), Left before Right, +1 before -1). When none shortens the
/// tuple, a length-preserving Multiply that lowers the replaced entry in the
/// half-word order is taken instead; this is what lets the process escape the
/// plateaus that plain length descent gets stuck on. Finally entries are
/// re-signed and sorted by shortlex with Invert and Swap moves.
///
/// Entries that collapse to the identity are removed with a Drop move.
NielsenResult nielsen_reduce(WordTuple t);

/// True iff t freely generates exactly A_m. Throws IndexOutOfRange if an
/// entry uses a generator beyond a_m.
bool is_basis_of(const WordTuple& t, Index m);

/// The automorphism E of A_n with: replaying `log` on the image tuple of any
/// phi yields the image tuple of phi o E. Throws IndexOutOfRange or, for logs
/// containing a Drop, DegenerateEntry.
FinSuppAut log_to_automorphism(const MoveLog& log, Index n);

}  // namespace fsaut
