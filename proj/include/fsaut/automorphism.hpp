#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fsaut/word.hpp"

namespace fsaut {

/// A finitely supported automorphism of the free group on a_1, a_2, ...
///
/// Stored as the images of a_1..a_N. Every a_i with i > N is fixed, every
/// stored image lies in A_N, and the stored images form a basis of A_N.
/// The representation is normalized to the smallest such N: a trailing
/// a_N -> a_N column is kept only while another image still uses a_N. Two
/// automorphisms are therefore equal exactly when their representations are.
class FinSuppAut {
 public:
  /// The identity.
  FinSuppAut() = default;

  /// Validates containment in A_N (N = images.size()) and the basis property,
  /// then normalizes. Throws IndexEscape or NotInjectiveOrNotSurjective.
  static FinSuppAut from_images(std::vector<Word> images);

  /// Normalizes without the basis check. For constructions that are
  /// automorphisms by construction (products, elementary moves, replays).
  static FinSuppAut unchecked_from_images(std::vector<Word> images);

  Index width() const noexcept { return static_cast<Index>(images_.size()); }
  const std::vector<Word>& images() const noexcept { return images_; }
  /// Image of a_i; a_i itself beyond the support.
  Word image(Index i) const;
  /// (image(1), ..., image(n)).
  WordTuple prefix_images(Index n) const;
  bool is_identity() const noexcept { return images_.empty(); }

  friend bool operator==(const FinSuppAut&, const FinSuppAut&) = default;

 private:
  explicit FinSuppAut(std::vector<Word> images);
  std::vector<Word> images_;
};

Word apply(const FinSuppAut& phi, const Word& w);

/// compose(outer, inner) acts as outer after inner.
FinSuppAut compose(const FinSuppAut& outer, const FinSuppAut& inner);

/// compose(a, b, c, ...) = a after b after c ...; the rightmost acts first.
template <class... Rest>
FinSuppAut compose(const FinSuppAut& a, const FinSuppAut& b, const FinSuppAut& c,
                   const Rest&... rest) {
  return compose(a, compose(b, c, rest...));
}

FinSuppAut invert(const FinSuppAut& phi);

/// Membership in U_n: phi fixes a_1, ..., a_n.
bool fixes_prefix(const FinSuppAut& phi, Index n);

enum class ElementaryKind {
  Inversion,          // a_i -> a_i^-1
  Swap,               // a_i <-> a_j
  RightTransvection,  // a_i -> a_i a_j^sign
  LeftTransvection,   // a_i -> a_j^sign a_i
};

/// Throws IndexOutOfRange unless 1 <= i, j <= n (and i != j where two indices are used).
FinSuppAut elementary(ElementaryKind kind, Index i, Index j, Index n, int sign = 1);

/// Product of move_count elementary automorphisms drawn uniformly from the
/// finite list of elementary moves on a_1..a_width_bound. Deterministic in seed.
FinSuppAut random_aut(std::uint64_t seed, Index width_bound, std::size_t move_count);

}  // namespace fsaut
