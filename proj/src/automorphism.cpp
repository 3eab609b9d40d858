#include "fsaut/automorphism.hpp"

#include <algorithm>
#include <string>

#include "fsaut/error.hpp"
#include "fsaut/nielsen.hpp"
#include "fsaut/random.hpp"

namespace fsaut {

FinSuppAut::FinSuppAut(std::vector<Word> images) : images_(std::move(images)) {
  // Drop a_N -> a_N while no other image still uses a_N.
  while (!images_.empty() && images_.back() == Word::generator(width())) {
    const Index n = width();
    const bool used = std::any_of(images_.begin(), images_.end() - 1,
                                  [n](const Word& w) { return max_index(w) == n; });
    if (used) break;
    images_.pop_back();
  }
}

FinSuppAut FinSuppAut::from_images(std::vector<Word> images) {
  const auto n = static_cast<Index>(images.size());
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (max_index(images[k]) > n)
      throw IndexEscape("image of a_" + std::to_string(k + 1) + " uses a_" +
                        std::to_string(max_index(images[k])) + " beyond the support width " +
                        std::to_string(n));
  }
  if (!is_basis_of(images, n))
    throw NotInjectiveOrNotSurjective("images do not form a basis of A_" + std::to_string(n));
  return FinSuppAut(std::move(images));
}

FinSuppAut FinSuppAut::unchecked_from_images(std::vector<Word> images) {
  return FinSuppAut(std::move(images));
}

Word FinSuppAut::image(Index i) const {
  if (i >= 1 && i <= width()) return images_[i - 1];
  return Word::generator(i);
}

WordTuple FinSuppAut::prefix_images(Index n) const {
  WordTuple out;
  out.reserve(n);
  for (Index i = 1; i <= n; ++i) out.push_back(image(i));
  return out;
}

Word apply(const FinSuppAut& phi, const Word& w) {
  const auto& images = phi.images();
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (Letter l : w) {
    if (l.index > phi.width()) {
      raw.push_back(l);
    } else if (const Word& img = images[l.index - 1]; l.sign > 0) {
      raw.insert(raw.end(), img.begin(), img.end());
    } else {
      for (std::size_t k = img.size(); k-- > 0;) raw.push_back(img[k].inverse());
    }
  }
  return Word(raw);
}

FinSuppAut compose(const FinSuppAut& outer, const FinSuppAut& inner) {
  const Index w = std::max(outer.width(), inner.width());
  std::vector<Word> images;
  images.reserve(w);
  for (Index i = 1; i <= w; ++i) images.push_back(apply(outer, inner.image(i)));
  return FinSuppAut::unchecked_from_images(std::move(images));
}

FinSuppAut invert(const FinSuppAut& phi) {
  if (phi.is_identity()) return phi;
  const Index n = phi.width();
  const NielsenResult r = nielsen_reduce(phi.images());
  if (r.degenerate || r.reduced.size() != n ||
      std::any_of(r.reduced.begin(), r.reduced.end(), [](const Word& w) { return w.size() != 1; }))
    throw InternalVerificationFailure("image tuple did not reduce to a signed permutation");

  // phi o E = sigma with sigma(a_p) = reduced[p]; hence phi^-1 = E o sigma^-1.
  std::vector<Word> sigma_inverse(n);
  for (Index p = 0; p < n; ++p) {
    const Letter l = r.reduced[p][0];
    sigma_inverse[l.index - 1] = Word::generator(p + 1, l.sign);
  }
  return compose(log_to_automorphism(r.log, n),
                 FinSuppAut::unchecked_from_images(std::move(sigma_inverse)));
}

bool fixes_prefix(const FinSuppAut& phi, Index n) {
  const Index limit = std::min(n, phi.width());
  for (Index i = 1; i <= limit; ++i) {
    if (phi.images()[i - 1] != Word::generator(i)) return false;
  }
  return true;
}

FinSuppAut elementary(ElementaryKind kind, Index i, Index j, Index n, int sign) {
  auto check = [n](Index k) {
    if (k < 1 || k > n)
      throw IndexOutOfRange("generator a_" + std::to_string(k) + " outside a_1..a_" + std::to_string(n));
  };
  check(i);
  if (kind != ElementaryKind::Inversion) {
    check(j);
    if (i == j) throw IndexOutOfRange("elementary move needs two distinct generators");
  }
  std::vector<Word> images;
  images.reserve(n);
  for (Index k = 1; k <= n; ++k) images.push_back(Word::generator(k));
  switch (kind) {
    case ElementaryKind::Inversion:
      images[i - 1] = Word::generator(i, -1);
      break;
    case ElementaryKind::Swap:
      std::swap(images[i - 1], images[j - 1]);
      break;
    case ElementaryKind::RightTransvection:
      images[i - 1] = Word{letter(i), letter(j, sign)};
      break;
    case ElementaryKind::LeftTransvection:
      images[i - 1] = Word{letter(j, sign), letter(i)};
      break;
  }
  return FinSuppAut::unchecked_from_images(std::move(images));
}

FinSuppAut random_aut(std::uint64_t seed, Index width_bound, std::size_t move_count) {
  if (width_bound < 1) throw IndexOutOfRange("random_aut needs width_bound >= 1");
  const std::uint64_t n = width_bound;
  const std::uint64_t inversions = n;
  const std::uint64_t swaps = n * (n - 1) / 2;
  const std::uint64_t ordered_pairs = n * (n - 1);
  const std::uint64_t total = inversions + swaps + 4 * ordered_pairs;

  Rng rng(seed);
  FinSuppAut phi;
  for (std::size_t step = 0; step < move_count; ++step) {
    std::uint64_t pick = rng.below(total);
    FinSuppAut move;
    if (pick < inversions) {
      move = elementary(ElementaryKind::Inversion, static_cast<Index>(pick + 1), 0, width_bound);
    } else if ((pick -= inversions) < swaps) {
      // Unrank (i, j) with i < j.
      Index i = 1;
      while (pick >= n - i) pick -= n - i++;
      move = elementary(ElementaryKind::Swap, i, static_cast<Index>(i + 1 + pick), width_bound);
    } else {
      pick -= swaps;
      const auto kind = pick < 2 * ordered_pairs ? ElementaryKind::RightTransvection
                                                 : ElementaryKind::LeftTransvection;
      pick %= 2 * ordered_pairs;
      const int sign = pick % 2 == 0 ? 1 : -1;
      pick /= 2;
      const auto i = static_cast<Index>(pick / (n - 1) + 1);
      auto j = static_cast<Index>(pick % (n - 1) + 1);
      if (j >= i) ++j;
      move = elementary(kind, i, j, width_bound, sign);
    }
    phi = compose(phi, move);
  }
  return phi;
}

}  // namespace fsaut
