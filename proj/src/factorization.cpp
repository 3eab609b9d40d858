#include "fsaut/factorization.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fsaut/error.hpp"
#include "fsaut/nielsen.hpp"

namespace fsaut {

namespace {

std::vector<Word> standard_images(Index width) {
  std::vector<Word> images;
  images.reserve(width);
  for (Index i = 1; i <= width; ++i) images.push_back(Word::generator(i));
  return images;
}

Index checked_add(Index a, Index b) {
  if (a > std::numeric_limits<Index>::max() - b) throw IndexOutOfRange("generator index overflow");
  return a + b;
}

Index image_reach(const FinSuppAut& phi, Index n) {
  Index reach = n;
  for (Index i = 1; i <= std::min(n, phi.width()); ++i) reach = std::max(reach, max_index(phi.image(i)));
  return reach;
}

// a_i with i in 1..limit where x and y differ, if any.
std::optional<Index> first_difference(const FinSuppAut& x, const FinSuppAut& y) {
  const Index limit = std::max(x.width(), y.width());
  for (Index i = 1; i <= limit; ++i) {
    if (x.image(i) != y.image(i)) return i;
  }
  return std::nullopt;
}

std::optional<Index> first_moved(const FinSuppAut& x, Index n) {
  for (Index i = 1; i <= std::min(n, x.width()); ++i) {
    if (x.image(i) != Word::generator(i)) return i;
  }
  return std::nullopt;
}

}  // namespace

FinSuppAut swap_f(Index n) {
  std::vector<Word> images = standard_images(checked_add(n, n));
  for (Index i = 1; i <= n; ++i) std::swap(images[i - 1], images[n + i - 1]);
  return FinSuppAut::unchecked_from_images(std::move(images));
}

FinSuppAut swap_g(Index n, Index mprime) {
  if (mprime < checked_add(n, n))
    throw RangeOverlap("swap_g needs mprime >= 2n, got n = " + std::to_string(n) +
                       ", mprime = " + std::to_string(mprime));
  if (n == 0) return {};
  std::vector<Word> images = standard_images(checked_add(mprime, n));
  for (Index i = 1; i <= n; ++i) std::swap(images[n + i - 1], images[mprime + i - 1]);
  return FinSuppAut::unchecked_from_images(std::move(images));
}

Approximation approximate(const FinSuppAut& phi, Index n, Strategy strategy,
                          const WhiteheadOptions& options) {
  if (strategy == Strategy::Width) return {phi, std::max(n, phi.width())};

  const Index m = image_reach(phi, n);
  if (n == 0) return {FinSuppAut{}, 0};
  WordTuple images = phi.prefix_images(n);
  WordTuple complement = complement_basis(images, m, options);
  images.insert(images.end(), complement.begin(), complement.end());
  return {FinSuppAut::from_images(std::move(images)), m};
}

bool VerificationReport::passed() const { return first_failure() == nullptr; }

const CheckResult* VerificationReport::first_failure() const {
  for (const CheckResult& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

Word apply_factor_chain(const Certificate& c, const Word& w) {
  Word x = w;
  for (std::size_t k = c.pairs.size(); k-- > 0;) {
    x = apply(c.pairs[k].second, x);
    x = apply(c.pairs[k].first, x);
  }
  return x;
}

Certificate factorize(const FinSuppAut& phi, Index n, Strategy strategy, const WhiteheadOptions& options) {
  Certificate c;
  c.n = n;
  c.phi = phi;
  // A_n0 contains phi(A_n).
  const Index n0 = image_reach(phi, n);
  Approximation approx = approximate(invert(phi), n0, strategy, options);
  c.psi = std::move(approx.psi);
  c.m = approx.m;
  c.v = compose(c.psi, phi);
  c.mprime = std::max(c.m, checked_add(n, n));
  const FinSuppAut f = swap_f(n);
  const FinSuppAut g = swap_g(n, c.mprime);
  c.u = compose(f, g, c.psi, g, f);
  c.pairs = {{{FinSuppAut{}, g}, {f, invert(c.u)}, {f, compose(g, c.v)}}};

  const VerificationReport report = verify_certificate(c);
  if (const CheckResult* bad = report.first_failure())
    throw InternalVerificationFailure("factorize produced a certificate failing '" + bad->name +
                                      "': " + bad->detail);
  return c;
}

VerificationReport verify_certificate(const Certificate& c) {
  VerificationReport report;
  auto add = [&](std::string name, bool ok, std::string detail = {},
                 std::optional<std::size_t> factor = {}, std::optional<Index> generator = {}) {
    report.checks.push_back({std::move(name), ok, factor, generator, std::move(detail)});
  };
  auto gen_name = [](Index i) { return "a" + std::to_string(i); };

  const Index n = c.n;
  const FinSuppAut f = swap_f(n);

  add("exponent", c.pairs.size() == 3, "expected exactly 3 (F, U) pairs");

  for (std::size_t k = 0; k < c.pairs.size(); ++k) {
    const FinSuppAut& F = c.pairs[k].first;
    const bool ok = F.is_identity() || F == f;
    std::optional<Index> witness;
    if (!ok) {
      const Index limit = std::max(F.width(), f.width());
      for (Index i = 1; i <= limit && !witness; ++i) {
        if (F.image(i) != Word::generator(i) && F.image(i) != f.image(i)) witness = i;
      }
      if (!witness) witness = first_difference(F, f);
    }
    add("F" + std::to_string(k + 1) + " in {id, f}", ok,
        ok ? "" : "moves " + gen_name(*witness) + " to neither itself nor its f-image", k + 1, witness);
  }

  for (std::size_t k = 0; k < c.pairs.size(); ++k) {
    const FinSuppAut& U = c.pairs[k].second;
    const bool ok = fixes_prefix(U, n);
    const std::optional<Index> witness = ok ? std::nullopt : first_moved(U, n);
    add("U" + std::to_string(k + 1) + " in U_n", ok, ok ? "" : "moves " + gen_name(*witness), k + 1,
        witness);
  }

  Index width = std::max({c.phi.width(), c.psi.width(), c.u.width(), c.v.width(), f.width()});
  for (const auto& [F, U] : c.pairs) width = std::max({width, F.width(), U.width()});
  {
    std::optional<Index> witness;
    for (Index i = 1; i <= width && !witness; ++i) {
      if (apply_factor_chain(c, Word::generator(i)) != c.phi.image(i)) witness = i;
    }
    add("product equals phi", !witness,
        witness ? "factor chain and phi differ on " + gen_name(*witness) : "", std::nullopt, witness);
  }

  {
    const Index expected = std::max<Index>(c.m, n + n);
    add("mprime = max(m, 2n)", c.mprime == expected,
        c.mprime == expected ? "" : "expected " + std::to_string(expected) + ", got " + std::to_string(c.mprime));
  }
  add("m >= n", c.m >= n);
  add("psi fixes a_i for i > m", c.psi.width() <= c.m,
      c.psi.width() <= c.m ? "" : "psi moves " + gen_name(c.psi.width()), std::nullopt,
      c.psi.width() <= c.m ? std::nullopt : std::optional<Index>(c.psi.width()));

  {
    const std::optional<Index> witness = first_difference(c.v, compose(c.psi, c.phi));
    add("v = psi o phi", !witness, witness ? "differs on " + gen_name(*witness) : "", std::nullopt, witness);
  }
  {
    const std::optional<Index> witness = first_moved(c.v, n);
    add("v in U_n", !witness, witness ? "v moves " + gen_name(*witness) : "", std::nullopt, witness);
  }
  if (c.mprime >= n + n) {
    const FinSuppAut g = swap_g(n, c.mprime);
    const std::optional<Index> witness = first_difference(c.u, compose(f, g, c.psi, g, f));
    add("u = f g psi g f", !witness, witness ? "differs on " + gen_name(*witness) : "", std::nullopt,
        witness);
  }
  {
    const std::optional<Index> witness = first_moved(c.u, n);
    add("u in U_n", !witness, witness ? "u moves " + gen_name(*witness) : "", std::nullopt, witness);
  }
  return report;
}

}  // namespace fsaut
