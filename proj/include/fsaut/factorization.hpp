#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsaut/automorphism.hpp"
#include "fsaut/whitehead.hpp"

namespace fsaut {

/// f: a_i <-> a_{n+i} for 1 <= i <= n. An involution of width 2n.
FinSuppAut swap_f(Index n);

/// g: a_{n+i} <-> a_{mprime+i} for 1 <= i <= n; fixes a_1..a_n.
/// Throws RangeOverlap if mprime < 2n.
FinSuppAut swap_g(Index n, Index mprime);

enum class Strategy {
  Width,    // psi = phi, m = max(n, width(phi))
  Minimal,  // m from the images of a_1..a_n, psi completed by a Whitehead complement
};

struct Approximation {
  FinSuppAut psi;
  Index m = 0;
};

/// psi agreeing with phi on a_1..a_n and fixing every a_i with i > m >= n.
Approximation approximate(const FinSuppAut& phi, Index n, Strategy strategy = Strategy::Width,
                          const WhiteheadOptions& options = {});

/// A witness that phi lies in (F U_n)^3 with F = {id, f}.
///
/// The product pairs[0].first o pairs[0].second o ... o pairs[2].second equals
/// phi. psi, u and v are the intermediate automorphisms of the construction:
/// psi fixes a_i for i > m, v = psi o phi and u = f o g o psi o g o f.
struct Certificate {
  Index n = 0;
  FinSuppAut phi;
  Index m = 0;
  Index mprime = 0;
  FinSuppAut psi;
  FinSuppAut u;
  FinSuppAut v;
  std::array<std::pair<FinSuppAut, FinSuppAut>, 3> pairs;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::optional<std::size_t> factor;  // 1-based pair index
  std::optional<Index> generator;     // distinguishing a_i
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  /// First failing check, if any.
  const CheckResult* first_failure() const;
};

/// Builds the certificate for phi at level n and verifies it before returning.
/// Throws InternalVerificationFailure if the verifier rejects it.
Certificate factorize(const FinSuppAut& phi, Index n, Strategy strategy = Strategy::Width,
                      const WhiteheadOptions& options = {});

/// Rechecks every certificate condition from scratch using only apply,
/// compose and fixes_prefix.
VerificationReport verify_certificate(const Certificate& c);

/// Pointwise product of the six factors applied to a_i.
Word apply_factor_chain(const Certificate& c, const Word& w);

}  // namespace fsaut
