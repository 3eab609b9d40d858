#pragma once

#include <cstdint>
#include <string>

#include "fsaut/automorphism.hpp"
#include "fsaut/random.hpp"
#include "fsaut/text.hpp"
#include "fsaut/word.hpp"

namespace testing {

inline fsaut::Word W(const std::string& text) { return fsaut::parse_word(text); }
inline fsaut::FinSuppAut A(const std::string& text) { return fsaut::parse_aut(text); }

/// Uniform reduced word over a_1..a_m of length exactly len.
inline fsaut::Word random_word(fsaut::Rng& rng, fsaut::Index m, std::size_t len) {
  std::vector<fsaut::Letter> out;
  while (out.size() < len) {
    const auto l = fsaut::letter(static_cast<fsaut::Index>(rng.below(m) + 1), rng.below(2) ? 1 : -1);
    if (!out.empty() && out.back().cancels(l)) continue;
    out.push_back(l);
  }
  return fsaut::Word(out);
}

/// Raw (unreduced) letter sequence.
inline std::vector<fsaut::Letter> random_raw(fsaut::Rng& rng, fsaut::Index m, std::size_t len) {
  std::vector<fsaut::Letter> out;
  for (std::size_t k = 0; k < len; ++k)
    out.push_back(fsaut::letter(static_cast<fsaut::Index>(rng.below(m) + 1), rng.below(2) ? 1 : -1));
  return out;
}

}  // namespace testing
