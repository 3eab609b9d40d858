#include <doctest.h>

#include <set>

#include "fsaut/error.hpp"
#include "fsaut/nielsen.hpp"
#include "fsaut/stallings.hpp"
#include "fsaut/whitehead.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fsaut;
using testing::A;
using testing::W;

namespace {

std::set<std::vector<oracle::Letters>> distinct_images(const std::vector<WhiteheadMove>& moves) {
  std::set<std::vector<oracle::Letters>> seen;
  for (const auto& mv : moves) {
    const FinSuppAut a = mv.automorphism();
    std::vector<oracle::Letters> key;
    for (Index i = 1; i <= mv.rank; ++i) key.push_back(oracle::letters_of(a.image(i)));
    seen.insert(key);
  }
  return seen;
}

// A partial basis of A_m: the first n images of a random automorphism.
WordTuple random_partial_basis(Rng& rng, Index n, Index m, std::size_t moves) {
  return random_aut(rng.next(), m, moves).prefix_images(n);
}

}  // namespace

TEST_CASE("enumerate_whitehead m = 1") {
  const auto moves = enumerate_whitehead(1);
  REQUIRE(moves.size() == 2);
  std::set<std::string> images;
  for (const auto& mv : moves) images.insert(format_aut(mv.automorphism()));
  CHECK(images == std::set<std::string>{"# identity\n", "a1 -> a1^-1\n"});
}

TEST_CASE("enumerate_whitehead m = 2, 3: complete, duplicate-free, valid") {
  for (Index m : {2u, 3u}) {
    const auto moves = enumerate_whitehead(m);
    std::size_t perms = 1;
    for (Index k = 1; k <= m; ++k) perms *= 2 * k;
    std::size_t multipliers = 2 * m;
    for (Index k = 1; k < m; ++k) multipliers *= 4;
    multipliers -= 2 * m;  // all-fixed cuts are the identity
    CHECK(moves.size() == perms + multipliers);
    CHECK(distinct_images(moves).size() == moves.size());
    for (const auto& mv : moves) {
      const FinSuppAut a = mv.automorphism();
      CHECK(FinSuppAut::from_images(a.prefix_images(m)) == a);
    }
  }
  std::set<std::string> two;
  for (const auto& mv : enumerate_whitehead(2)) two.insert(format_aut(mv.automorphism()));
  CHECK(two.count("a1 -> a1 a2\n") == 1);
  CHECK(two.count("a1 -> a2 a1\n") == 1);
  CHECK(two.count("a1 -> a2^-1 a1 a2\n") == 1);
}

TEST_CASE("enumerate_whitehead respects the cap") {
  CHECK_THROWS_AS(enumerate_whitehead(9), CapExceeded);
  CHECK_THROWS_AS(enumerate_whitehead(4, 3), CapExceeded);
  CHECK_THROWS_AS(carry_to_standard({W("a1")}, 9), CapExceeded);
}

TEST_CASE("carry_to_standard examples") {
  const auto id = carry_to_standard({W("a1")}, 2);
  REQUIRE(id);
  CHECK(id->is_identity());

  const auto alpha = carry_to_standard({W("a1 a2")}, 2);
  REQUIRE(alpha);
  CHECK(apply(*alpha, W("a1 a2")) == W("a1"));
  CHECK(FinSuppAut::from_images(alpha->prefix_images(2)) == *alpha);

  CHECK_FALSE(carry_to_standard({W("a1 a1")}, 2));
  CHECK_FALSE(carry_to_standard({W("a1 a2 a1^-1 a2^-1")}, 2));
  CHECK_FALSE(carry_to_standard({W("a1"), W("a1 a2 a2")}, 2));

  const auto reversed = carry_to_standard({W("a2"), W("a1")}, 2);
  REQUIRE(reversed);
  CHECK(*reversed == A("a1 -> a2\na2 -> a1"));

  CHECK(carry_to_standard({}, 3)->is_identity());
}

TEST_CASE("carry_to_standard input errors") {
  CHECK_THROWS_AS(carry_to_standard({W("a3")}, 2), IndexOutOfRange);
  CHECK_THROWS_AS(carry_to_standard({Word{}}, 2), IndexOutOfRange);
  CHECK_THROWS_AS(carry_to_standard({W("a1"), W("a2"), W("a1 a2")}, 2), IndexOutOfRange);
}

TEST_CASE("plateau search budget is reported separately from a negative verdict") {
  WhiteheadOptions tight;
  tight.budget = 2;
  CHECK_THROWS_AS(carry_to_standard({W("a1 a1 a2 a2")}, 2, tight), SearchBudgetExceeded);
  CHECK_FALSE(carry_to_standard({W("a1 a1 a2 a2")}, 2));
  try {
    carry_to_standard({W("a1 a1 a2 a2")}, 2, tight);
  } catch (const SearchBudgetExceeded& e) {
    CHECK(e.budget() == 2);
  }
}

TEST_CASE("complement_basis examples") {
  CHECK(complement_basis({W("a1"), W("a2")}, 4) == WordTuple{W("a3"), W("a4")});
  const WordTuple c = complement_basis({W("a1 a2")}, 2);
  REQUIRE(c.size() == 1);
  CHECK(is_basis_of({W("a1 a2"), c[0]}, 2));
  const WordTuple d = complement_basis({W("a2")}, 2);
  REQUIRE(d.size() == 1);
  CHECK(is_basis_of({W("a2"), d[0]}, 2));
  CHECK_THROWS_AS(complement_basis({W("a1 a1")}, 2), NotAPartialBasis);
  CHECK(complement_basis({W("a1 a2"), W("a2")}, 2).empty());
}

TEST_CASE("witness and complement correctness on random partial bases") {
  Rng rng(6174);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = static_cast<Index>(rng.below(4) + 1);
    const auto n = static_cast<Index>(rng.below(m) + 1);
    const WordTuple t = random_partial_basis(rng, n, m, rng.below(10));
    CAPTURE(format_tuple(t));
    const auto alpha = carry_to_standard(t, m);
    REQUIRE(alpha);
    for (Index i = 0; i < n; ++i) CHECK(apply(*alpha, t[i]) == Word::generator(i + 1));
    CHECK(FinSuppAut::from_images(alpha->prefix_images(m)) == *alpha);
    WordTuple full = t;
    const WordTuple c = complement_basis(t, m);
    CHECK(c.size() == m - n);
    full.insert(full.end(), c.begin(), c.end());
    CHECK(is_basis_of(full, m));
    if (n == m) CHECK(c.empty());
  }
}

TEST_CASE("carry_to_standard verdicts match the orbit oracle for m <= 2") {
  for (Index m = 1; m <= 2; ++m) {
    for (Index n = 1; n <= m; ++n) {
      const oracle::StandardOrbit orbit(n, m, 9);
      oracle::for_each_tuple(m, n, 5, [&](const oracle::Tuple& raw) {
        const WordTuple t = oracle::to_word_tuple(raw);
        if (rank(build_graph(t)) != t.size()) return;
        CAPTURE(format_tuple(t));
        CHECK(carry_to_standard(t, m).has_value() == orbit.contains(raw));
      });
    }
  }
}
