#include <doctest.h>

#include "fsaut/error.hpp"
#include "fsaut/word.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace fsaut;
using testing::W;

TEST_CASE("reduce cancels adjacent inverse pairs") {
  CHECK(reduce(std::vector<Letter>{letter(1), letter(2), letter(2, -1), letter(1)}) == W("a1 a1"));
  CHECK(reduce(std::vector<Letter>{letter(3), letter(3, -1)}).empty());
  const std::vector<Letter> raw{letter(1), letter(2, -1), letter(2), letter(2), letter(2, -1), letter(1, -1)};
  CHECK(oracle::naive_reduce(raw).empty());
  CHECK(reduce(raw).empty());
}

TEST_CASE("reduce rejects malformed letters") {
  CHECK_THROWS_AS(Word({Letter{0, 1}}), InvalidLetter);
  CHECK_THROWS_AS(Word({Letter{2, 0}}), InvalidLetter);
}

TEST_CASE("concat") {
  CHECK(concat(W("a1 a2"), W("a2^-1 a3")) == W("a1 a3"));
  const Word w = W("a4 a2^-1 a4 a1");
  CHECK(concat(w, invert_word(w)).empty());
  CHECK(oracle::to_word(oracle::naive_concat(oracle::letters_of(W("a1 a2 a1^-1")), oracle::letters_of(W("a1 a2")))) ==
        W("a1 a2 a2"));
  CHECK(concat(W("a1 a2 a1^-1"), W("a1 a2")) == W("a1 a2 a2"));
  CHECK(concat(w, Word{}) == w);
  CHECK(concat(Word{}, w) == w);
}

TEST_CASE("invert_word") {
  CHECK(invert_word(W("a1 a2^-1")) == W("a2 a1^-1"));
  CHECK(invert_word(Word{}).empty());
  CHECK(invert_word(W("a5 a5 a3^-1")) == W("a3 a5^-1 a5^-1"));
}

TEST_CASE("max_index") {
  CHECK(max_index(W("a1 a7^-1 a2")) == 7);
  CHECK(max_index(Word{}) == 0);
  CHECK(max_index(W("a3 a3 a3")) == 3);
}

TEST_CASE("power") {
  CHECK(power(W("a1 a2"), 2) == W("a1 a2 a1 a2"));
  CHECK(power(W("a1 a2"), -1) == W("a2^-1 a1^-1"));
  CHECK(power(W("a1"), 0).empty());
}

TEST_CASE("word laws on random samples") {
  Rng rng(20241014);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto raw = testing::random_raw(rng, 3, rng.below(14));
    const Word r = reduce(raw);
    // Single-pass stack reduction agrees with repeated scanning.
    REQUIRE(oracle::letters_of(r) == oracle::naive_reduce(raw));
    CHECK(Word(r.letters()) == r);
    for (std::size_t k = 0; k + 1 < r.size(); ++k) CHECK_FALSE(r[k].cancels(r[k + 1]));

    const Word u = testing::random_word(rng, 4, rng.below(8));
    const Word v = testing::random_word(rng, 4, rng.below(8));
    const Word w = testing::random_word(rng, 4, rng.below(8));
    CHECK(concat(concat(u, v), w) == concat(u, concat(v, w)));
    CHECK(concat(u, invert_word(u)).empty());
    CHECK(invert_word(invert_word(u)) == u);
    const Word uv = concat(u, v);
    CHECK(uv.size() <= u.size() + v.size());
    CHECK((uv.size() == u.size() + v.size()) == (cancellation(u.letters(), v.letters()) == 0));
    CHECK(max_index(uv) <= std::max(max_index(u), max_index(v)));
  }
}
