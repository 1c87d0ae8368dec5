#include "doctest.h"

#include "ivposet/classify.hpp"

using namespace ivposet;

TEST_CASE("poset-side classification") {
  auto example = classify_poset(IntervalPoset::of(Permutation::parse("43187562")));
  CHECK_FALSE(example.is_tree);
  CHECK_FALSE(example.is_binary);
  CHECK_FALSE(example.is_binary_tree);

  auto claw = classify_poset(IntervalPoset::of(Permutation::parse("2413")));
  CHECK(claw.is_tree);
  CHECK_FALSE(claw.is_binary);
  CHECK_FALSE(claw.is_binary_tree);

  auto comb = classify_poset(IntervalPoset::of(Permutation::parse("132")));
  CHECK(comb.is_tree);
  CHECK(comb.is_binary);
  CHECK(comb.is_binary_tree);
}

TEST_CASE("pattern-side classification") {
  auto identity = classify_permutation(Permutation::parse("123"));
  CHECK_FALSE(identity.is_tree);
  CHECK(identity.is_binary);

  auto claw = classify_permutation(Permutation::parse("2413"));
  CHECK(claw.is_tree);
  CHECK_FALSE(claw.is_binary);

  auto example = classify_permutation(Permutation::parse("43187562"));
  CHECK_FALSE(example.is_binary);
  CHECK_FALSE(example.is_tree);
}

TEST_CASE("separability") {
  CHECK(is_separable(Permutation::parse("1234")));
  CHECK(is_separable(Permutation::parse("2143")));
  CHECK_FALSE(is_separable(Permutation::parse("2413")));
  CHECK_FALSE(is_separable(Permutation::parse("3142")));
  CHECK_FALSE(is_separable(Permutation::parse("43187562")));
}

TEST_CASE("both criteria agree through S6 and compose the binary-tree flag") {
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [](const Permutation& w) {
      auto from_poset = classify_poset(IntervalPoset::of(w));
      auto from_pattern = classify_permutation(w);
      CHECK(from_poset == from_pattern);
      CHECK(from_poset.is_binary_tree == (from_poset.is_tree && from_poset.is_binary));
    });
}
