#include <map>
#include <set>

#include "doctest.h"

#include "ivposet/block_tree.hpp"
#include "ivposet/classify.hpp"
#include "oracles.hpp"

using namespace ivposet;

namespace {

/// Builds an embedded poset from node names and (child, parent) name pairs.
EmbeddedPoset make_embedded(std::vector<std::string> nodes, std::vector<std::string> mins,
                            std::vector<std::pair<std::string, std::string>> covers) {
  EmbeddedPoset poset;
  poset.node_ids = std::move(nodes);
  for (const auto& id : mins) poset.min_order.push_back(poset.index_of(id));
  for (const auto& [child, parent] : covers)
    poset.covers.emplace_back(poset.index_of(child), poset.index_of(parent));
  return poset;
}

EmbeddedPoset dual_claw(int k) {
  std::vector<std::string> nodes;
  std::vector<std::string> mins;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 1; i <= k; ++i) {
    nodes.push_back("m" + std::to_string(i));
    mins.push_back(nodes.back());
    covers.push_back({nodes.back(), "top"});
  }
  nodes.push_back("top");
  return make_embedded(nodes, mins, covers);
}

ErrorCode rejection(const EmbeddedPoset& poset) {
  try {
    recognize(poset);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected recognition to reject");
  return ErrorCode::parse_error;
}

std::vector<Permutation> parse_all(const std::vector<std::string>& words) {
  std::vector<Permutation> out;
  for (const auto& word : words) out.push_back(Permutation::parse(word));
  return out;
}

}  // namespace

TEST_CASE("worked example block tree, count, and generators") {
  auto poset = IntervalPoset::of(Permutation::parse("43187562"));
  auto tree = recognize(poset);
  CHECK(to_string(tree) ==
        "claw[1,8](leaf[1], leaf[2], chain[3,4](leaf[3], leaf[4]), "
        "chain[5,8](chain*[5,6](leaf[5], leaf[6]), leaf[7], leaf[8]))");
  CHECK(count_generators(tree) == 8);
  CHECK(generators(tree) == parse_all({"26578134", "26578143", "28756134", "28756143",
                                       "34165782", "34187562", "43165782", "43187562"}));
  CHECK(expand_family(tree) == poset.canonical_form());
}

TEST_CASE("orientation freedom sits at the root and in claw slots only") {
  auto tree = recognize(IntervalPoset::of(Permutation::parse("43187562")));
  REQUIRE(tree.kind == BlockTree::Kind::dual_claw);
  REQUIRE(tree.children.size() == 4);
  CHECK(tree.children[2].kind == BlockTree::Kind::chain);
  CHECK(tree.children[2].free_orientation);
  CHECK(tree.children[3].kind == BlockTree::Kind::chain);
  CHECK(tree.children[3].free_orientation);
  REQUIRE(tree.children[3].children.size() == 3);
  CHECK(tree.children[3].children[0].kind == BlockTree::Kind::chain);
  CHECK_FALSE(tree.children[3].children[0].free_orientation);

  auto chain = recognize(IntervalPoset::of(Permutation::parse("1243")));
  REQUIRE(chain.kind == BlockTree::Kind::chain);
  CHECK(chain.free_orientation);
  REQUIRE(chain.children.size() == 3);
  CHECK(chain.children[2].kind == BlockTree::Kind::chain);
  CHECK_FALSE(chain.children[2].free_orientation);
}

TEST_CASE("dual claws are generated by the simple permutations") {
  auto claw4 = recognize(dual_claw(4));
  CHECK(claw4.kind == BlockTree::Kind::dual_claw);
  CHECK(count_generators(claw4) == 2);
  CHECK(generators(claw4) == parse_all({"2413", "3142"}));
  for (int k = 4; k <= 6; ++k) {
    auto tree = recognize(dual_claw(k));
    CHECK(count_generators(tree) == simple_count(k));
    CHECK(generators(tree) == simple_permutations(k));
  }
}

TEST_CASE("argyle posets are generated by the identity and its reverse") {
  for (int k = 2; k <= 6; ++k) {
    auto identity = Permutation::identity(k);
    auto tree = recognize(IntervalPoset::of(identity));
    CHECK(count_generators(tree) == 2);
    CHECK(generators(tree) == std::vector<Permutation>{identity, identity.reversed()});
  }
}

TEST_CASE("a single node is a leaf") {
  auto leaf = recognize(make_embedded({"only"}, {"only"}, {}));
  CHECK(leaf.kind == BlockTree::Kind::leaf);
  CHECK(count_generators(leaf) == 1);
  CHECK(generators(leaf) == std::vector<Permutation>{Permutation::identity(1)});
}

TEST_CASE("negative recognition") {
  CHECK(rejection(dual_claw(3)) == ErrorCode::not_an_interval_poset);
  // a node covering exactly one element
  auto one_child = make_embedded({"m1", "m2", "mid", "top"}, {"m1", "m2"},
                                 {{"m1", "mid"}, {"mid", "top"}, {"m2", "top"}});
  CHECK(rejection(one_child) == ErrorCode::not_an_interval_poset);
  // five covered blocks, two of them overlapping, cannot tile the maximum
  CHECK_THROWS_AS(recognize(IntervalPoset::from_family({{1, 1},
                                                        {2, 2},
                                                        {3, 3},
                                                        {4, 4},
                                                        {5, 5},
                                                        {6, 6},
                                                        {1, 2},
                                                        {2, 3},
                                                        {1, 6}},
                                                       6)),
                  Error);
  // a transitive pair listed as a cover
  auto redundant = make_embedded(
      {"m1", "m2", "m3", "mid", "top"}, {"m1", "m2", "m3"},
      {{"m1", "mid"}, {"m2", "mid"}, {"mid", "top"}, {"m3", "top"}, {"m1", "top"}});
  CHECK(rejection(redundant) == ErrorCode::not_an_interval_poset);
  // min_order must list exactly the childless nodes
  auto bad_mins = make_embedded({"m1", "m2", "top"}, {"m1"}, {{"m1", "top"}, {"m2", "top"}});
  CHECK(rejection(bad_mins) == ErrorCode::not_an_interval_poset);
  // two maximal elements
  auto two_tops = make_embedded({"m1", "m2", "t1", "t2"}, {"m1", "m2"},
                                {{"m1", "t1"}, {"m2", "t1"}, {"m1", "t2"}, {"m2", "t2"}});
  CHECK(rejection(two_tops) == ErrorCode::not_an_interval_poset);
}

TEST_CASE("the embedding matters: reordering min_order changes the answer") {
  // the abstract tree of 132/231, with the shared-parent leaves split apart
  auto contiguous = make_embedded({"m1", "m2", "m3", "x", "top"}, {"m1", "m2", "m3"},
                                  {{"m1", "top"}, {"x", "top"}, {"m2", "x"}, {"m3", "x"}});
  auto tree = recognize(contiguous);
  CHECK(generators(tree) == parse_all({"132", "231"}));

  auto twisted = make_embedded({"m1", "m2", "m3", "x", "top"}, {"m2", "m1", "m3"},
                               {{"m1", "top"}, {"x", "top"}, {"m2", "x"}, {"m3", "x"}});
  CHECK(rejection(twisted) == ErrorCode::not_an_interval_poset);
}

TEST_CASE("recognition round trip through S6") {
  for (int n = 2; n <= 6; ++n) {
    std::map<std::vector<ValueInterval>, std::vector<Permutation>> classes;
    for_each_permutation(n, [&](const Permutation& w) {
      classes[intervals_of(w)].push_back(w);
    });
    for (const auto& [family, members] : classes) {
      auto poset = IntervalPoset::from_family(family, n);
      auto tree = recognize(poset);
      CHECK(count_generators(tree) == members.size());
      CHECK(generators(tree) == members);
      auto flags = classify_poset(poset);
      if (flags.is_binary) CHECK(members.size() == 2);
      for (const auto& member : members)
        CHECK(std::binary_search(members.begin(), members.end(), member.reversed()));
    }
  }
}

TEST_CASE("recognition accepts exactly the realized families, exhaustively to n = 5") {
  for (int n = 2; n <= 5; ++n) {
    std::set<std::vector<ValueInterval>> realized;
    for_each_permutation(n, [&](const Permutation& w) { realized.insert(intervals_of(w)); });

    std::vector<ValueInterval> proper;
    for (int lo = 1; lo <= n; ++lo)
      for (int hi = lo + 1; hi <= n; ++hi)
        if (!(lo == 1 && hi == n)) proper.push_back({lo, hi});
    REQUIRE(proper.size() < 16);

    std::uint64_t accepted = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << proper.size()); ++mask) {
      std::vector<ValueInterval> family{{1, n}};
      for (int v = 1; v <= n; ++v) family.push_back({v, v});
      for (std::size_t bit = 0; bit < proper.size(); ++bit)
        if (mask & (std::uint64_t{1} << bit)) family.push_back(proper[bit]);
      std::sort(family.begin(), family.end());

      bool ok = false;
      try {
        auto tree = recognize(IntervalPoset::from_family(family, n));
        CHECK(expand_family(tree) == family);
        ok = true;
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_an_interval_poset);
      }
      CHECK(ok == (realized.count(family) > 0));
      if (ok) ++accepted;
    }
    CHECK(accepted == realized.size());
  }
}

TEST_CASE("arbitrary cover relations never crash recognition") {
  // Deterministic pseudo-random posets over five named nodes; every outcome
  // is either a verified block tree or a clean rejection.
  std::uint64_t state = 0x2545F4914F6CDD1Dull;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  const std::vector<std::string> ids{"a", "b", "c", "d", "e"};
  for (int round = 0; round < 400; ++round) {
    EmbeddedPoset poset;
    poset.node_ids = ids;
    // Edges only from lower to higher index keep the relation acyclic; a
    // second pass decides which childless nodes to list as minimal.
    for (int child = 0; child < 5; ++child)
      for (int parent = child + 1; parent < 5; ++parent)
        if (next() % 3 == 0) poset.covers.emplace_back(child, parent);
    std::vector<char> has_children(5, 0);
    for (const auto& [child, parent] : poset.covers) has_children[static_cast<std::size_t>(parent)] = 1;
    for (int node = 0; node < 5; ++node)
      if (!has_children[static_cast<std::size_t>(node)] && next() % 4 != 0)
        poset.min_order.push_back(node);
    try {
      auto tree = recognize(poset);
      CHECK(expand_family(tree) == interval_family(poset));
      CHECK(count_generators(tree) >= 1);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::not_an_interval_poset);
    }
  }
}

TEST_CASE("count matches the brute-force class size on spot checks") {
  for (const char* text : {"43187562", "2413", "1234", "1243", "35142", "453612"}) {
    auto w = Permutation::parse(text);
    auto tree = recognize(IntervalPoset::of(w));
    CHECK(count_generators(tree) == oracles::naive_generator_class(w).size());
  }
}

TEST_CASE("adfs words of the three-block tree") {
  // root over (L, R); L over leaves 1,2; R over (RL, leaf 5); RL over leaves 3,4
  auto tree = make_embedded(
      {"o", "L", "R", "LL", "LR", "RL", "RR", "RLL", "RLR"},
      {"LL", "LR", "RLL", "RLR", "RR"},
      {{"L", "o"}, {"R", "o"}, {"LL", "L"}, {"LR", "L"}, {"RL", "R"}, {"RR", "R"},
       {"RLL", "RL"}, {"RLR", "RL"}});
  auto [first, second] = adfs_words(tree);
  CHECK(first == Permutation::parse("21534"));
  CHECK(second == Permutation::parse("43512"));
  CHECK(second == first.reversed());
}

TEST_CASE("adfs words of small trees") {
  auto two = make_embedded({"a", "b", "top"}, {"a", "b"}, {{"a", "top"}, {"b", "top"}});
  auto [p, q] = adfs_words(two);
  CHECK(p == Permutation::parse("12"));
  CHECK(q == Permutation::parse("21"));

  auto comb = make_embedded({"a", "b", "c", "ab", "top"}, {"a", "b", "c"},
                            {{"a", "ab"}, {"b", "ab"}, {"ab", "top"}, {"c", "top"}});
  auto [left, right] = adfs_words(comb);
  CHECK(left == Permutation::parse("213"));
  CHECK(right == Permutation::parse("312"));
}

TEST_CASE("adfs rejects non-binary-trees") {
  CHECK_THROWS_AS(adfs_words(dual_claw(4)), Error);
  auto argyle = embedded_from(IntervalPoset::of(Permutation::parse("123")));
  try {
    adfs_words(argyle);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_a_binary_tree);
  }
}

TEST_CASE("adfs words generate their poset across S5") {
  for (int n = 2; n <= 5; ++n)
    for_each_permutation(n, [](const Permutation& w) {
      auto poset = IntervalPoset::of(w);
      if (!classify_poset(poset).is_binary_tree) return;
      auto [first, second] = adfs_words(embedded_from(poset));
      CHECK(second == first.reversed());
      CHECK(IntervalPoset::of(first).equal_to(poset));
      CHECK(IntervalPoset::of(second).equal_to(poset));
    });
}
