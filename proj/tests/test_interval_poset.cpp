#include <algorithm>
#include <set>

#include "doctest.h"

#include "ivposet/interval_poset.hpp"
#include "oracles.hpp"

using namespace ivposet;

namespace {

IntervalPoset worked_example() { return IntervalPoset::of(Permutation::parse("43187562")); }

std::set<std::pair<std::string, std::string>> cover_labels(const IntervalPoset& poset) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [child, parent] : poset.covers())
    out.insert({poset.label_of(child), poset.label_of(parent)});
  return out;
}

int id_of(const IntervalPoset& poset, int lo, int hi) {
  auto id = poset.index_of({lo, hi});
  REQUIRE(id.has_value());
  return *id;
}

}  // namespace

TEST_CASE("the worked example has the drawn cover relation") {
  auto poset = worked_example();
  CHECK(poset.n() == 8);
  CHECK(poset.interval_count() == 14);
  const std::set<std::pair<std::string, std::string>> expected{
      {"{1}", "[1,8]"}, {"{2}", "[1,8]"},   {"[3,4]", "[1,8]"}, {"[5,8]", "[1,8]"},
      {"{3}", "[3,4]"}, {"{4}", "[3,4]"},   {"[5,7]", "[5,8]"}, {"[7,8]", "[5,8]"},
      {"[5,6]", "[5,7]"}, {"{7}", "[5,7]"}, {"{7}", "[7,8]"},   {"{8}", "[7,8]"},
      {"{5}", "[5,6]"}, {"{6}", "[5,6]"}};
  CHECK(cover_labels(poset) == expected);
}

TEST_CASE("P(123) shares its middle singleton") {
  auto poset = IntervalPoset::of(Permutation::parse("123"));
  CHECK(poset.interval_count() == 6);
  int middle = id_of(poset, 2, 2);
  auto parents = poset.parents_of(middle);
  REQUIRE(parents.size() == 2);
  std::set<std::string> labels{poset.label_of(parents[0]), poset.label_of(parents[1])};
  CHECK(labels == std::set<std::string>{"[1,2]", "[2,3]"});
}

TEST_CASE("simple permutations give a maximum over n minimals") {
  for (const auto& w : simple_permutations(5)) {
    auto poset = IntervalPoset::of(w);
    CHECK(poset.interval_count() == 6);
    CHECK(poset.children_of(poset.root_id()).size() == 5);
  }
}

TEST_CASE("closing adjoins the bottom under exactly the singletons") {
  auto closed = IntervalPoset::of(Permutation::parse("123")).closed();
  CHECK(closed.node_count() == 7);
  int bottom = closed.bottom_id();
  CHECK(closed.parents_of(bottom).size() == 3);
  for (int atom : closed.parents_of(bottom)) CHECK(closed.interval_at(atom).singleton());

  auto pair = IntervalPoset::of(Permutation::parse("12")).closed();
  CHECK(pair.node_count() == 4);

  CHECK_THROWS_AS(closed.closed(), Error);
  for_each_permutation(4, [](const Permutation& w) {
    auto poset = IntervalPoset::of(w);
    CHECK(poset.closed().node_count() == poset.node_count() + 1);
  });
}

TEST_CASE("meet and join on the worked example") {
  auto closed = worked_example().closed();
  CHECK(closed.meet(id_of(closed, 5, 7), id_of(closed, 7, 8)) == id_of(closed, 7, 7));
  CHECK(closed.join(id_of(closed, 5, 6), id_of(closed, 7, 7)) == id_of(closed, 5, 7));
  CHECK(closed.meet(id_of(closed, 1, 1), id_of(closed, 2, 2)) == closed.bottom_id());
  CHECK(closed.join(id_of(closed, 1, 1), id_of(closed, 8, 8)) == closed.root_id());
  CHECK_THROWS_AS(closed.meet(0, 99), Error);
  CHECK_THROWS_AS(worked_example().meet(0, 1), Error);
}

TEST_CASE("meet and join agree with bound scanning through S5") {
  for (int n = 2; n <= 5; ++n)
    for_each_permutation(n, [&](const Permutation& w) {
      auto closed = IntervalPoset::of(w).closed();
      const int m = closed.node_count();
      auto leq = [&](int a, int b) { return closed.leq(a, b); };
      for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b) {
          auto meet = oracles::naive_meet(m, leq, a, b);
          auto join = oracles::naive_join(m, leq, a, b);
          REQUIRE(meet.has_value());
          REQUIRE(join.has_value());
          CHECK(closed.meet(a, b) == *meet);
          CHECK(closed.join(a, b) == *join);
        }
      CHECK(closed.join(0, n - 1) == closed.root_id());
    });
}

TEST_CASE("closed interval posets are lattices; a bowtie is not") {
  for (int n = 2; n <= 5; ++n)
    for_each_permutation(n, [](const Permutation& w) {
      CHECK(IntervalPoset::of(w).closed().is_lattice());
    });
  // two maximal elements over two shared atoms
  auto bowtie = order_masks_from_covers(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK_FALSE(is_lattice(bowtie));
}

TEST_CASE("modularity and distributivity on the named cases") {
  CHECK(IntervalPoset::of(Permutation::parse("2413")).closed().is_modular());
  CHECK_FALSE(IntervalPoset::of(Permutation::parse("123")).closed().is_modular());
  CHECK(IntervalPoset::of(Permutation::parse("12")).closed().is_distributive());
  CHECK(IntervalPoset::of(Permutation::parse("1")).closed().is_distributive());
  CHECK_FALSE(IntervalPoset::of(Permutation::parse("2413")).closed().is_distributive());
}

TEST_CASE("law checks match pentagon and diamond searches over S4") {
  for (int n = 2; n <= 4; ++n)
    for_each_permutation(n, [](const Permutation& w) {
      auto closed = IntervalPoset::of(w).closed();
      bool pentagon = oracles::has_pentagon(closed);
      bool diamond = oracles::has_diamond(closed);
      CHECK(closed.is_modular() == !pentagon);
      CHECK(closed.is_distributive() == (!pentagon && !diamond));
    });
  for (const char* text : {"35142", "12345", "25314", "42513"}) {
    auto closed = IntervalPoset::of(Permutation::parse(text)).closed();
    CHECK(closed.is_modular() == !oracles::has_pentagon(closed));
    CHECK(closed.is_distributive() ==
          (!oracles::has_pentagon(closed) && !oracles::has_diamond(closed)));
  }
}

TEST_CASE("fruitful elements") {
  auto example = worked_example();
  auto fruitful = example.fruitful_elements();
  REQUIRE(fruitful.size() == 1);
  CHECK(example.label_of(fruitful[0]) == "[1,8]");
  CHECK(IntervalPoset::of(Permutation::parse("123")).fruitful_elements().empty());
  auto claw = IntervalPoset::of(Permutation::parse("2413"));
  REQUIRE(claw.fruitful_elements().size() == 1);
  CHECK(claw.label_of(claw.fruitful_elements()[0]) == "[1,4]");
}

TEST_CASE("canonical layout reproduces the drawn levels") {
  auto example = worked_example();
  auto layout = example.canonical_layout();
  REQUIRE(layout.levels.size() == 5);
  auto labels = [&](int depth) {
    std::vector<std::string> out;
    for (int id : layout.levels[static_cast<std::size_t>(depth)]) out.push_back(example.label_of(id));
    return out;
  };
  CHECK(labels(0) == std::vector<std::string>{"[1,8]"});
  CHECK(labels(1) == std::vector<std::string>{"{1}", "{2}", "[3,4]", "[5,8]"});
  CHECK(labels(2) == std::vector<std::string>{"{3}", "{4}", "[5,7]", "[7,8]"});
  CHECK(labels(3) == std::vector<std::string>{"[5,6]", "{7}", "{8}"});
  CHECK(labels(4) == std::vector<std::string>{"{5}", "{6}"});

  auto argyle_poset = IntervalPoset::of(Permutation::parse("123"));
  auto argyle = argyle_poset.canonical_layout();
  REQUIRE(argyle.levels.size() == 3);
  auto argyle_labels = [&](int depth) {
    std::vector<std::string> out;
    for (int id : argyle.levels[static_cast<std::size_t>(depth)])
      out.push_back(argyle_poset.label_of(id));
    return out;
  };
  CHECK(argyle_labels(0) == std::vector<std::string>{"[1,3]"});
  CHECK(argyle_labels(1) == std::vector<std::string>{"[1,2]", "[2,3]"});
  CHECK(argyle_labels(2) == std::vector<std::string>{"{1}", "{2}", "{3}"});

  for (const auto& w : simple_permutations(4))
    CHECK(IntervalPoset::of(w).canonical_layout().levels.size() == 2);
}

TEST_CASE("canonical diagrams are crossing-free; a crossed pair is caught") {
  for (int n = 2; n <= 6; ++n)
    for_each_permutation(n, [](const Permutation& w) {
      CHECK(IntervalPoset::of(w).is_planar_canonical());
    });
  // two parents over two children with the edges swapped
  CanonicalLayout crossed;
  crossed.depth = {1, 1, 0, 0};
  crossed.level_index = {0, 1, 0, 1};
  crossed.levels = {{2, 3}, {0, 1}};
  CHECK_FALSE(layered_crossing_free(crossed, {{0, 3}, {1, 2}}));
  CHECK(layered_crossing_free(crossed, {{0, 2}, {1, 3}}));
}

TEST_CASE("unequal parent depths are a layout error") {
  // 0 -> 1, 0 -> 2, 2 -> 3, then node 4 under both 1 (depth 1) and 3 (depth 2)
  std::vector<std::pair<int, int>> covers{{1, 0}, {2, 0}, {3, 2}, {4, 1}, {4, 3}};
  std::vector<std::pair<int, int>> keys{{1, 5}, {1, 2}, {2, 5}, {2, 4}, {2, 3}};
  CHECK_THROWS_AS(compute_layout(5, 0, covers, keys), Error);
  try {
    compute_layout(5, 0, covers, keys);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::depth_conflict);
  }
}

TEST_CASE("principal ideals restrict the word") {
  auto example = worked_example();
  auto ideal = example.principal_ideal(id_of(example, 5, 8));
  CHECK(ideal.equal_to(IntervalPoset::of(Permutation::parse("4312"))));
  for (int n = 2; n <= 5; ++n)
    for_each_permutation(n, [](const Permutation& w) {
      auto poset = IntervalPoset::of(w);
      for (int id = 0; id < poset.interval_count(); ++id) {
        auto direct = IntervalPoset::of(restrict_to(w, poset.interval_at(id)));
        CHECK(poset.principal_ideal(id).equal_to(direct));
      }
    });
}

TEST_CASE("rank") {
  CHECK(IntervalPoset::of(Permutation::parse("2413")).rank() == 1);
  CHECK(IntervalPoset::of(Permutation::parse("1234")).rank() == 3);
  for_each_permutation(3, [](const Permutation& w) {
    CHECK(IntervalPoset::of(w).rank() == 2);
  });
  for (int n = 2; n <= 5; ++n)
    for_each_permutation(n, [&](const Permutation& w) {
      auto poset = IntervalPoset::of(w);
      CHECK(poset.rank() == oracles::naive_rank(poset));
      CHECK(poset.rank() >= 1);
      CHECK(poset.rank() <= n - 1);
      CHECK(poset.closed().rank() == poset.rank() + 1);
    });
}

TEST_CASE("canonical forms decide equality") {
  auto family = IntervalPoset::of(Permutation::parse("123")).canonical_form();
  CHECK(family == std::vector<ValueInterval>{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}});
  CHECK_FALSE(IntervalPoset::of(Permutation::parse("132"))
                  .equal_to(IntervalPoset::of(Permutation::parse("213"))));
  for (int n = 2; n <= 6; ++n)
    for_each_permutation(n, [](const Permutation& w) {
      CHECK(IntervalPoset::of(w).equal_to(IntervalPoset::of(w.reversed())));
    });
}

TEST_CASE("no element covers exactly one or exactly three through S6") {
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [](const Permutation& w) {
      auto poset = IntervalPoset::of(w);
      for (int id = 0; id < poset.interval_count(); ++id) {
        auto covered = poset.children_of(id).size();
        CHECK(covered != 1);
        CHECK(covered != 3);
      }
    });
}

TEST_CASE("unique covers are exactly the isolated ones through S5") {
  for (int n = 2; n <= 5; ++n)
    for_each_permutation(n, [](const Permutation& w) {
      auto poset = IntervalPoset::of(w);
      for (int h = 0; h < poset.interval_count(); ++h) {
        if (h == poset.root_id()) continue;
        const auto& parents = poset.parents_of(h);
        for (int i : parents) {
          bool above_all = true;
          for (int j = 0; j < poset.interval_count(); ++j)
            if (j != h && poset.leq(h, j) && !poset.leq(i, j)) above_all = false;
          CHECK(above_all == (parents.size() == 1));
        }
      }
    });
}

TEST_CASE("from_family validates its input") {
  CHECK_THROWS_AS(IntervalPoset::from_family({{1, 1}, {2, 2}}, 2), Error);       // no maximum
  CHECK_THROWS_AS(IntervalPoset::from_family({{1, 2}, {1, 1}}, 2), Error);       // no singleton {2}
  CHECK_THROWS_AS(IntervalPoset::from_family({{1, 3}, {1, 1}, {2, 2}}, 2), Error);  // out of range
}
