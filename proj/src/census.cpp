#include "ivposet/census.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "ivposet/block_tree.hpp"
#include "ivposet/classify.hpp"
#include "ivposet/interval_poset.hpp"

#include "json.hpp"

namespace ivposet {

namespace {

struct Shard {
  std::map<std::vector<ValueInterval>, std::vector<Permutation>> classes;
  std::vector<Violation> violations;
  std::uint64_t simple = 0;
  std::uint64_t separable = 0;
};

void check(Shard& shard, bool ok, const char* law, const Permutation& w,
           const std::string& detail = {}) {
  if (!ok) shard.violations.push_back({law, w.str() + (detail.empty() ? "" : " " + detail)});
}

void check_fruitful_laws(const Permutation& w, const IntervalPoset& poset, Shard& shard) {
  const int n = w.size();
  for (int f : poset.fruitful_elements()) {
    const auto& top = poset.interval_at(f);
    std::vector<ValueInterval> kids;
    for (int c : poset.children_of(f)) kids.push_back(poset.interval_at(c));
    std::sort(kids.begin(), kids.end());
    bool disjoint = true;
    int next = top.lo;
    for (const auto& kid : kids) {
      if (kid.lo != next) disjoint = false;
      next = kid.hi + 1;
    }
    if (next != top.hi + 1) disjoint = false;
    check(shard, disjoint, "fruitful_children_tile", w, poset.label_of(f));
    bool unique_parent = true;
    for (int c : poset.children_of(f))
      if (poset.parents_of(c).size() != 1) unique_parent = false;
    check(shard, unique_parent, "fruitful_unique_parent", w, poset.label_of(f));
    if (!disjoint) continue;
    // Contract the children inside the fruitful interval; the quotient must
    // be a simple permutation on >= 4 letters.
    std::vector<int> rank_of_value(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t r = 0; r < kids.size(); ++r)
      for (int v = kids[r].lo; v <= kids[r].hi; ++v)
        rank_of_value[static_cast<std::size_t>(v)] = static_cast<int>(r) + 1;
    std::vector<int> quotient;
    for (int i = 0; i < n; ++i) {
      if (!top.contains_value(w.at(i))) continue;
      int r = rank_of_value[static_cast<std::size_t>(w.at(i))];
      if (quotient.empty() || quotient.back() != r) quotient.push_back(r);
    }
    bool simple_quotient = false;
    try {
      Permutation v(quotient);
      simple_quotient = v.size() == static_cast<int>(kids.size()) && v.size() >= 4 && is_simple(v);
    } catch (const Error&) {
      simple_quotient = false;
    }
    check(shard, simple_quotient, "fruitful_quotient_simple", w, poset.label_of(f));
  }
}

void check_isolated_cover_law(const Permutation& w, const IntervalPoset& poset, Shard& shard) {
  for (int h = 0; h < poset.interval_count(); ++h) {
    if (h == poset.root_id()) continue;
    const auto& parents = poset.parents_of(h);
    for (int i : parents) {
      bool everything_above_h_is_over_i = true;
      for (int j = 0; j < poset.interval_count(); ++j) {
        if (j == h || !poset.leq(h, j)) continue;
        if (!poset.leq(i, j)) everything_above_h_is_over_i = false;
      }
      check(shard, everything_above_h_is_over_i == (parents.size() == 1), "isolated_cover", w,
            poset.label_of(h) + " under " + poset.label_of(i));
    }
  }
}

void examine(const Permutation& w, int n, const CensusOptions& options, Shard& shard) {
  IntervalPoset poset = IntervalPoset::of(w);
  shard.classes[poset.canonical_form()].push_back(w);

  const bool simple = is_simple(w);
  if (simple) ++shard.simple;
  if (is_separable(w)) ++shard.separable;

  check(shard, classify_poset(poset) == classify_permutation(w), "classify_agreement", w);
  check(shard, intervals_of(w.reversed()) == poset.canonical_form(), "reverse_family", w);

  if (options.structural_laws) {
    const int m = poset.interval_count();
    for (int id = 0; id < m; ++id) {
      std::size_t covered = poset.children_of(id).size();
      check(shard, covered != 1 && covered != 3, "cover_taboo", w, poset.label_of(id));
    }
    const int bound = n * (n + 1) / 2;
    const bool monotone =
        w == Permutation::identity(n) || w == Permutation::identity(n).reversed();
    check(shard, m <= bound, "size_bound", w);
    check(shard, (m == bound) == monotone, "size_bound_equality", w);
    check(shard, simple == (m == n + 1), "simple_iff_n_plus_one", w);

    try {
      check(shard, poset.is_planar_canonical(), "planar", w);
    } catch (const Error& e) {
      shard.violations.push_back({"layout_depth", w.str() + std::string(": ") + e.what()});
    }

    IntervalPoset closed = poset.closed();
    bool lattice = closed.is_lattice();
    check(shard, lattice, "lattice", w);
    if (lattice) {
      bool modular = closed.is_modular();
      bool distributive = closed.is_distributive();
      check(shard, modular == simple, "modular_iff_simple", w);
      check(shard, distributive == (n <= 2), "distributive_iff_small", w);
      check(shard, poset.fruitful_elements().empty() || !distributive,
            "fruitful_not_distributive", w);
    }

    check_fruitful_laws(w, poset, shard);
    check_isolated_cover_law(w, poset, shard);

    int r = poset.rank();
    check(shard, r >= 1 && r <= n - 1, "rank_range", w, std::to_string(r));
  }

  if (options.ideal_law) {
    for (int id = 0; id < poset.interval_count(); ++id) {
      auto ideal = poset.principal_ideal(id);
      auto direct = IntervalPoset::of(restrict_to(w, poset.interval_at(id)));
      check(shard, ideal.equal_to(direct), "ideal_restriction", w, poset.label_of(id));
    }
  }
}

bool is_dual_claw_family(const std::vector<ValueInterval>& family, int n) {
  return static_cast<int>(family.size()) == n + 1;
}

}  // namespace

CensusReport census(int n, const CensusOptions& options) {
  if (n < 2 || n > 10) raise(ErrorCode::bad_argument, "census supports 2 <= n <= 10");
  const int threads = std::clamp(options.threads, 1, 64);
  const std::uint64_t total = factorial(n);
  constexpr std::uint64_t kBlock = 5040;

  std::vector<Shard> shards(static_cast<std::size_t>(threads));
  std::atomic<std::uint64_t> next_block{0};
  auto run = [&](int t) {
    while (true) {
      std::uint64_t begin = next_block.fetch_add(1) * kBlock;
      if (begin >= total) return;
      std::uint64_t end = std::min(total, begin + kBlock);
      std::vector<int> word = nth_permutation(n, begin).word();
      for (std::uint64_t i = begin; i < end; ++i) {
        examine(Permutation(word), n, options, shards[static_cast<std::size_t>(t)]);
        std::next_permutation(word.begin(), word.end());
      }
    }
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(run, t);
    for (auto& worker : pool) worker.join();
  }

  std::map<std::vector<ValueInterval>, std::vector<Permutation>> classes;
  CensusReport report;
  report.n = n;
  report.total_perms = total;
  for (auto& shard : shards) {
    for (auto& [family, members] : shard.classes) {
      auto& dest = classes[family];
      dest.insert(dest.end(), members.begin(), members.end());
    }
    report.violations.insert(report.violations.end(), shard.violations.begin(),
                             shard.violations.end());
    report.simple_count += shard.simple;
    report.separable_count += shard.separable;
  }

  std::uint64_t member_total = 0;
  for (auto& [family, members] : classes) {
    std::sort(members.begin(), members.end());
    member_total += members.size();
    IntervalPoset poset = IntervalPoset::from_family(family, n);
    auto flags = classify_poset(poset);
    if (flags.is_tree) ++report.tree_poset_count;
    if (flags.is_binary) ++report.binary_poset_count;
    if (flags.is_binary_tree) {
      ++report.binary_tree_poset_count;
      report.binary_tree_generator_total += members.size();
    }
    if (members.size() == 2) ++report.two_generator_poset_count;
    if (flags.is_binary) {
      ++report.fruitless_class_count;
      if (members.size() == 2) ++report.fruitless_two_generator_classes;
    }

    if (options.class_checks) {
      ++report.classes_checked;
      const std::string rep = members.front().str();
      try {
        BlockTree tree = recognize(poset);
        if (count_generators(tree) == members.size())
          ++report.generator_count_matches;
        else
          report.violations.push_back(
              {"count_matches_class",
               rep + " expected " + std::to_string(members.size()) + " got " +
                   std::to_string(count_generators(tree))});
        if (ivposet::generators(tree) != members)
          report.violations.push_back({"generators_match_class", rep});
      } catch (const Error& e) {
        report.violations.push_back({"recognize_accepts", rep + std::string(": ") + e.what()});
      }
      bool closed_under_reverse = true;
      for (const auto& member : members)
        if (!std::binary_search(members.begin(), members.end(), member.reversed()))
          closed_under_reverse = false;
      if (!closed_under_reverse)
        report.violations.push_back({"class_closed_under_reverse", rep});
      if (flags.is_binary && members.size() != 2)
        report.violations.push_back({"fruitless_two_generators", rep});
      if (members.size() == 2 && !flags.is_binary && !is_dual_claw_family(family, n))
        report.violations.push_back({"two_generator_structure", rep});
    }
  }
  report.distinct_posets = classes.size();
  if (member_total != total)
    report.violations.push_back({"class_total", "classes cover " + std::to_string(member_total) +
                                                    " of " + std::to_string(total)});
  if (2 * report.distinct_posets > total)
    report.violations.push_back({"poset_count_bound", std::to_string(report.distinct_posets)});
  // The n!/2 bound is strict once simp(n) exceeds a single reverse pair; at
  // n = 4 the two simple permutations are reverses, so equality holds there.
  if (n >= 5 && 2 * report.distinct_posets == total)
    report.violations.push_back(
        {"poset_count_strict_bound", std::to_string(report.distinct_posets)});

  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::pair(a.law, a.context) < std::pair(b.law, b.context);
            });
  report.identities = verify_identities(report);
  return report;
}

std::vector<IdentityVerdict> verify_identities(const CensusReport& report) {
  std::vector<IdentityVerdict> out;
  auto add = [&out](std::string name, std::uint64_t expected, std::uint64_t actual) {
    out.push_back({std::move(name), expected, actual, expected == actual});
  };
  add("binary_tree_posets_are_catalan", catalan(report.n - 1), report.binary_tree_poset_count);
  add("binary_tree_generators_are_two_catalan", 2 * catalan(report.n - 1),
      report.binary_tree_generator_total);
  add("twice_binary_posets_is_separable_count", report.separable_count,
      2 * report.binary_poset_count);
  add("fruitless_classes_have_two_generators", report.fruitless_class_count,
      report.fruitless_two_generator_classes);
  return out;
}

std::string report_to_json(const CensusReport& report) {
  nlohmann::json doc;
  doc["n"] = report.n;
  doc["total_perms"] = report.total_perms;
  doc["distinct_posets"] = report.distinct_posets;
  doc["simple_count"] = report.simple_count;
  doc["tree_poset_count"] = report.tree_poset_count;
  doc["binary_poset_count"] = report.binary_poset_count;
  doc["binary_tree_poset_count"] = report.binary_tree_poset_count;
  doc["binary_tree_generator_total"] = report.binary_tree_generator_total;
  doc["two_generator_poset_count"] = report.two_generator_poset_count;
  doc["separable_count"] = report.separable_count;
  doc["fruitless_class_count"] = report.fruitless_class_count;
  doc["classes_checked"] = report.classes_checked;
  doc["generator_count_matches"] = report.generator_count_matches;
  doc["violations"] = nlohmann::json::array();
  for (const auto& v : report.violations)
    doc["violations"].push_back({{"law", v.law}, {"context", v.context}});
  doc["identities"] = nlohmann::json::array();
  for (const auto& id : report.identities)
    doc["identities"].push_back({{"name", id.name},
                                 {"expected", id.expected},
                                 {"actual", id.actual},
                                 {"pass", id.pass}});
  return doc.dump(2) + "\n";
}

std::string report_to_text(const CensusReport& report) {
  std::ostringstream out;
  auto row = [&out](const char* label, std::uint64_t value) {
    out << "  " << label;
    for (std::size_t i = std::string(label).size(); i < 28; ++i) out << ' ';
    out << value << "\n";
  };
  out << "census n=" << report.n << "\n";
  row("total permutations", report.total_perms);
  row("distinct posets", report.distinct_posets);
  row("simple permutations", report.simple_count);
  row("tree posets", report.tree_poset_count);
  row("binary posets", report.binary_poset_count);
  row("binary tree posets", report.binary_tree_poset_count);
  row("binary tree generators", report.binary_tree_generator_total);
  row("two-generator posets", report.two_generator_poset_count);
  row("separable permutations", report.separable_count);
  row("classes checked", report.classes_checked);
  row("generator count matches", report.generator_count_matches);
  row("violations", report.violations.size());
  for (const auto& v : report.violations)
    out << "  VIOLATION " << v.law << ": " << v.context << "\n";
  out << "identities\n";
  for (const auto& id : report.identities)
    out << "  " << (id.pass ? "PASS" : "FAIL") << " " << id.name << ": expected " << id.expected
        << ", got " << id.actual << "\n";
  return out.str();
}

std::uint64_t catalan(int k) {
  if (k < 0) raise(ErrorCode::bad_argument, "catalan index must be nonnegative");
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i)
    c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (static_cast<std::uint64_t>(i) + 2);
  return c;
}

}  // namespace ivposet
