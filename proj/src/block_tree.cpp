#include "ivposet/block_tree.hpp"

#include <algorithm>
#include <functional>

namespace ivposet {

namespace {

[[noreturn]] void reject(const std::string& why) {
  raise(ErrorCode::not_an_interval_poset, why);
}

/// Membership grid over the intervals of a family.
struct FamilyGrid {
  int n = 0;
  std::vector<char> has;  // (n+1) x (n+1)

  explicit FamilyGrid(const std::vector<ValueInterval>& family, int n_) : n(n_) {
    has.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), 0);
    for (const auto& iv : family) set(iv);
  }
  void set(const ValueInterval& iv) { has[idx(iv.lo, iv.hi)] = 1; }
  bool contains(int lo, int hi) const { return has[idx(lo, hi)] != 0; }
  std::size_t idx(int lo, int hi) const {
    return static_cast<std::size_t>(lo) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(hi);
  }
};

/// Maximal proper sub-intervals of [lo, hi] present in the grid.
std::vector<ValueInterval> covers_of_range(const FamilyGrid& grid, int lo, int hi) {
  std::vector<ValueInterval> inside;
  for (int a = lo; a <= hi; ++a)
    for (int b = a; b <= hi; ++b)
      if ((a != lo || b != hi) && grid.contains(a, b)) inside.push_back({a, b});
  std::vector<ValueInterval> maximal;
  for (const auto& iv : inside) {
    bool top = true;
    for (const auto& other : inside)
      if (other != iv && other.contains(iv)) {
        top = false;
        break;
      }
    if (top) maximal.push_back(iv);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

BlockTree decompose_range(const FamilyGrid& grid, int lo, int hi, bool free_orientation) {
  BlockTree node;
  node.lo = lo;
  node.hi = hi;
  node.free_orientation = free_orientation;
  if (lo == hi) {
    node.kind = BlockTree::Kind::leaf;
    return node;
  }
  if (!grid.contains(lo, hi))
    reject("block [" + std::to_string(lo) + "," + std::to_string(hi) + "] is not an element");

  auto children = covers_of_range(grid, lo, hi);
  const int k = static_cast<int>(children.size());
  if (k == 1)
    reject("element " + to_string(ValueInterval{lo, hi}) + " covers exactly one element");
  if (k == 3)
    reject("element " + to_string(ValueInterval{lo, hi}) + " covers exactly three elements");
  if (k == 0) reject("element with no covered elements below it");

  if (k == 2) {
    node.kind = BlockTree::Kind::chain;
    std::vector<ValueInterval> parts;
    int cur_lo = lo;
    std::vector<ValueInterval> pair = children;
    while (true) {
      const auto& left = pair[0];
      const auto& right = pair[1];
      if (left.lo != cur_lo || right.hi != hi || right.lo <= left.lo)
        reject("the two covered elements of " + to_string(ValueInterval{cur_lo, hi}) +
               " do not span it");
      if (right.lo > left.hi + 1)
        reject("gap between the covered elements of " + to_string(ValueInterval{cur_lo, hi}));
      if (right.lo == left.hi + 1) {
        parts.push_back(left);
        parts.push_back(right);
        break;
      }
      parts.push_back({cur_lo, right.lo - 1});
      cur_lo = right.lo;
      if (!grid.contains(cur_lo, hi))
        reject("chain remainder [" + std::to_string(cur_lo) + "," + std::to_string(hi) +
               "] is not an element");
      pair = covers_of_range(grid, cur_lo, hi);
      if (pair.size() != 2)
        reject("chain remainder " + to_string(ValueInterval{cur_lo, hi}) + " covers " +
               std::to_string(pair.size()) + " elements");
    }
    for (const auto& part : parts)
      node.children.push_back(decompose_range(grid, part.lo, part.hi, false));
    return node;
  }

  // k >= 4: dual claw; the covered elements must tile [lo, hi] disjointly.
  node.kind = BlockTree::Kind::dual_claw;
  int next = lo;
  for (const auto& child : children) {
    if (child.lo != next)
      reject(child.lo < next ? "dual-claw children overlap" : "dual-claw children leave a gap");
    next = child.hi + 1;
  }
  if (next != hi + 1) reject("dual-claw children do not reach the top of the block");
  for (const auto& child : children)
    node.children.push_back(decompose_range(grid, child.lo, child.hi, true));
  return node;
}

void expand_into(const BlockTree& tree, std::vector<ValueInterval>& out) {
  switch (tree.kind) {
    case BlockTree::Kind::leaf:
      out.push_back({tree.lo, tree.hi});
      return;
    case BlockTree::Kind::dual_claw:
      out.push_back({tree.lo, tree.hi});
      for (const auto& child : tree.children) expand_into(child, out);
      return;
    case BlockTree::Kind::chain:
      for (std::size_t i = 0; i < tree.children.size(); ++i)
        for (std::size_t j = i + 1; j < tree.children.size(); ++j)
          out.push_back({tree.children[i].lo, tree.children[j].hi});
      for (const auto& part : tree.children) expand_into(part, out);
      return;
  }
}

BlockTree recognize_family(const std::vector<ValueInterval>& family, int n) {
  FamilyGrid grid(family, n);
  BlockTree tree = decompose_range(grid, 1, n, true);
  auto expanded = expand_family(tree);
  if (expanded != family) reject("block decomposition does not reproduce the poset");
  return tree;
}

/// #generators that are sum indecomposable always equals #skew indecomposable;
/// chains double that number by choosing a direction.
struct GeneratorCount {
  std::uint64_t indecomposable = 0;
  std::uint64_t total = 0;
};

GeneratorCount count_rec(const BlockTree& tree) {
  switch (tree.kind) {
    case BlockTree::Kind::leaf:
      return {1, 1};
    case BlockTree::Kind::dual_claw: {
      std::uint64_t t = simple_count(static_cast<int>(tree.children.size()));
      for (const auto& child : tree.children) t *= count_rec(child).total;
      return {t, t};
    }
    case BlockTree::Kind::chain: {
      std::uint64_t a = 1;
      for (const auto& part : tree.children) a *= count_rec(part).indecomposable;
      return {a, 2 * a};
    }
  }
  raise(ErrorCode::verification_failure, "corrupt block tree");
}

void product_over(const std::vector<std::vector<Permutation>>& choices,
                  const std::function<void(const std::vector<const Permutation*>&)>& fn) {
  std::vector<std::size_t> pick(choices.size(), 0);
  std::vector<const Permutation*> current(choices.size(), nullptr);
  for (const auto& set : choices)
    if (set.empty()) return;
  while (true) {
    for (std::size_t i = 0; i < choices.size(); ++i) current[i] = &choices[i][pick[i]];
    fn(current);
    std::size_t i = choices.size();
    while (i > 0) {
      --i;
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
      if (i == 0) return;
    }
  }
}

std::vector<Permutation> assemble(const BlockTree& tree) {
  std::vector<Permutation> out;
  switch (tree.kind) {
    case BlockTree::Kind::leaf:
      out.push_back(Permutation::identity(1));
      return out;
    case BlockTree::Kind::dual_claw: {
      const int k = static_cast<int>(tree.children.size());
      std::vector<std::vector<Permutation>> slots;
      for (const auto& child : tree.children) slots.push_back(assemble(child));
      for (const auto& skeleton : simple_permutations(k))
        product_over(slots, [&](const std::vector<const Permutation*>& choice) {
          // Position i of the skeleton takes the generator of its value block.
          std::vector<Permutation> parts;
          parts.reserve(static_cast<std::size_t>(k));
          for (int i = 0; i < k; ++i)
            parts.push_back(*choice[static_cast<std::size_t>(skeleton.at(i) - 1)]);
          out.push_back(inflate(skeleton, parts));
        });
      return out;
    }
    case BlockTree::Kind::chain: {
      std::vector<std::vector<Permutation>> sum_choices, skew_choices;
      for (const auto& part : tree.children) {
        auto gens = assemble(part);
        std::vector<Permutation> si, ki;
        for (const auto& g : gens) {
          if (!is_sum_decomposable(g)) si.push_back(g);
          if (!is_skew_decomposable(g)) ki.push_back(g);
        }
        sum_choices.push_back(std::move(si));
        skew_choices.push_back(std::move(ki));
      }
      product_over(sum_choices, [&](const std::vector<const Permutation*>& choice) {
        Permutation acc = *choice.front();
        for (std::size_t i = 1; i < choice.size(); ++i) acc = direct_sum(acc, *choice[i]);
        out.push_back(std::move(acc));
      });
      // Skew realization: the last value block comes first in position order.
      product_over(skew_choices, [&](const std::vector<const Permutation*>& choice) {
        Permutation acc = *choice.back();
        for (std::size_t i = choice.size() - 1; i-- > 0;) acc = skew_sum(acc, *choice[i]);
        out.push_back(std::move(acc));
      });
      return out;
    }
  }
  raise(ErrorCode::verification_failure, "corrupt block tree");
}

}  // namespace

std::string to_string(const BlockTree& tree) {
  std::string range = tree.lo == tree.hi
                          ? "[" + std::to_string(tree.lo) + "]"
                          : "[" + std::to_string(tree.lo) + "," + std::to_string(tree.hi) + "]";
  switch (tree.kind) {
    case BlockTree::Kind::leaf:
      return "leaf" + range;
    case BlockTree::Kind::dual_claw:
    case BlockTree::Kind::chain: {
      std::string head = tree.kind == BlockTree::Kind::dual_claw ? "claw" : "chain";
      if (tree.kind == BlockTree::Kind::chain && !tree.free_orientation) head += "*";
      std::string s = head + range + "(";
      for (std::size_t i = 0; i < tree.children.size(); ++i) {
        if (i) s += ", ";
        s += to_string(tree.children[i]);
      }
      return s + ")";
    }
  }
  return {};
}

BlockTree recognize(const IntervalPoset& poset) {
  return recognize_family(poset.canonical_form(), poset.n());
}

BlockTree recognize(const EmbeddedPoset& poset) {
  auto family = interval_family(poset);
  return recognize_family(family, poset.n());
}

std::vector<ValueInterval> interval_family(const EmbeddedPoset& poset) {
  const int count = poset.node_count();
  if (count == 0) reject("poset has no nodes");
  if (poset.min_order.empty()) reject("poset lists no minimal elements");
  const int n = poset.n();

  OrderMasks masks = order_masks_from_covers(count, poset.covers);

  std::vector<int> child_degree(static_cast<std::size_t>(count), 0);
  std::vector<int> parent_degree(static_cast<std::size_t>(count), 0);
  for (const auto& [child, parent] : poset.covers) {
    ++child_degree[static_cast<std::size_t>(parent)];
    ++parent_degree[static_cast<std::size_t>(child)];
  }
  std::vector<char> is_minimal(static_cast<std::size_t>(count), 0);
  for (int idx : poset.min_order) {
    if (child_degree[static_cast<std::size_t>(idx)] != 0)
      reject("min_order lists node '" + poset.node_ids[static_cast<std::size_t>(idx)] +
             "', which covers other nodes");
    is_minimal[static_cast<std::size_t>(idx)] = 1;
  }
  int root = -1;
  for (int node = 0; node < count; ++node) {
    if (child_degree[static_cast<std::size_t>(node)] == 0 && !is_minimal[static_cast<std::size_t>(node)])
      reject("node '" + poset.node_ids[static_cast<std::size_t>(node)] +
             "' is minimal but missing from min_order");
    if (parent_degree[static_cast<std::size_t>(node)] == 0) {
      if (root >= 0) reject("poset has more than one maximal element");
      root = node;
    }
  }
  if (root < 0) reject("poset has no maximal element");

  // Minimal support of each node, as positions in min_order.
  std::vector<ValueInterval> support(static_cast<std::size_t>(count));
  for (int node = 0; node < count; ++node) {
    int first = 0, last = 0, hits = 0;
    for (int p = 0; p < n; ++p)
      if (masks.down[static_cast<std::size_t>(node)].test(
              static_cast<std::size_t>(poset.min_order[static_cast<std::size_t>(p)]))) {
        if (hits == 0) first = p + 1;
        last = p + 1;
        ++hits;
      }
    if (hits == 0)
      reject("node '" + poset.node_ids[static_cast<std::size_t>(node)] +
             "' has no minimal element below it");
    if (last - first + 1 != hits)
      reject("minimal support of node '" + poset.node_ids[static_cast<std::size_t>(node)] +
             "' is not contiguous");
    support[static_cast<std::size_t>(node)] = {first, last};
  }
  if (support[static_cast<std::size_t>(root)] != ValueInterval{1, n})
    reject("the maximal element does not sit above every minimal element");

  for (int u = 0; u < count; ++u)
    for (int v = 0; v < count; ++v) {
      if (u == v) continue;
      const auto& su = support[static_cast<std::size_t>(u)];
      const auto& sv = support[static_cast<std::size_t>(v)];
      if (su == sv)
        reject("nodes '" + poset.node_ids[static_cast<std::size_t>(u)] + "' and '" +
               poset.node_ids[static_cast<std::size_t>(v)] + "' have identical minimal support");
      if (sv.contains(su) && !masks.leq(u, v))
        reject("support inclusion of '" + poset.node_ids[static_cast<std::size_t>(u)] +
               "' in '" + poset.node_ids[static_cast<std::size_t>(v)] +
               "' is not realized by the order");
    }
  for (const auto& [child, parent] : poset.covers)
    for (int z = 0; z < count; ++z) {
      if (z == child || z == parent) continue;
      if (support[static_cast<std::size_t>(parent)].contains(support[static_cast<std::size_t>(z)]) &&
          support[static_cast<std::size_t>(z)].contains(support[static_cast<std::size_t>(child)]))
        reject("cover pair ('" + poset.node_ids[static_cast<std::size_t>(child)] + "', '" +
               poset.node_ids[static_cast<std::size_t>(parent)] + "') is not a cover");
    }

  std::vector<ValueInterval> family(support.begin(), support.end());
  std::sort(family.begin(), family.end());
  return family;
}

IntervalPoset realize(const EmbeddedPoset& poset) {
  auto family = interval_family(poset);
  recognize_family(family, poset.n());
  return IntervalPoset::from_family(family, poset.n());
}

std::vector<ValueInterval> expand_family(const BlockTree& tree) {
  std::vector<ValueInterval> out;
  expand_into(tree, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t count_generators(const BlockTree& tree) { return count_rec(tree).total; }

std::vector<Permutation> generators(const BlockTree& tree) {
  auto family = expand_family(tree);
  auto out = assemble(tree);
  for (const auto& g : out)
    if (intervals_of(g) != family)
      raise(ErrorCode::verification_failure,
            "assembled generator " + g.str() + " does not produce the recognized poset");
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Permutation, Permutation> adfs_words(const EmbeddedPoset& poset) {
  const int count = poset.node_count();
  if (count == 0) raise(ErrorCode::not_a_binary_tree, "poset has no nodes");
  const int n = poset.n();

  std::vector<std::vector<int>> children(static_cast<std::size_t>(count));
  std::vector<int> parent_degree(static_cast<std::size_t>(count), 0);
  for (const auto& [child, parent] : poset.covers) {
    children[static_cast<std::size_t>(parent)].push_back(child);
    ++parent_degree[static_cast<std::size_t>(child)];
  }
  std::vector<char> is_minimal(static_cast<std::size_t>(count), 0);
  std::vector<int> min_position(static_cast<std::size_t>(count), 0);
  for (int p = 0; p < n; ++p) {
    int node = poset.min_order[static_cast<std::size_t>(p)];
    is_minimal[static_cast<std::size_t>(node)] = 1;
    min_position[static_cast<std::size_t>(node)] = p + 1;
  }
  int root = -1;
  for (int node = 0; node < count; ++node) {
    if (parent_degree[static_cast<std::size_t>(node)] > 1)
      raise(ErrorCode::not_a_binary_tree, "Hasse diagram is not a tree");
    if (parent_degree[static_cast<std::size_t>(node)] == 0) {
      if (root >= 0) raise(ErrorCode::not_a_binary_tree, "poset has more than one maximal element");
      root = node;
    }
    std::size_t kids = children[static_cast<std::size_t>(node)].size();
    if (is_minimal[static_cast<std::size_t>(node)]) {
      if (kids != 0)
        raise(ErrorCode::not_a_binary_tree, "a listed minimal element covers other nodes");
    } else if (kids != 2) {
      raise(ErrorCode::not_a_binary_tree, "an internal node does not have exactly two children");
    }
  }
  if (root < 0) raise(ErrorCode::not_a_binary_tree, "poset has no maximal element");

  // Leaf range of each subtree; children must carve adjacent ranges so the
  // left-first search meets the leaves in min_order.
  std::vector<ValueInterval> range(static_cast<std::size_t>(count));
  std::function<ValueInterval(int)> ranges = [&](int node) -> ValueInterval {
    if (is_minimal[static_cast<std::size_t>(node)]) {
      range[static_cast<std::size_t>(node)] = {min_position[static_cast<std::size_t>(node)],
                                               min_position[static_cast<std::size_t>(node)]};
      return range[static_cast<std::size_t>(node)];
    }
    auto& kids = children[static_cast<std::size_t>(node)];
    ValueInterval a = ranges(kids[0]);
    ValueInterval b = ranges(kids[1]);
    if (a.lo > b.lo) {
      std::swap(kids[0], kids[1]);
      std::swap(a, b);
    }
    if (b.lo != a.hi + 1)
      raise(ErrorCode::not_a_binary_tree, "children leaf ranges are not adjacent in min_order");
    range[static_cast<std::size_t>(node)] = {a.lo, b.hi};
    return range[static_cast<std::size_t>(node)];
  };
  if (ranges(root) != ValueInterval{1, n})
    raise(ErrorCode::not_a_binary_tree, "leaves do not cover min_order");

  auto search = [&](bool left_first_at_even) {
    std::vector<int> word;
    std::function<void(int, int)> walk = [&](int node, int depth) {
      if (is_minimal[static_cast<std::size_t>(node)]) {
        word.push_back(min_position[static_cast<std::size_t>(node)]);
        return;
      }
      bool left_first = (depth % 2 == 0) ? left_first_at_even : !left_first_at_even;
      const auto& kids = children[static_cast<std::size_t>(node)];
      walk(kids[left_first ? 0 : 1], depth + 1);
      walk(kids[left_first ? 1 : 0], depth + 1);
    };
    walk(root, 0);
    return Permutation(word);
  };
  return {search(true), search(false)};
}

}  // namespace ivposet
