#include "ivposet/decomposition.hpp"

#include <algorithm>

namespace ivposet {

namespace {

/// Maximal proper intervals of w padded with the leftover singletons: the
/// value blocks of the simple skeleton, in increasing value order.
std::vector<ValueInterval> skeleton_blocks(const Permutation& w) {
  const int n = w.size();
  auto all = intervals_of(w);
  std::vector<ValueInterval> proper;
  for (const auto& iv : all)
    if (iv.size() >= 2 && iv.size() <= n - 1) proper.push_back(iv);
  std::vector<ValueInterval> maximal;
  for (const auto& iv : proper) {
    bool top = true;
    for (const auto& other : proper)
      if (other != iv && other.contains(iv)) {
        top = false;
        break;
      }
    if (top) maximal.push_back(iv);
  }
  std::sort(maximal.begin(), maximal.end());
  std::vector<ValueInterval> blocks;
  int next = 1;
  for (const auto& iv : maximal) {
    if (iv.lo < next)
      raise(ErrorCode::verification_failure,
            "overlapping maximal intervals in a simple-rooted permutation");
    for (; next < iv.lo; ++next) blocks.push_back({next, next});
    blocks.push_back(iv);
    next = iv.hi + 1;
  }
  for (; next <= n; ++next) blocks.push_back({next, next});
  return blocks;
}

}  // namespace

DecompositionTree substitution_decomposition(const Permutation& w) {
  DecompositionTree node(w);
  const int n = w.size();
  if (n == 1) {
    node.kind = DecompositionTree::Kind::leaf;
    return node;
  }
  if (auto parts = sum_parts(w); parts.size() >= 2) {
    node.kind = DecompositionTree::Kind::sum_chain;
    for (const auto& p : parts) node.parts.push_back(substitution_decomposition(p));
    return node;
  }
  if (auto parts = skew_parts(w); parts.size() >= 2) {
    node.kind = DecompositionTree::Kind::skew_chain;
    for (const auto& p : parts) node.parts.push_back(substitution_decomposition(p));
    return node;
  }

  auto blocks = skeleton_blocks(w);
  const int k = static_cast<int>(blocks.size());
  if (k < 4)
    raise(ErrorCode::verification_failure,
          "simple-rooted decomposition produced a skeleton of length " + std::to_string(k));

  // Skeleton: the value rank of each block read in position order.
  std::vector<int> rank_of_value(static_cast<std::size_t>(n) + 1, 0);
  for (int r = 0; r < k; ++r)
    for (int v = blocks[static_cast<std::size_t>(r)].lo; v <= blocks[static_cast<std::size_t>(r)].hi; ++v)
      rank_of_value[static_cast<std::size_t>(v)] = r + 1;
  std::vector<int> skeleton_word;
  std::vector<int> block_order;  // block rank at each position slot
  int last_rank = 0;
  for (int i = 0; i < n; ++i) {
    int r = rank_of_value[static_cast<std::size_t>(w.at(i))];
    if (skeleton_word.empty() || r != last_rank) {
      skeleton_word.push_back(r);
      block_order.push_back(r);
      last_rank = r;
    }
  }
  Permutation skeleton(skeleton_word);
  if (!is_simple(skeleton) || skeleton.size() != k)
    raise(ErrorCode::verification_failure, "substitution skeleton is not simple");

  node.kind = DecompositionTree::Kind::simple;
  node.skeleton = skeleton;
  for (int slot = 0; slot < k; ++slot) {
    const auto& block = blocks[static_cast<std::size_t>(block_order[static_cast<std::size_t>(slot)] - 1)];
    node.parts.push_back(substitution_decomposition(restrict_to(w, block)));
  }
  return node;
}

Permutation reinflate(const DecompositionTree& t) {
  switch (t.kind) {
    case DecompositionTree::Kind::leaf:
      return t.value;
    case DecompositionTree::Kind::simple: {
      std::vector<Permutation> parts;
      for (const auto& p : t.parts) parts.push_back(reinflate(p));
      return inflate(*t.skeleton, parts);
    }
    case DecompositionTree::Kind::sum_chain: {
      Permutation acc = reinflate(t.parts.front());
      for (std::size_t i = 1; i < t.parts.size(); ++i)
        acc = direct_sum(acc, reinflate(t.parts[i]));
      return acc;
    }
    case DecompositionTree::Kind::skew_chain: {
      Permutation acc = reinflate(t.parts.front());
      for (std::size_t i = 1; i < t.parts.size(); ++i)
        acc = skew_sum(acc, reinflate(t.parts[i]));
      return acc;
    }
  }
  raise(ErrorCode::verification_failure, "corrupt decomposition tree");
}

std::string to_string(const DecompositionTree& t) {
  auto join_parts = [&t]() {
    std::string s;
    for (std::size_t i = 0; i < t.parts.size(); ++i) {
      if (i) s += ',';
      s += t.parts[i].value.str();
    }
    return s;
  };
  switch (t.kind) {
    case DecompositionTree::Kind::leaf:
      return t.value.str();
    case DecompositionTree::Kind::simple:
      return t.skeleton->str() + "[" + join_parts() + "]";
    case DecompositionTree::Kind::sum_chain:
      return "sum[" + join_parts() + "]";
    case DecompositionTree::Kind::skew_chain:
      return "skew[" + join_parts() + "]";
  }
  return {};
}

bool has_monotone_triple_interval(const Permutation& w) {
  for (const auto& iv : intervals_of(w)) {
    if (iv.size() < 3) continue;
    Permutation sub = restrict_to(w, iv);
    if (sum_parts(sub).size() >= 3 || skew_parts(sub).size() >= 3) return true;
  }
  return false;
}

}  // namespace ivposet
