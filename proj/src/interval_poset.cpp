#include "ivposet/interval_poset.hpp"

#include <algorithm>
#include <deque>

namespace ivposet {

CanonicalLayout compute_layout(int count, int root,
                               const std::vector<std::pair<int, int>>& covers,
                               const std::vector<std::pair<int, int>>& order_key) {
  std::vector<std::vector<int>> children(static_cast<std::size_t>(count));
  std::vector<std::vector<int>> parents(static_cast<std::size_t>(count));
  for (const auto& [child, parent] : covers) {
    children[static_cast<std::size_t>(parent)].push_back(child);
    parents[static_cast<std::size_t>(child)].push_back(parent);
  }
  CanonicalLayout layout;
  layout.depth.assign(static_cast<std::size_t>(count), -1);
  layout.depth[static_cast<std::size_t>(root)] = 0;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    int node = queue.front();
    queue.pop_front();
    for (int c : children[static_cast<std::size_t>(node)])
      if (layout.depth[static_cast<std::size_t>(c)] < 0) {
        layout.depth[static_cast<std::size_t>(c)] = layout.depth[static_cast<std::size_t>(node)] + 1;
        queue.push_back(c);
      }
  }
  for (int node = 0; node < count; ++node) {
    if (layout.depth[static_cast<std::size_t>(node)] < 0)
      raise(ErrorCode::depth_conflict, "node unreachable from the maximal element");
    for (int p : parents[static_cast<std::size_t>(node)])
      if (layout.depth[static_cast<std::size_t>(p)] !=
          layout.depth[static_cast<std::size_t>(node)] - 1)
        raise(ErrorCode::depth_conflict,
              "parents of a node sit at unequal depths; no canonical level assignment");
  }
  int max_depth = 0;
  for (int d : layout.depth) max_depth = std::max(max_depth, d);
  layout.levels.assign(static_cast<std::size_t>(max_depth) + 1, {});
  for (int node = 0; node < count; ++node)
    layout.levels[static_cast<std::size_t>(layout.depth[static_cast<std::size_t>(node)])].push_back(node);
  layout.level_index.assign(static_cast<std::size_t>(count), 0);
  for (auto& level : layout.levels) {
    std::sort(level.begin(), level.end(), [&](int a, int b) {
      return order_key[static_cast<std::size_t>(a)] < order_key[static_cast<std::size_t>(b)];
    });
    for (std::size_t i = 0; i < level.size(); ++i)
      layout.level_index[static_cast<std::size_t>(level[i])] = static_cast<int>(i);
  }
  return layout;
}

bool layered_crossing_free(const CanonicalLayout& layout,
                           const std::vector<std::pair<int, int>>& covers) {
  for (std::size_t i = 0; i < covers.size(); ++i)
    for (std::size_t j = i + 1; j < covers.size(); ++j) {
      const auto& [c1, p1] = covers[i];
      const auto& [c2, p2] = covers[j];
      if (layout.depth[static_cast<std::size_t>(c1)] != layout.depth[static_cast<std::size_t>(c2)] ||
          layout.depth[static_cast<std::size_t>(p1)] != layout.depth[static_cast<std::size_t>(p2)])
        continue;
      int dc = layout.level_index[static_cast<std::size_t>(c1)] - layout.level_index[static_cast<std::size_t>(c2)];
      int dp = layout.level_index[static_cast<std::size_t>(p1)] - layout.level_index[static_cast<std::size_t>(p2)];
      if (dc != 0 && dp != 0 && (dc > 0) != (dp > 0)) return false;
    }
  return true;
}

IntervalPoset IntervalPoset::of(const Permutation& w) {
  return from_family(intervals_of(w), w.size());
}

IntervalPoset IntervalPoset::from_family(std::vector<ValueInterval> family, int n) {
  if (n < 1) raise(ErrorCode::bad_argument, "poset needs at least one minimal element");
  if (n > 15)
    raise(ErrorCode::unsupported, "interval posets supported up to n = 15 minimal elements");
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<char> has_singleton(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& iv : family) {
    if (iv.lo < 1 || iv.hi > n || iv.lo > iv.hi)
      raise(ErrorCode::bad_argument, "interval " + to_string(iv) + " outside [1.." + std::to_string(n) + "]");
    if (iv.singleton()) has_singleton[static_cast<std::size_t>(iv.lo)] = 1;
  }
  for (int v = 1; v <= n; ++v)
    if (!has_singleton[static_cast<std::size_t>(v)])
      raise(ErrorCode::bad_argument, "family is missing singleton {" + std::to_string(v) + "}");
  if (std::find(family.begin(), family.end(), ValueInterval{1, n}) == family.end())
    raise(ErrorCode::bad_argument, "family is missing the maximal interval");

  IntervalPoset poset;
  poset.n_ = n;
  // Singletons in value order, then the rest by (size, lo). Since inclusion is
  // strict on size, ids are topologically ordered child-before-parent.
  for (int v = 1; v <= n; ++v) poset.elements_.push_back({v, v});
  std::vector<ValueInterval> rest;
  for (const auto& iv : family)
    if (!iv.singleton()) rest.push_back(iv);
  std::sort(rest.begin(), rest.end(), [](const ValueInterval& a, const ValueInterval& b) {
    return std::pair(a.size(), a.lo) < std::pair(b.size(), b.lo);
  });
  poset.elements_.insert(poset.elements_.end(), rest.begin(), rest.end());
  poset.build_relations();
  return poset;
}

void IntervalPoset::build_relations() {
  const int m = interval_count();
  root_ = m - 1;  // [1, n] is the unique largest element and sorts last
  covers_.clear();
  for (int child = 0; child < m; ++child)
    for (int parent = child + 1; parent < m; ++parent) {
      const auto& small = elements_[static_cast<std::size_t>(child)];
      const auto& big = elements_[static_cast<std::size_t>(parent)];
      if (!big.contains(small) || big == small) continue;
      bool direct = true;
      for (int mid = child + 1; mid < parent && direct; ++mid) {
        const auto& between = elements_[static_cast<std::size_t>(mid)];
        if (between != small && between != big && big.contains(between) && between.contains(small))
          direct = false;
      }
      if (direct) covers_.emplace_back(child, parent);
    }
  if (has_bottom_)
    for (int v = 0; v < n_; ++v) covers_.emplace_back(node_count() - 1, v);
  std::sort(covers_.begin(), covers_.end());
  children_.assign(static_cast<std::size_t>(node_count()), {});
  parents_.assign(static_cast<std::size_t>(node_count()), {});
  for (const auto& [child, parent] : covers_) {
    children_[static_cast<std::size_t>(parent)].push_back(child);
    parents_[static_cast<std::size_t>(child)].push_back(parent);
  }
  order_ = order_masks_from_covers(node_count(), covers_);
}

int IntervalPoset::bottom_id() const {
  if (!has_bottom_) raise(ErrorCode::not_closed, "poset has no bottom element");
  return interval_count();
}

const ValueInterval& IntervalPoset::interval_at(int id) const {
  if (id < 0 || id >= interval_count())
    raise(ErrorCode::not_an_element, "id " + std::to_string(id) + " is not an interval element");
  return elements_[static_cast<std::size_t>(id)];
}

std::optional<int> IntervalPoset::index_of(const ValueInterval& iv) const {
  if (iv.singleton()) {
    if (iv.lo >= 1 && iv.lo <= n_) return iv.lo - 1;
    return std::nullopt;
  }
  auto begin = elements_.begin() + n_;
  auto it = std::find(begin, elements_.end(), iv);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<int>(it - elements_.begin());
}

std::string IntervalPoset::label_of(int id) const {
  if (is_bottom(id)) return "0";
  return to_string(interval_at(id));
}

const std::vector<int>& IntervalPoset::children_of(int id) const {
  if (id < 0 || id >= node_count()) raise(ErrorCode::not_an_element, "bad node id");
  return children_[static_cast<std::size_t>(id)];
}

const std::vector<int>& IntervalPoset::parents_of(int id) const {
  if (id < 0 || id >= node_count()) raise(ErrorCode::not_an_element, "bad node id");
  return parents_[static_cast<std::size_t>(id)];
}

bool IntervalPoset::leq(int a, int b) const {
  if (a < 0 || b < 0 || a >= node_count() || b >= node_count())
    raise(ErrorCode::not_an_element, "bad node id");
  return order_.leq(a, b);
}

IntervalPoset IntervalPoset::closed() const {
  if (has_bottom_) raise(ErrorCode::already_closed, "poset already has a bottom element");
  IntervalPoset poset = *this;
  poset.has_bottom_ = true;
  poset.build_relations();
  return poset;
}

int IntervalPoset::meet(int a, int b) const {
  if (!has_bottom_) raise(ErrorCode::not_closed, "meet needs the closed poset");
  if (a < 0 || b < 0 || a >= node_count() || b >= node_count())
    raise(ErrorCode::not_an_element, "bad node id");
  if (is_bottom(a) || is_bottom(b)) return bottom_id();
  const auto& left = interval_at(a);
  const auto& right = interval_at(b);
  ValueInterval common{std::max(left.lo, right.lo), std::min(left.hi, right.hi)};
  if (common.lo > common.hi) return bottom_id();
  auto id = index_of(common);
  if (!id)
    raise(ErrorCode::verification_failure,
          "intersection " + to_string(common) + " is missing from the poset");
  return *id;
}

int IntervalPoset::join(int a, int b) const {
  if (!has_bottom_) raise(ErrorCode::not_closed, "join needs the closed poset");
  if (a < 0 || b < 0 || a >= node_count() || b >= node_count())
    raise(ErrorCode::not_an_element, "bad node id");
  auto j = try_join(order_, a, b);
  if (!j) raise(ErrorCode::verification_failure, "pair has no unique least upper bound");
  return *j;
}

bool IntervalPoset::is_lattice() const {
  if (!has_bottom_) raise(ErrorCode::not_closed, "lattice check needs the closed poset");
  return ivposet::is_lattice(order_);
}

bool IntervalPoset::is_modular() const {
  if (!has_bottom_) raise(ErrorCode::not_closed, "modularity check needs the closed poset");
  return ivposet::is_modular(order_);
}

bool IntervalPoset::is_distributive() const {
  if (!has_bottom_) raise(ErrorCode::not_closed, "distributivity check needs the closed poset");
  return ivposet::is_distributive(order_);
}

std::vector<int> IntervalPoset::fruitful_elements() const {
  std::vector<int> out;
  for (int id = 0; id < interval_count(); ++id)
    if (static_cast<int>(children_[static_cast<std::size_t>(id)].size()) >= 4) out.push_back(id);
  return out;
}

CanonicalLayout IntervalPoset::canonical_layout() const {
  // The bottom sits outside the leveled diagram; lay out the intervals only.
  std::vector<std::pair<int, int>> interval_covers;
  for (const auto& [child, parent] : covers_)
    if (!is_bottom(child)) interval_covers.emplace_back(child, parent);
  std::vector<std::pair<int, int>> keys;
  keys.reserve(elements_.size());
  for (const auto& iv : elements_) keys.emplace_back(iv.lo, iv.hi);
  return compute_layout(interval_count(), root_, interval_covers, keys);
}

bool IntervalPoset::is_planar_canonical() const {
  auto layout = canonical_layout();
  std::vector<std::pair<int, int>> interval_covers;
  for (const auto& [child, parent] : covers_)
    if (!is_bottom(child)) interval_covers.emplace_back(child, parent);
  return layered_crossing_free(layout, interval_covers);
}

IntervalPoset IntervalPoset::principal_ideal(int id) const {
  const auto& top = interval_at(id);
  std::vector<ValueInterval> family;
  for (const auto& iv : elements_)
    if (top.contains(iv)) family.push_back({iv.lo - top.lo + 1, iv.hi - top.lo + 1});
  return from_family(std::move(family), top.size());
}

int IntervalPoset::rank() const {
  // Interval ids are topological (children precede parents); the bottom of a
  // closed poset adds exactly one cover edge to any maximal chain.
  std::vector<int> height(static_cast<std::size_t>(interval_count()), 0);
  int best = 0;
  for (const auto& [child, parent] : covers_) {
    if (is_bottom(child)) continue;
    height[static_cast<std::size_t>(parent)] =
        std::max(height[static_cast<std::size_t>(parent)], height[static_cast<std::size_t>(child)] + 1);
    best = std::max(best, height[static_cast<std::size_t>(parent)]);
  }
  return best + (has_bottom_ ? 1 : 0);
}

std::vector<ValueInterval> IntervalPoset::canonical_form() const {
  std::vector<ValueInterval> family = elements_;
  std::sort(family.begin(), family.end());
  return family;
}

bool IntervalPoset::equal_to(const IntervalPoset& other) const {
  return n_ == other.n_ && canonical_form() == other.canonical_form();
}

}  // namespace ivposet
