#include "ivposet/lattice.hpp"

#include <algorithm>

namespace ivposet {

OrderMasks order_masks_from_covers(int count, const std::vector<std::pair<int, int>>& covers) {
  std::vector<std::vector<int>> children(static_cast<std::size_t>(count));
  for (const auto& [child, parent] : covers)
    children[static_cast<std::size_t>(parent)].push_back(child);
  // Topological order, minimals first, so down-masks can be folded upward.
  std::vector<int> order;
  std::vector<int> remaining(static_cast<std::size_t>(count), 0);
  for (const auto& [child, parent] : covers) {
    (void)child;
    ++remaining[static_cast<std::size_t>(parent)];
  }
  std::vector<int> queue;
  for (int i = 0; i < count; ++i)
    if (remaining[static_cast<std::size_t>(i)] == 0) queue.push_back(i);
  std::vector<std::vector<int>> parents(static_cast<std::size_t>(count));
  for (const auto& [child, parent] : covers) parents[static_cast<std::size_t>(child)].push_back(parent);
  while (!queue.empty()) {
    int node = queue.back();
    queue.pop_back();
    order.push_back(node);
    for (int p : parents[static_cast<std::size_t>(node)])
      if (--remaining[static_cast<std::size_t>(p)] == 0) queue.push_back(p);
  }
  if (static_cast<int>(order.size()) != count)
    raise(ErrorCode::not_an_interval_poset, "cover relation contains a cycle");

  OrderMasks masks;
  masks.down.assign(static_cast<std::size_t>(count), {});
  masks.up.assign(static_cast<std::size_t>(count), {});
  for (int node : order) {
    auto& mask = masks.down[static_cast<std::size_t>(node)];
    mask.set(static_cast<std::size_t>(node));
    for (int c : children[static_cast<std::size_t>(node)]) mask |= masks.down[static_cast<std::size_t>(c)];
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& mask = masks.up[static_cast<std::size_t>(*it)];
    mask.set(static_cast<std::size_t>(*it));
    for (int p : parents[static_cast<std::size_t>(*it)]) mask |= masks.up[static_cast<std::size_t>(p)];
  }
  return masks;
}

std::optional<int> try_meet(const OrderMasks& order, int a, int b) {
  NodeMask common = order.down[static_cast<std::size_t>(a)] & order.down[static_cast<std::size_t>(b)];
  for (int x = 0; x < order.size(); ++x)
    if (common.test(static_cast<std::size_t>(x)) && order.down[static_cast<std::size_t>(x)] == common) return x;
  return std::nullopt;
}

std::optional<int> try_join(const OrderMasks& order, int a, int b) {
  NodeMask common = order.up[static_cast<std::size_t>(a)] & order.up[static_cast<std::size_t>(b)];
  for (int x = 0; x < order.size(); ++x)
    if (common.test(static_cast<std::size_t>(x)) && order.up[static_cast<std::size_t>(x)] == common) return x;
  return std::nullopt;
}

bool is_lattice(const OrderMasks& order) {
  for (int a = 0; a < order.size(); ++a)
    for (int b = a + 1; b < order.size(); ++b)
      if (!try_meet(order, a, b) || !try_join(order, a, b)) return false;
  return true;
}

MeetJoinTables meet_join_tables(const OrderMasks& order) {
  MeetJoinTables tables;
  tables.count = order.size();
  const std::size_t count = static_cast<std::size_t>(tables.count);
  tables.meet.assign(count * count, -1);
  tables.join.assign(count * count, -1);
  for (int a = 0; a < tables.count; ++a)
    for (int b = a; b < tables.count; ++b) {
      auto m = try_meet(order, a, b);
      auto j = try_join(order, a, b);
      if (!m || !j) raise(ErrorCode::not_a_lattice, "poset is not a lattice");
      tables.meet[static_cast<std::size_t>(a) * count + static_cast<std::size_t>(b)] = *m;
      tables.meet[static_cast<std::size_t>(b) * count + static_cast<std::size_t>(a)] = *m;
      tables.join[static_cast<std::size_t>(a) * count + static_cast<std::size_t>(b)] = *j;
      tables.join[static_cast<std::size_t>(b) * count + static_cast<std::size_t>(a)] = *j;
    }
  return tables;
}

bool is_modular(const OrderMasks& order) {
  auto tables = meet_join_tables(order);
  for (int a = 0; a < order.size(); ++a)
    for (int b = 0; b < order.size(); ++b) {
      if (!order.leq(a, b)) continue;
      for (int x = 0; x < order.size(); ++x)
        if (tables.join_of(a, tables.meet_of(x, b)) != tables.meet_of(tables.join_of(a, x), b))
          return false;
    }
  return true;
}

bool is_distributive(const OrderMasks& order) {
  auto tables = meet_join_tables(order);
  for (int a = 0; a < order.size(); ++a)
    for (int b = 0; b < order.size(); ++b)
      for (int c = b; c < order.size(); ++c)
        if (tables.meet_of(a, tables.join_of(b, c)) !=
            tables.join_of(tables.meet_of(a, b), tables.meet_of(a, c)))
          return false;
  return true;
}

}  // namespace ivposet
