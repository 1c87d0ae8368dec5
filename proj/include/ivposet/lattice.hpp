#ifndef IVPOSET_LATTICE_HPP
#define IVPOSET_LATTICE_HPP

#include <bitset>
#include <optional>
#include <vector>

#include "ivposet/error.hpp"

namespace ivposet {

/// Bit i set means node i. Sized for interval posets up to n = 15 minimal
/// elements plus a bottom.
using NodeMask = std::bitset<128>;

/// A finite poset as closure masks: down[i] = {j : j <= i}, up[i] = {j : j >= i}.
struct OrderMasks {
  std::vector<NodeMask> down;
  std::vector<NodeMask> up;

  int size() const { return static_cast<int>(down.size()); }
  bool leq(int a, int b) const { return down[static_cast<std::size_t>(b)].test(static_cast<std::size_t>(a)); }
};

/// Closure masks from a cover relation (child, parent). Nodes may be listed in
/// any order; covers must be acyclic.
OrderMasks order_masks_from_covers(int count, const std::vector<std::pair<int, int>>& covers);

/// Greatest lower bound if it exists: the common lower bound whose down-set is
/// exactly the set of common lower bounds.
std::optional<int> try_meet(const OrderMasks& order, int a, int b);
std::optional<int> try_join(const OrderMasks& order, int a, int b);

/// True iff every pair of nodes has both a meet and a join.
bool is_lattice(const OrderMasks& order);

/// Meet and join of every pair, tabulated. Throws not_a_lattice.
struct MeetJoinTables {
  int count = 0;
  std::vector<int> meet;  // count x count, row major
  std::vector<int> join;

  int meet_of(int a, int b) const { return meet[static_cast<std::size_t>(a) * static_cast<std::size_t>(count) + static_cast<std::size_t>(b)]; }
  int join_of(int a, int b) const { return join[static_cast<std::size_t>(a) * static_cast<std::size_t>(count) + static_cast<std::size_t>(b)]; }
};

MeetJoinTables meet_join_tables(const OrderMasks& order);

/// a <= b implies a v (x ^ b) = (a v x) ^ b, over all triples.
bool is_modular(const OrderMasks& order);

/// a ^ (b v c) = (a ^ b) v (a ^ c), over all triples.
bool is_distributive(const OrderMasks& order);

}  // namespace ivposet

#endif
