#ifndef IVPOSET_EMBEDDED_POSET_HPP
#define IVPOSET_EMBEDDED_POSET_HPP

#include <string>
#include <utility>
#include <vector>

#include "ivposet/interval_poset.hpp"

namespace ivposet {

/// A poset as it arrives from a file: named nodes, a cover relation, and the
/// left-to-right order of the minimal elements. Nothing about it is assumed
/// to be an interval poset until recognition says so.
struct EmbeddedPoset {
  std::vector<std::string> node_ids;
  std::vector<int> min_order;               ///< node indices, left to right
  std::vector<std::pair<int, int>> covers;  ///< (child, parent) node indices

  int n() const { return static_cast<int>(min_order.size()); }
  int node_count() const { return static_cast<int>(node_ids.size()); }
  int index_of(const std::string& id) const;
};

EmbeddedPoset embedded_from(const IntervalPoset& poset);

}  // namespace ivposet

#endif
