#ifndef IVPOSET_INTERVAL_POSET_HPP
#define IVPOSET_INTERVAL_POSET_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ivposet/lattice.hpp"
#include "ivposet/permutation.hpp"

namespace ivposet {

/// Canonical Hasse layout: elements of equal depth from the maximal element
/// share a level, listed in increasing interval order left to right. The
/// adjoined bottom of a closed poset is drawn below the levels and excluded.
struct CanonicalLayout {
  std::vector<int> depth;                 ///< per element id
  std::vector<int> level_index;           ///< position within its level
  std::vector<std::vector<int>> levels;   ///< levels[d], left to right
};

/// Depth from `root` over the cover digraph, levels ordered by `order_key`.
/// Throws depth_conflict when the parents of some node sit at unequal depths.
CanonicalLayout compute_layout(int count, int root,
                               const std::vector<std::pair<int, int>>& covers,
                               const std::vector<std::pair<int, int>>& order_key);

/// True iff no two cover edges between consecutive levels cross.
bool layered_crossing_free(const CanonicalLayout& layout,
                           const std::vector<std::pair<int, int>>& covers);

/// The interval poset of a permutation: all nonempty value intervals ordered
/// by set inclusion. Closing adjoins a bottom element below the singletons.
/// Immutable once built.
class IntervalPoset {
 public:
  static IntervalPoset of(const Permutation& w);

  /// Builds directly from a family of intervals on [1..n]. The family must
  /// contain [1,n] and every singleton; realizability is recognize()'s job.
  static IntervalPoset from_family(std::vector<ValueInterval> family, int n);

  int n() const { return n_; }
  bool has_bottom() const { return has_bottom_; }

  /// Elements excluding the bottom.
  int interval_count() const { return static_cast<int>(elements_.size()); }
  /// Elements including the bottom when closed.
  int node_count() const { return interval_count() + (has_bottom_ ? 1 : 0); }
  int bottom_id() const;
  bool is_bottom(int id) const { return has_bottom_ && id == interval_count(); }
  int root_id() const { return root_; }

  const std::vector<ValueInterval>& elements() const { return elements_; }
  const ValueInterval& interval_at(int id) const;
  std::optional<int> index_of(const ValueInterval& iv) const;
  std::string label_of(int id) const;

  /// Cover pairs (child, parent); includes bottom-to-atom edges when closed.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& children_of(int id) const;
  const std::vector<int>& parents_of(int id) const;
  bool leq(int a, int b) const;
  const OrderMasks& order() const { return order_; }

  /// Adjoins the bottom element. Throws already_closed.
  IntervalPoset closed() const;

  /// Meet is the interval intersection, or the bottom when disjoint; join is
  /// the least upper bound. Closed posets only; ids must be elements.
  int meet(int a, int b) const;
  int join(int a, int b) const;
  bool is_lattice() const;
  bool is_modular() const;
  bool is_distributive() const;

  /// Elements covering at least four others. No element of an interval poset
  /// covers exactly three, so thresholds of three and four coincide here.
  std::vector<int> fruitful_elements() const;

  CanonicalLayout canonical_layout() const;
  bool is_planar_canonical() const;

  /// The down-set of an element as a standalone poset, values shifted to
  /// [1..size]. Throws not_an_element.
  IntervalPoset principal_ideal(int id) const;

  /// Maximum number of cover edges along a chain.
  int rank() const;

  /// The family of intervals, sorted; two interval posets are equal exactly
  /// when their canonical forms agree.
  std::vector<ValueInterval> canonical_form() const;
  bool equal_to(const IntervalPoset& other) const;

 private:
  IntervalPoset() = default;
  void build_relations();

  int n_ = 0;
  bool has_bottom_ = false;
  int root_ = -1;
  std::vector<ValueInterval> elements_;          // singletons first, then (size, lo)
  std::vector<std::pair<int, int>> covers_;      // (child, parent)
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> parents_;
  OrderMasks order_;
};

}  // namespace ivposet

#endif
