#ifndef IVPOSET_CLASSIFY_HPP
#define IVPOSET_CLASSIFY_HPP

#include "ivposet/interval_poset.hpp"
#include "ivposet/permutation.hpp"

namespace ivposet {

struct ClassificationFlags {
  bool is_tree = false;
  bool is_binary = false;       ///< no fruitful elements
  bool is_binary_tree = false;  ///< both of the above

  bool operator==(const ClassificationFlags&) const = default;
};

/// Structural criteria: tree means every non-maximal element has exactly one
/// parent; binary means no element covers four or more.
ClassificationFlags classify_poset(const IntervalPoset& poset);

/// Pattern criteria: tree means no interval splits into a monotone triple;
/// binary means the permutation avoids 2413 and 3142 (separable).
ClassificationFlags classify_permutation(const Permutation& w);

/// Avoids both 2413 and 3142.
bool is_separable(const Permutation& w);

}  // namespace ivposet

#endif
