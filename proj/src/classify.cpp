#include "ivposet/classify.hpp"

#include "ivposet/decomposition.hpp"

namespace ivposet {

ClassificationFlags classify_poset(const IntervalPoset& poset) {
  ClassificationFlags flags;
  flags.is_tree = true;
  flags.is_binary = true;
  for (int id = 0; id < poset.interval_count(); ++id) {
    if (id != poset.root_id() && poset.parents_of(id).size() != 1) flags.is_tree = false;
    if (poset.children_of(id).size() >= 4) flags.is_binary = false;
  }
  flags.is_binary_tree = flags.is_tree && flags.is_binary;
  return flags;
}

ClassificationFlags classify_permutation(const Permutation& w) {
  ClassificationFlags flags;
  flags.is_tree = !has_monotone_triple_interval(w);
  flags.is_binary = is_separable(w);
  flags.is_binary_tree = flags.is_tree && flags.is_binary;
  return flags;
}

bool is_separable(const Permutation& w) {
  static const Permutation p2413({2, 4, 1, 3});
  static const Permutation p3142({3, 1, 4, 2});
  return !contains_pattern(w, p2413) && !contains_pattern(w, p3142);
}

}  // namespace ivposet
