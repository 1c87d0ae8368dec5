#ifndef IVPOSET_BLOCK_TREE_HPP
#define IVPOSET_BLOCK_TREE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ivposet/embedded_poset.hpp"
#include "ivposet/interval_poset.hpp"

namespace ivposet {

/// Nested block structure of a recognized interval poset. A dual claw is a
/// node covering k >= 4 pairwise-disjoint sub-blocks; a chain is a maximal
/// monotone stack of m >= 2 parts, realized as a direct sum or a skew sum. A
/// chain's orientation is free at the root and inside dual-claw slots, and
/// dictated (opposite to the enclosing chain) everywhere else.
struct BlockTree {
  enum class Kind { leaf, dual_claw, chain };

  Kind kind = Kind::leaf;
  int lo = 1;  ///< minimal-element index range, 1-based
  int hi = 1;
  bool free_orientation = true;    ///< chains only
  std::vector<BlockTree> children; ///< claw children / chain parts, left to right

  int size() const { return hi - lo + 1; }
};

/// "leaf[3]", "chain[1,4](...)", "claw[1,8](...)"; forced chains are marked
/// with a trailing *.
std::string to_string(const BlockTree& tree);

/// Block decomposition of an interval poset; accepted trees re-expand to the
/// input family exactly. Throws not_an_interval_poset.
BlockTree recognize(const IntervalPoset& poset);

/// Validates an arbitrary embedded poset (unique maximal element, acyclic
/// reduced covers, order matching the inclusion of minimal-index sets, all
/// sets contiguous) and then decomposes it. Throws not_an_interval_poset.
BlockTree recognize(const EmbeddedPoset& poset);

/// The interval family of an embedded poset, up to the validation above.
std::vector<ValueInterval> interval_family(const EmbeddedPoset& poset);

/// Embedded poset reconstructed as a value-interval poset.
IntervalPoset realize(const EmbeddedPoset& poset);

/// The family of intervals the block tree stands for.
std::vector<ValueInterval> expand_family(const BlockTree& tree);

/// Number of permutations whose interval poset matches the tree.
std::uint64_t count_generators(const BlockTree& tree);

/// All permutations whose interval poset matches the tree, lexicographically
/// sorted. Every output is re-verified against the expanded family.
std::vector<Permutation> generators(const BlockTree& tree);

/// The two alternating depth-first-search words of a binary tree poset; they
/// are reverses of each other. Throws not_a_binary_tree.
std::pair<Permutation, Permutation> adfs_words(const EmbeddedPoset& poset);

}  // namespace ivposet

#endif
