#ifndef IVPOSET_DECOMPOSITION_HPP
#define IVPOSET_DECOMPOSITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "ivposet/permutation.hpp"

namespace ivposet {

/// Result of the substitution decomposition. Every permutation of length >= 2
/// is exactly one of: an inflation of a simple permutation of length >= 4, a
/// maximal direct sum of sum-indecomposable parts, or a maximal skew sum of
/// skew-indecomposable parts. Parts are decomposed recursively.
struct DecompositionTree {
  enum class Kind { leaf, simple, sum_chain, skew_chain };

  Kind kind = Kind::leaf;
  Permutation value;                     ///< the (sub)permutation at this node
  std::optional<Permutation> skeleton;   ///< simple nodes only
  std::vector<DecompositionTree> parts;  ///< position order

  explicit DecompositionTree(Permutation v) : value(std::move(v)) {}
};

DecompositionTree substitution_decomposition(const Permutation& w);

/// Rebuilds the permutation from the tree; inverse of the decomposition.
Permutation reinflate(const DecompositionTree& t);

/// One-level display: "3142[21,1,4312,1]", "sum[1,1,21]", "skew[12,12]", "1".
std::string to_string(const DecompositionTree& t);

/// True iff some interval of w, viewed as a sub-permutation, is a direct or
/// skew sum of three or more parts.
bool has_monotone_triple_interval(const Permutation& w);

}  // namespace ivposet

#endif
