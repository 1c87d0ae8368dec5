#ifndef IVPOSET_POSET_IO_HPP
#define IVPOSET_POSET_IO_HPP

#include <string>

#include "ivposet/embedded_poset.hpp"
#include "ivposet/interval_poset.hpp"

namespace ivposet {

/// JSON schema: {"n": <minimal count>, "nodes": [ids...],
/// "min_order": [n ids left to right], "covers": [[child, parent], ...]}.
EmbeddedPoset poset_from_json(const std::string& text);
EmbeddedPoset poset_from_file(const std::string& path);

std::string poset_to_json(const EmbeddedPoset& poset);
std::string poset_to_json(const IntervalPoset& poset);

/// Graphviz output of the canonical Hasse diagram: one node per element,
/// rank-grouped by depth, left-right order enforced within each level.
std::string poset_to_dot(const IntervalPoset& poset);

}  // namespace ivposet

#endif
