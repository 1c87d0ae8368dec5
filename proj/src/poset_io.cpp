#include "ivposet/poset_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace ivposet {

int EmbeddedPoset::index_of(const std::string& id) const {
  auto it = std::find(node_ids.begin(), node_ids.end(), id);
  return it == node_ids.end() ? -1 : static_cast<int>(it - node_ids.begin());
}

EmbeddedPoset embedded_from(const IntervalPoset& poset) {
  EmbeddedPoset out;
  for (int id = 0; id < poset.interval_count(); ++id)
    out.node_ids.push_back(poset.label_of(id));
  for (int v = 0; v < poset.n(); ++v) out.min_order.push_back(v);
  for (const auto& [child, parent] : poset.covers())
    if (!poset.is_bottom(child)) out.covers.emplace_back(child, parent);
  return out;
}

EmbeddedPoset poset_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::json_error, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("nodes") ||
      !doc.contains("min_order") || !doc.contains("covers"))
    raise(ErrorCode::json_error, "poset JSON needs fields n, nodes, min_order, covers");
  if (!doc["n"].is_number_integer() || !doc["nodes"].is_array() ||
      !doc["min_order"].is_array() || !doc["covers"].is_array())
    raise(ErrorCode::json_error, "poset JSON field has the wrong type");

  EmbeddedPoset poset;
  std::map<std::string, int> index;
  for (const auto& node : doc["nodes"]) {
    if (!node.is_string()) raise(ErrorCode::json_error, "node ids must be strings");
    std::string id = node.get<std::string>();
    if (index.count(id)) raise(ErrorCode::json_error, "duplicate node id '" + id + "'");
    index[id] = static_cast<int>(poset.node_ids.size());
    poset.node_ids.push_back(id);
  }
  auto lookup = [&](const nlohmann::json& node, const char* where) {
    if (!node.is_string()) raise(ErrorCode::json_error, std::string(where) + " entries must be node ids");
    auto it = index.find(node.get<std::string>());
    if (it == index.end())
      raise(ErrorCode::json_error, "unknown node id '" + node.get<std::string>() + "' in " + where);
    return it->second;
  };
  for (const auto& node : doc["min_order"]) poset.min_order.push_back(lookup(node, "min_order"));
  if (doc["n"].get<int>() != poset.n())
    raise(ErrorCode::json_error, "field n disagrees with the length of min_order");
  std::vector<char> seen(static_cast<std::size_t>(poset.node_count()), 0);
  for (int idx : poset.min_order) {
    if (seen[static_cast<std::size_t>(idx)])
      raise(ErrorCode::json_error, "min_order repeats a node");
    seen[static_cast<std::size_t>(idx)] = 1;
  }
  for (const auto& pair : doc["covers"]) {
    if (!pair.is_array() || pair.size() != 2)
      raise(ErrorCode::json_error, "covers entries must be [child, parent] pairs");
    int child = lookup(pair[0], "covers");
    int parent = lookup(pair[1], "covers");
    if (child == parent) raise(ErrorCode::json_error, "cover pair relates a node to itself");
    poset.covers.emplace_back(child, parent);
  }
  std::sort(poset.covers.begin(), poset.covers.end());
  auto dup = std::adjacent_find(poset.covers.begin(), poset.covers.end());
  if (dup != poset.covers.end()) raise(ErrorCode::json_error, "duplicate cover pair");
  return poset;
}

EmbeddedPoset poset_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::io_error, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return poset_from_json(buffer.str());
}

std::string poset_to_json(const EmbeddedPoset& poset) {
  nlohmann::json doc;
  doc["n"] = poset.n();
  doc["nodes"] = poset.node_ids;
  nlohmann::json mins = nlohmann::json::array();
  for (int idx : poset.min_order) mins.push_back(poset.node_ids[static_cast<std::size_t>(idx)]);
  doc["min_order"] = mins;
  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [child, parent] : poset.covers)
    covers.push_back({poset.node_ids[static_cast<std::size_t>(child)],
                      poset.node_ids[static_cast<std::size_t>(parent)]});
  doc["covers"] = covers;
  return doc.dump(2) + "\n";
}

std::string poset_to_json(const IntervalPoset& poset) {
  return poset_to_json(embedded_from(poset));
}

std::string poset_to_dot(const IntervalPoset& poset) {
  auto layout = poset.canonical_layout();
  std::ostringstream out;
  out << "digraph interval_poset {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box, style=rounded];\n";
  for (std::size_t d = 0; d < layout.levels.size(); ++d) {
    out << "  { rank=same;";
    for (int id : layout.levels[d]) out << " \"" << poset.label_of(id) << "\";";
    if (layout.levels[d].size() > 1) {
      out << "\n    ";
      for (std::size_t i = 0; i < layout.levels[d].size(); ++i) {
        if (i) out << " -> ";
        out << "\"" << poset.label_of(layout.levels[d][i]) << "\"";
      }
      out << " [style=invis];";
    }
    out << " }\n";
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [child, parent] : poset.covers())
    if (!poset.is_bottom(child)) edges.emplace_back(parent, child);
  std::sort(edges.begin(), edges.end(), [&](const auto& a, const auto& b) {
    auto key = [&](const std::pair<int, int>& e) {
      return std::tuple(layout.depth[static_cast<std::size_t>(e.first)],
                        layout.level_index[static_cast<std::size_t>(e.first)],
                        layout.level_index[static_cast<std::size_t>(e.second)]);
    };
    return key(a) < key(b);
  });
  for (const auto& [parent, child] : edges)
    out << "  \"" << poset.label_of(parent) << "\" -> \"" << poset.label_of(child) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ivposet
