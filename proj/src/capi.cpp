#include "ivposet.h"

#include <cstring>
#include <new>
#include <string>

#include "ivposet/block_tree.hpp"
#include "ivposet/census.hpp"
#include "ivposet/classify.hpp"
#include "ivposet/decomposition.hpp"
#include "ivposet/interval_poset.hpp"
#include "ivposet/permutation.hpp"
#include "ivposet/poset_io.hpp"

#include "json.hpp"

struct ivp_perm {
  ivposet::Permutation value;
};
struct ivp_poset {
  ivposet::IntervalPoset value;
};
struct ivp_block_tree {
  ivposet::BlockTree value;
};
struct ivp_perm_list {
  std::vector<ivp_perm> items;
};
struct ivp_census {
  ivposet::CensusReport report;
};

namespace {

thread_local std::string t_last_error;

ivp_status status_of(ivposet::ErrorCode code) {
  using ivposet::ErrorCode;
  switch (code) {
    case ErrorCode::parse_error: return IVP_ERR_PARSE;
    case ErrorCode::not_a_bijection: return IVP_ERR_NOT_BIJECTION;
    case ErrorCode::empty_input: return IVP_ERR_EMPTY_INPUT;
    case ErrorCode::arity_mismatch: return IVP_ERR_ARITY_MISMATCH;
    case ErrorCode::not_an_element: return IVP_ERR_NOT_AN_ELEMENT;
    case ErrorCode::already_closed: return IVP_ERR_ALREADY_CLOSED;
    case ErrorCode::not_closed: return IVP_ERR_NOT_CLOSED;
    case ErrorCode::not_a_lattice: return IVP_ERR_NOT_A_LATTICE;
    case ErrorCode::depth_conflict: return IVP_ERR_DEPTH_CONFLICT;
    case ErrorCode::not_an_interval_poset: return IVP_ERR_NOT_INTERVAL_POSET;
    case ErrorCode::not_a_binary_tree: return IVP_ERR_NOT_BINARY_TREE;
    case ErrorCode::json_error: return IVP_ERR_JSON;
    case ErrorCode::io_error: return IVP_ERR_IO;
    case ErrorCode::verification_failure: return IVP_ERR_VERIFICATION;
    case ErrorCode::bad_argument: return IVP_ERR_BAD_ARGUMENT;
    case ErrorCode::unsupported: return IVP_ERR_UNSUPPORTED;
  }
  return IVP_ERR_INTERNAL;
}

template <typename Fn>
ivp_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return IVP_OK;
  } catch (const ivposet::Error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    t_last_error = "out of memory";
    return IVP_ERR_INTERNAL;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return IVP_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

ivp_status require(bool ok, const char* what) {
  if (ok) return IVP_OK;
  t_last_error = what;
  return IVP_ERR_BAD_ARGUMENT;
}

nlohmann::json classification_json(const ivposet::Permutation& w,
                                   const ivposet::IntervalPoset& poset) {
  auto from_poset = ivposet::classify_poset(poset);
  auto from_pattern = ivposet::classify_permutation(w);
  auto flags = [](const ivposet::ClassificationFlags& f) {
    return nlohmann::json{
        {"tree", f.is_tree}, {"binary", f.is_binary}, {"binary_tree", f.is_binary_tree}};
  };
  return nlohmann::json{{"poset", flags(from_poset)},
                        {"pattern", flags(from_pattern)},
                        {"agree", from_poset == from_pattern}};
}

}  // namespace

extern "C" {

const char* ivp_version(void) { return "1.0.0"; }

const char* ivp_status_name(ivp_status status) {
  switch (status) {
    case IVP_OK: return "ok";
    case IVP_ERR_PARSE: return "parse error";
    case IVP_ERR_NOT_BIJECTION: return "not a bijection";
    case IVP_ERR_EMPTY_INPUT: return "empty input";
    case IVP_ERR_ARITY_MISMATCH: return "arity mismatch";
    case IVP_ERR_NOT_AN_ELEMENT: return "not an element";
    case IVP_ERR_ALREADY_CLOSED: return "already closed";
    case IVP_ERR_NOT_CLOSED: return "not closed";
    case IVP_ERR_NOT_A_LATTICE: return "not a lattice";
    case IVP_ERR_DEPTH_CONFLICT: return "depth conflict";
    case IVP_ERR_NOT_INTERVAL_POSET: return "not an interval poset";
    case IVP_ERR_NOT_BINARY_TREE: return "not a binary tree poset";
    case IVP_ERR_JSON: return "json error";
    case IVP_ERR_IO: return "io error";
    case IVP_ERR_VERIFICATION: return "verification failure";
    case IVP_ERR_BAD_ARGUMENT: return "bad argument";
    case IVP_ERR_UNSUPPORTED: return "unsupported";
    case IVP_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* ivp_last_error(void) { return t_last_error.c_str(); }

void ivp_string_free(char* text) { delete[] text; }

ivp_status ivp_perm_parse(const char* text, ivp_perm** out) {
  if (auto bad = require(text && out, "null argument")) return bad;
  return guarded([&] { *out = new ivp_perm{ivposet::Permutation::parse(text)}; });
}

void ivp_perm_free(ivp_perm* perm) { delete perm; }

int ivp_perm_length(const ivp_perm* perm) { return perm ? perm->value.size() : 0; }

ivp_status ivp_perm_format(const ivp_perm* perm, int compact, char** out) {
  if (auto bad = require(perm && out, "null argument")) return bad;
  return guarded([&] {
    *out = copy_string(compact ? perm->value.str() : perm->value.str_canonical());
  });
}

ivp_status ivp_perm_reverse(const ivp_perm* perm, ivp_perm** out) {
  if (auto bad = require(perm && out, "null argument")) return bad;
  return guarded([&] { *out = new ivp_perm{perm->value.reversed()}; });
}

int ivp_perm_is_simple(const ivp_perm* perm) {
  return perm && ivposet::is_simple(perm->value) ? 1 : 0;
}

int ivp_perm_contains(const ivp_perm* perm, const ivp_perm* pattern) {
  return perm && pattern && ivposet::contains_pattern(perm->value, pattern->value) ? 1 : 0;
}

int ivp_perm_is_separable(const ivp_perm* perm) {
  return perm && ivposet::is_separable(perm->value) ? 1 : 0;
}

int ivp_perm_has_monotone_triple_interval(const ivp_perm* perm) {
  return perm && ivposet::has_monotone_triple_interval(perm->value) ? 1 : 0;
}

ivp_status ivp_perm_decomposition(const ivp_perm* perm, char** out) {
  if (auto bad = require(perm && out, "null argument")) return bad;
  return guarded([&] {
    *out = copy_string(ivposet::to_string(ivposet::substitution_decomposition(perm->value)));
  });
}

ivp_status ivp_poset_of_perm(const ivp_perm* perm, ivp_poset** out) {
  if (auto bad = require(perm && out, "null argument")) return bad;
  return guarded([&] { *out = new ivp_poset{ivposet::IntervalPoset::of(perm->value)}; });
}

ivp_status ivp_poset_parse_json(const char* json_text, ivp_poset** out) {
  if (auto bad = require(json_text && out, "null argument")) return bad;
  return guarded([&] {
    *out = new ivp_poset{ivposet::realize(ivposet::poset_from_json(json_text))};
  });
}

ivp_status ivp_poset_read_file(const char* path, ivp_poset** out) {
  if (auto bad = require(path && out, "null argument")) return bad;
  return guarded([&] {
    *out = new ivp_poset{ivposet::realize(ivposet::poset_from_file(path))};
  });
}

void ivp_poset_free(ivp_poset* poset) { delete poset; }

int ivp_poset_min_count(const ivp_poset* poset) { return poset ? poset->value.n() : 0; }

int ivp_poset_size(const ivp_poset* poset) { return poset ? poset->value.interval_count() : 0; }

int ivp_poset_rank(const ivp_poset* poset) { return poset ? poset->value.rank() : 0; }

ivp_status ivp_poset_to_json(const ivp_poset* poset, char** out) {
  if (auto bad = require(poset && out, "null argument")) return bad;
  return guarded([&] { *out = copy_string(ivposet::poset_to_json(poset->value)); });
}

ivp_status ivp_poset_to_dot(const ivp_poset* poset, char** out) {
  if (auto bad = require(poset && out, "null argument")) return bad;
  return guarded([&] { *out = copy_string(ivposet::poset_to_dot(poset->value)); });
}

ivp_status ivp_poset_properties_json(const ivp_poset* poset, char** out) {
  if (auto bad = require(poset && out, "null argument")) return bad;
  return guarded([&] {
    const auto& p = poset->value;
    auto closed = p.closed();
    auto layout = p.canonical_layout();
    auto flags = ivposet::classify_poset(p);
    nlohmann::json doc;
    doc["lattice"] = closed.is_lattice();
    doc["modular"] = closed.is_modular();
    doc["distributive"] = closed.is_distributive();
    doc["planar"] = p.is_planar_canonical();
    doc["rank"] = p.rank();
    doc["levels"] = layout.levels.size();
    doc["fruitful"] = nlohmann::json::array();
    for (int id : p.fruitful_elements()) doc["fruitful"].push_back(p.label_of(id));
    doc["tree"] = flags.is_tree;
    doc["binary"] = flags.is_binary;
    doc["binary_tree"] = flags.is_binary_tree;
    *out = copy_string(doc.dump(2) + "\n");
  });
}

ivp_status ivp_poset_adfs_words(const ivp_poset* poset, ivp_perm** first, ivp_perm** second) {
  if (auto bad = require(poset && first && second, "null argument")) return bad;
  return guarded([&] {
    auto words = ivposet::adfs_words(ivposet::embedded_from(poset->value));
    *first = new ivp_perm{words.first};
    *second = new ivp_perm{words.second};
  });
}

ivp_status ivp_poset_recognize(const ivp_poset* poset, ivp_block_tree** out) {
  if (auto bad = require(poset && out, "null argument")) return bad;
  return guarded([&] { *out = new ivp_block_tree{ivposet::recognize(poset->value)}; });
}

void ivp_block_tree_free(ivp_block_tree* tree) { delete tree; }

ivp_status ivp_block_tree_format(const ivp_block_tree* tree, char** out) {
  if (auto bad = require(tree && out, "null argument")) return bad;
  return guarded([&] { *out = copy_string(ivposet::to_string(tree->value)); });
}

ivp_status ivp_block_tree_count(const ivp_block_tree* tree, uint64_t* out) {
  if (auto bad = require(tree && out, "null argument")) return bad;
  return guarded([&] { *out = ivposet::count_generators(tree->value); });
}

ivp_status ivp_block_tree_generators(const ivp_block_tree* tree, ivp_perm_list** out) {
  if (auto bad = require(tree && out, "null argument")) return bad;
  return guarded([&] {
    auto list = new ivp_perm_list;
    for (auto& g : ivposet::generators(tree->value)) list->items.push_back({std::move(g)});
    *out = list;
  });
}

void ivp_perm_list_free(ivp_perm_list* list) { delete list; }

int ivp_perm_list_size(const ivp_perm_list* list) {
  return list ? static_cast<int>(list->items.size()) : 0;
}

const ivp_perm* ivp_perm_list_get(const ivp_perm_list* list, int index) {
  if (!list || index < 0 || index >= static_cast<int>(list->items.size())) return nullptr;
  return &list->items[static_cast<std::size_t>(index)];
}

ivp_status ivp_classify_json(const ivp_perm* perm, char** out) {
  if (auto bad = require(perm && out, "null argument")) return bad;
  return guarded([&] {
    auto poset = ivposet::IntervalPoset::of(perm->value);
    nlohmann::json doc = classification_json(perm->value, poset);
    doc["permutation"] = perm->value.str();
    *out = copy_string(doc.dump(2) + "\n");
  });
}

ivp_status ivp_analyze_json(const ivp_perm* perm, char** out) {
  if (auto bad = require(perm && out, "null argument")) return bad;
  return guarded([&] {
    const auto& w = perm->value;
    auto poset = ivposet::IntervalPoset::of(w);
    auto closed = poset.closed();
    auto layout = poset.canonical_layout();

    nlohmann::json doc;
    doc["permutation"] = w.str();
    doc["n"] = w.size();
    doc["simple"] = ivposet::is_simple(w);
    doc["intervals"] = nlohmann::json::array();
    for (const auto& iv : poset.canonical_form()) doc["intervals"].push_back(to_string(iv));
    doc["interval_count"] = poset.interval_count();
    doc["decomposition"] = ivposet::to_string(ivposet::substitution_decomposition(w));
    doc["poset"] = {{"elements", poset.interval_count()},
                    {"rank", poset.rank()},
                    {"levels", layout.levels.size()}};
    doc["poset"]["fruitful"] = nlohmann::json::array();
    for (int id : poset.fruitful_elements())
      doc["poset"]["fruitful"].push_back(poset.label_of(id));
    doc["properties"] = {{"lattice", closed.is_lattice()},
                         {"modular", closed.is_modular()},
                         {"distributive", closed.is_distributive()},
                         {"planar", poset.is_planar_canonical()}};
    doc["classification"] = classification_json(w, poset);
    auto tree = ivposet::recognize(poset);
    doc["block_tree"] = ivposet::to_string(tree);
    doc["generators"] = {{"count", ivposet::count_generators(tree)}};
    doc["generators"]["permutations"] = nlohmann::json::array();
    for (const auto& g : ivposet::generators(tree))
      doc["generators"]["permutations"].push_back(g.str());
    *out = copy_string(doc.dump(2) + "\n");
  });
}

ivp_status ivp_census_run(int n, int threads, int structural_laws, int class_checks,
                          int ideal_law, ivp_census** out) {
  if (auto bad = require(out != nullptr, "null argument")) return bad;
  return guarded([&] {
    ivposet::CensusOptions options;
    options.threads = threads;
    options.structural_laws = structural_laws != 0;
    options.class_checks = class_checks != 0;
    options.ideal_law = ideal_law != 0;
    *out = new ivp_census{ivposet::census(n, options)};
  });
}

void ivp_census_free(ivp_census* census) { delete census; }

ivp_status ivp_census_report_json(const ivp_census* census, char** out) {
  if (auto bad = require(census && out, "null argument")) return bad;
  return guarded([&] { *out = copy_string(ivposet::report_to_json(census->report)); });
}

ivp_status ivp_census_report_text(const ivp_census* census, char** out) {
  if (auto bad = require(census && out, "null argument")) return bad;
  return guarded([&] { *out = copy_string(ivposet::report_to_text(census->report)); });
}

int ivp_census_violation_count(const ivp_census* census) {
  return census ? static_cast<int>(census->report.violations.size()) : 0;
}

int ivp_census_identities_pass(const ivp_census* census) {
  if (!census) return 0;
  for (const auto& id : census->report.identities)
    if (!id.pass) return 0;
  return 1;
}

}  // extern "C"
