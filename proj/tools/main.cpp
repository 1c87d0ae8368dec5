// Command-line front end. Everything goes through the C API in ivposet.h;
// CLI11 handles argument parsing and nlohmann/json renders the API's JSON
// payloads as text.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ivposet.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitNotIntervalPoset = 2;
constexpr int kExitViolation = 3;

int exit_for(ivp_status status) {
  switch (status) {
    case IVP_OK: return kExitOk;
    case IVP_ERR_NOT_INTERVAL_POSET: return kExitNotIntervalPoset;
    case IVP_ERR_VERIFICATION: return kExitViolation;
    default: return kExitBadInput;
  }
}

int report_error(ivp_status status) {
  std::cerr << "error: " << ivp_status_name(status);
  if (*ivp_last_error()) std::cerr << ": " << ivp_last_error();
  std::cerr << "\n";
  return exit_for(status);
}

/// Owns a string allocated by the library.
struct ApiString {
  char* data = nullptr;
  ~ApiString() { ivp_string_free(data); }
  std::string str() const { return data ? data : ""; }
};

struct PermHandle {
  ivp_perm* handle = nullptr;
  ~PermHandle() { ivp_perm_free(handle); }
};

struct PosetHandle {
  ivp_poset* handle = nullptr;
  ~PosetHandle() { ivp_poset_free(handle); }
};

struct TreeHandle {
  ivp_block_tree* handle = nullptr;
  ~TreeHandle() { ivp_block_tree_free(handle); }
};

struct ListHandle {
  ivp_perm_list* handle = nullptr;
  ~ListHandle() { ivp_perm_list_free(handle); }
};

struct CensusHandle {
  ivp_census* handle = nullptr;
  ~CensusHandle() { ivp_census_free(handle); }
};

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return kExitBadInput;
  }
  out << text;
  return kExitOk;
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

int load_poset(const std::string& path, PosetHandle& poset) {
  if (ivp_status s = ivp_poset_read_file(path.c_str(), &poset.handle)) return report_error(s);
  return kExitOk;
}

int run_analyze(const std::string& perm_text, bool json, const std::string& out_path) {
  PermHandle perm;
  if (ivp_status s = ivp_perm_parse(perm_text.c_str(), &perm.handle)) return report_error(s);
  ApiString payload;
  if (ivp_status s = ivp_analyze_json(perm.handle, &payload.data)) return report_error(s);
  if (json) return emit(payload.str(), out_path);

  auto doc = nlohmann::json::parse(payload.str());
  std::ostringstream out;
  out << "permutation    " << doc["permutation"].get<std::string>() << "\n";
  out << "n              " << doc["n"].get<int>() << "\n";
  out << "simple         " << yes_no(doc["simple"].get<bool>()) << "\n";
  out << "decomposition  " << doc["decomposition"].get<std::string>() << "\n";
  out << "intervals (" << doc["interval_count"].get<int>() << ")";
  for (const auto& iv : doc["intervals"]) out << " " << iv.get<std::string>();
  out << "\n";
  out << "poset          " << doc["poset"]["elements"].get<int>() << " elements, rank "
      << doc["poset"]["rank"].get<int>() << ", " << doc["poset"]["levels"].get<int>()
      << " levels\n";
  out << "fruitful      ";
  if (doc["poset"]["fruitful"].empty()) out << " none";
  for (const auto& f : doc["poset"]["fruitful"]) out << " " << f.get<std::string>();
  out << "\n";
  const auto& props = doc["properties"];
  out << "properties     lattice=" << yes_no(props["lattice"].get<bool>())
      << " modular=" << yes_no(props["modular"].get<bool>())
      << " distributive=" << yes_no(props["distributive"].get<bool>())
      << " planar=" << yes_no(props["planar"].get<bool>()) << "\n";
  const auto& cls = doc["classification"]["poset"];
  out << "classes        tree=" << yes_no(cls["tree"].get<bool>())
      << " binary=" << yes_no(cls["binary"].get<bool>())
      << " binary_tree=" << yes_no(cls["binary_tree"].get<bool>())
      << (doc["classification"]["agree"].get<bool>() ? " (criteria agree)"
                                                     : " (CRITERIA DISAGREE)")
      << "\n";
  out << "block tree     " << doc["block_tree"].get<std::string>() << "\n";
  out << "generators (" << doc["generators"]["count"].get<std::uint64_t>() << ")\n";
  for (const auto& g : doc["generators"]["permutations"])
    out << "  " << g.get<std::string>() << "\n";
  int code = emit(out.str(), out_path);
  if (code != kExitOk) return code;
  return doc["classification"]["agree"].get<bool>() ? kExitOk : kExitViolation;
}

int run_classify(const std::string& perm_text, bool json, const std::string& out_path) {
  PermHandle perm;
  if (ivp_status s = ivp_perm_parse(perm_text.c_str(), &perm.handle)) return report_error(s);
  ApiString payload;
  if (ivp_status s = ivp_classify_json(perm.handle, &payload.data)) return report_error(s);
  if (json) return emit(payload.str(), out_path);
  auto doc = nlohmann::json::parse(payload.str());
  auto line = [&](const char* label, const nlohmann::json& flags) {
    std::ostringstream out;
    out << label << " tree=" << yes_no(flags["tree"].get<bool>())
        << " binary=" << yes_no(flags["binary"].get<bool>())
        << " binary_tree=" << yes_no(flags["binary_tree"].get<bool>()) << "\n";
    return out.str();
  };
  std::ostringstream out;
  out << "permutation        " << doc["permutation"].get<std::string>() << "\n";
  out << line("poset criterion   ", doc["poset"]);
  out << line("pattern criterion ", doc["pattern"]);
  out << "agreement          " << yes_no(doc["agree"].get<bool>()) << "\n";
  int code = emit(out.str(), out_path);
  if (code != kExitOk) return code;
  return doc["agree"].get<bool>() ? kExitOk : kExitViolation;
}

int run_recognize(const std::string& poset_path, bool json, const std::string& out_path) {
  PosetHandle poset;
  if (int code = load_poset(poset_path, poset)) return code;
  TreeHandle tree;
  if (ivp_status s = ivp_poset_recognize(poset.handle, &tree.handle)) return report_error(s);
  ApiString shape;
  if (ivp_status s = ivp_block_tree_format(tree.handle, &shape.data)) return report_error(s);
  std::uint64_t count = 0;
  if (ivp_status s = ivp_block_tree_count(tree.handle, &count)) return report_error(s);
  if (json) {
    nlohmann::json doc{{"block_tree", shape.str()},
                       {"minimals", ivp_poset_min_count(poset.handle)},
                       {"elements", ivp_poset_size(poset.handle)},
                       {"generator_count", count}};
    return emit(doc.dump(2) + "\n", out_path);
  }
  std::ostringstream out;
  out << "block tree       " << shape.str() << "\n";
  out << "minimals         " << ivp_poset_min_count(poset.handle) << "\n";
  out << "elements         " << ivp_poset_size(poset.handle) << "\n";
  out << "generator count  " << count << "\n";
  return emit(out.str(), out_path);
}

int run_generators(const std::string& poset_path, bool json, const std::string& out_path) {
  PosetHandle poset;
  if (int code = load_poset(poset_path, poset)) return code;
  TreeHandle tree;
  if (ivp_status s = ivp_poset_recognize(poset.handle, &tree.handle)) return report_error(s);
  ListHandle list;
  if (ivp_status s = ivp_block_tree_generators(tree.handle, &list.handle)) return report_error(s);
  std::vector<std::string> words;
  for (int i = 0; i < ivp_perm_list_size(list.handle); ++i) {
    ApiString word;
    if (ivp_status s = ivp_perm_format(ivp_perm_list_get(list.handle, i), 1, &word.data))
      return report_error(s);
    words.push_back(word.str());
  }
  if (json) {
    nlohmann::json doc{{"count", words.size()}, {"permutations", words}};
    return emit(doc.dump(2) + "\n", out_path);
  }
  std::ostringstream out;
  for (const auto& word : words) out << word << "\n";
  return emit(out.str(), out_path);
}

int run_census(int n, int threads, bool json, const std::string& out_path) {
  CensusHandle census;
  if (ivp_status s = ivp_census_run(n, threads, 1, 1, n <= 6 ? 1 : 0, &census.handle))
    return report_error(s);
  ApiString payload;
  ivp_status s = json ? ivp_census_report_json(census.handle, &payload.data)
                      : ivp_census_report_text(census.handle, &payload.data);
  if (s) return report_error(s);
  if (int code = emit(payload.str(), out_path)) return code;
  bool clean = ivp_census_violation_count(census.handle) == 0 &&
               ivp_census_identities_pass(census.handle) == 1;
  return clean ? kExitOk : kExitViolation;
}

int run_verify(int max_n, int threads, bool json, const std::string& out_dir) {
  bool all_clean = true;
  nlohmann::json reports = nlohmann::json::array();
  std::ostringstream text;
  std::map<std::string, std::ostringstream> sequences;
  for (int n = 2; n <= max_n; ++n) {
    CensusHandle census;
    if (ivp_status s = ivp_census_run(n, threads, 1, 1, n <= 6 ? 1 : 0, &census.handle))
      return report_error(s);
    ApiString payload;
    if (ivp_status s = ivp_census_report_json(census.handle, &payload.data))
      return report_error(s);
    auto doc = nlohmann::json::parse(payload.str());
    reports.push_back(doc);
    std::uint64_t violations = doc["violations"].size();
    text << "n=" << n << "  violations=" << violations << "\n";
    for (const auto& v : doc["violations"])
      text << "  VIOLATION " << v["law"].get<std::string>() << ": "
           << v["context"].get<std::string>() << "\n";
    for (const auto& id : doc["identities"]) {
      bool pass = id["pass"].get<bool>();
      text << "  " << (pass ? "PASS" : "FAIL") << " " << id["name"].get<std::string>() << " ("
           << id["expected"].get<std::uint64_t>() << " expected, "
           << id["actual"].get<std::uint64_t>() << " found)\n";
      all_clean = all_clean && pass;
    }
    all_clean = all_clean && violations == 0;
    auto seq = [&](const char* name, const char* field) {
      sequences[name] << n << "," << doc[field].get<std::uint64_t>() << "\n";
    };
    seq("distinct_posets", "distinct_posets");
    seq("simple_permutations", "simple_count");
    seq("binary_posets", "binary_poset_count");
    seq("binary_tree_posets", "binary_tree_poset_count");
    seq("separable_permutations", "separable_count");
    // Empirical sequences: no closed form is asserted for these.
    seq("tree_posets_empirical", "tree_poset_count");
    seq("two_generator_posets_empirical", "two_generator_poset_count");
  }
  text << (all_clean ? "verify: all checks passed\n" : "verify: FAILURES found\n");
  if (!out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
      std::cerr << "error: cannot create '" << out_dir << "': " << ec.message() << "\n";
      return kExitBadInput;
    }
    for (const auto& [name, rows] : sequences) {
      auto path = std::filesystem::path(out_dir) / (name + ".csv");
      if (int code = emit("n,count\n" + rows.str(), path.string())) return code;
    }
  }
  if (json) {
    nlohmann::json doc{{"reports", reports}, {"pass", all_clean}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text.str();
  }
  return all_clean ? kExitOk : kExitViolation;
}

int run_export_dot(const std::string& perm_text, const std::string& poset_path, bool json,
                   const std::string& out_path) {
  PosetHandle poset;
  if (!poset_path.empty()) {
    if (int code = load_poset(poset_path, poset)) return code;
  } else {
    PermHandle perm;
    if (ivp_status s = ivp_perm_parse(perm_text.c_str(), &perm.handle)) return report_error(s);
    if (ivp_status s = ivp_poset_of_perm(perm.handle, &poset.handle)) return report_error(s);
  }
  ApiString payload;
  ivp_status s = json ? ivp_poset_to_json(poset.handle, &payload.data)
                      : ivp_poset_to_dot(poset.handle, &payload.data);
  if (s) return report_error(s);
  return emit(payload.str(), out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval posets of permutations: analysis, recognition, generators, census"};
  app.require_subcommand(1);

  std::string perm_text, poset_path, out_path;
  bool json = false;
  int census_n = 0, max_n = 8, threads = 1;

  auto* analyze = app.add_subcommand("analyze", "intervals, decomposition, poset, generators");
  analyze->add_option("permutation", perm_text, "one-line notation")->required();
  analyze->add_flag("--json", json, "JSON output");
  analyze->add_option("--out", out_path, "write output to a file");

  auto* classify = app.add_subcommand("classify", "tree/binary/binary-tree flags, both criteria");
  classify->add_option("permutation", perm_text, "one-line notation")->required();
  classify->add_flag("--json", json, "JSON output");
  classify->add_option("--out", out_path, "write output to a file");

  auto* recognize = app.add_subcommand("recognize", "block decomposition of a poset file");
  recognize->add_option("--poset", poset_path, "poset JSON file")->required();
  recognize->add_flag("--json", json, "JSON output");
  recognize->add_option("--out", out_path, "write output to a file");

  auto* generators = app.add_subcommand("generators", "permutations generating a poset file");
  generators->add_option("--poset", poset_path, "poset JSON file")->required();
  generators->add_flag("--json", json, "JSON output");
  generators->add_option("--out", out_path, "write output to a file");

  auto* census = app.add_subcommand("census", "exhaustive S_n verification and counts");
  census->add_option("n", census_n, "permutation length")->required()->check(CLI::Range(2, 10));
  census->add_flag("--json", json, "JSON output");
  census->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 64));
  census->add_option("--out", out_path, "write the report to a file");

  auto* verify = app.add_subcommand("verify", "censuses for n = 2..max-n plus identity checks");
  verify->add_option("--max-n", max_n, "largest n to verify")->check(CLI::Range(2, 10));
  verify->add_flag("--json", json, "JSON output");
  verify->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 64));
  verify->add_option("--out", out_path, "write sequence CSV rows to a file");

  auto* export_dot = app.add_subcommand("export-dot", "canonical Hasse diagram as Graphviz DOT");
  export_dot->add_option("permutation", perm_text, "one-line notation");
  export_dot->add_option("--poset", poset_path, "poset JSON file");
  export_dot->add_flag("--json", json, "emit the poset JSON format instead of DOT");
  export_dot->add_option("--out", out_path, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  if (analyze->parsed()) return run_analyze(perm_text, json, out_path);
  if (classify->parsed()) return run_classify(perm_text, json, out_path);
  if (recognize->parsed()) return run_recognize(poset_path, json, out_path);
  if (generators->parsed()) return run_generators(poset_path, json, out_path);
  if (census->parsed()) return run_census(census_n, threads, json, out_path);
  if (verify->parsed()) return run_verify(max_n, threads, json, out_path);
  if (export_dot->parsed()) {
    if (perm_text.empty() == poset_path.empty()) {
      std::cerr << "error: export-dot needs exactly one of a permutation or --poset\n";
      return kExitBadInput;
    }
    return run_export_dot(perm_text, poset_path, json, out_path);
  }
  return kExitBadInput;
}
