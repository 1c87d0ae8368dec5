#ifndef IVPOSET_CENSUS_HPP
#define IVPOSET_CENSUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ivposet/permutation.hpp"

namespace ivposet {

struct CensusOptions {
  int threads = 1;
  /// Per-permutation structural laws: lattice, modularity, distributivity,
  /// planarity, cover-count taboos, layout depth, rank, size bound, isolated
  /// covers, fruitful-element laws.
  bool structural_laws = true;
  /// Per-class recognition round trip: block tree accepted, generator count
  /// and generator list match the enumerated class, closure under reverse.
  bool class_checks = true;
  /// Principal-ideal restriction law over every element (costly; n <= 6).
  bool ideal_law = false;
};

struct Violation {
  std::string law;
  std::string context;
};

struct IdentityVerdict {
  std::string name;
  std::uint64_t expected = 0;
  std::uint64_t actual = 0;
  bool pass = false;
};

struct CensusReport {
  int n = 0;
  std::uint64_t total_perms = 0;
  std::uint64_t distinct_posets = 0;
  std::uint64_t simple_count = 0;
  std::uint64_t tree_poset_count = 0;
  std::uint64_t binary_poset_count = 0;
  std::uint64_t binary_tree_poset_count = 0;
  std::uint64_t binary_tree_generator_total = 0;
  std::uint64_t two_generator_poset_count = 0;
  std::uint64_t separable_count = 0;
  std::uint64_t fruitless_class_count = 0;
  std::uint64_t fruitless_two_generator_classes = 0;
  std::uint64_t classes_checked = 0;
  std::uint64_t generator_count_matches = 0;
  std::vector<Violation> violations;
  std::vector<IdentityVerdict> identities;
};

/// Walks all of S_n, deduplicates interval posets, checks every law the
/// options enable, and tallies the class counts. 2 <= n <= 10.
CensusReport census(int n, const CensusOptions& options = {});

/// The exact enumeration identities: binary tree posets, binary tree
/// generators, binary posets against the separable count, and the
/// two-generator structure of fruitless classes.
std::vector<IdentityVerdict> verify_identities(const CensusReport& report);

std::string report_to_json(const CensusReport& report);
std::string report_to_text(const CensusReport& report);

std::uint64_t catalan(int k);

}  // namespace ivposet

#endif
