#ifndef IVPOSET_PERMUTATION_HPP
#define IVPOSET_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ivposet/error.hpp"

namespace ivposet {

/// A contiguous range of values [lo, hi], 1-based, lo <= hi.
struct ValueInterval {
  int lo = 1;
  int hi = 1;

  int size() const { return hi - lo + 1; }
  bool singleton() const { return lo == hi; }
  bool contains(const ValueInterval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
  bool contains_value(int v) const { return lo <= v && v <= hi; }
  bool disjoint_from(const ValueInterval& other) const {
    return hi < other.lo || other.hi < lo;
  }

  auto operator<=>(const ValueInterval&) const = default;
};

/// "{3}" for singletons, "[3,5]" otherwise.
std::string to_string(const ValueInterval& iv);

/// A permutation of [1..n] in one-line notation.
class Permutation {
 public:
  /// Validates that `word` is a bijection on [1..n]; throws not_a_bijection.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  /// Accepts either a contiguous digit string (each digit one value, so only
  /// unambiguous for n <= 9) or comma/whitespace-separated integers.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  /// Value at 0-based position `pos`.
  int at(int pos) const { return word_[static_cast<std::size_t>(pos)]; }
  const std::vector<int>& word() const { return word_; }

  /// Digit string when n <= 9, comma-separated otherwise.
  std::string str() const;
  /// Always comma-separated.
  std::string str_canonical() const;

  Permutation reversed() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> word, Unchecked) : word_(std::move(word)) {}

  std::vector<int> word_;

  friend Permutation inflate(const Permutation&, const std::vector<Permutation>&);
  friend Permutation direct_sum(const Permutation&, const Permutation&);
  friend Permutation skew_sum(const Permutation&, const Permutation&);
  friend Permutation standardize(const std::vector<int>&);
};

/// All value intervals of w occupying a consecutive position window,
/// sorted by (lo, hi). Always includes the singletons and [1, n].
std::vector<ValueInterval> intervals_of(const Permutation& w);

/// True iff w has no proper interval (size in [2, n-1]).
bool is_simple(const Permutation& w);

/// All simple permutations of S_k, lexicographically sorted. Enumerative, so
/// capped at k <= 11; larger k throws unsupported.
std::vector<Permutation> simple_permutations(int k);

/// |simple_permutations(k)|, memoized. Same k <= 11 cap.
std::uint64_t simple_count(int k);

/// v[p_1, ..., p_k]: each letter v(i) replaced by a block order-isomorphic to
/// parts[i], block value order matching v. Throws arity_mismatch.
Permutation inflate(const Permutation& v, const std::vector<Permutation>& parts);

Permutation direct_sum(const Permutation& p, const Permutation& q);
Permutation skew_sum(const Permutation& p, const Permutation& q);

/// True iff some subsequence of w is order-isomorphic to pattern.
bool contains_pattern(const Permutation& w, const Permutation& pattern);

bool is_sum_decomposable(const Permutation& w);
bool is_skew_decomposable(const Permutation& w);

/// Maximal decomposition w = p_1 + p_2 + ... into sum-indecomposable parts.
/// A single part means w itself is sum indecomposable.
std::vector<Permutation> sum_parts(const Permutation& w);
std::vector<Permutation> skew_parts(const Permutation& w);

/// Pattern of a word of distinct integers (values ranked to [1..k]).
Permutation standardize(const std::vector<int>& values);

/// Restriction of w to the values in `iv`, standardized.
Permutation restrict_to(const Permutation& w, const ValueInterval& iv);

/// Lexicographic enumeration of S_n.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

/// index-th permutation of S_n in lexicographic order, 0-based.
Permutation nth_permutation(int n, std::uint64_t index);

std::uint64_t factorial(int n);

}  // namespace ivposet

#endif
