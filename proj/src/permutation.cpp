#include "ivposet/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>

namespace ivposet {

std::string to_string(const ValueInterval& iv) {
  if (iv.singleton()) return "{" + std::to_string(iv.lo) + "}";
  return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

namespace {

void check_bijection(const std::vector<int>& word) {
  if (word.empty()) raise(ErrorCode::empty_input, "empty permutation");
  const int n = static_cast<int>(word.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : word) {
    if (v < 1 || v > n)
      raise(ErrorCode::not_a_bijection,
            "value " + std::to_string(v) + " out of range [1.." + std::to_string(n) + "]");
    if (seen[static_cast<std::size_t>(v)])
      raise(ErrorCode::not_a_bijection, "duplicate value " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  check_bijection(word_);
}

Permutation Permutation::identity(int n) {
  if (n < 1) raise(ErrorCode::bad_argument, "permutation length must be positive");
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word), Unchecked{});
}

Permutation Permutation::parse(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  text = text.substr(begin, end - begin);
  if (text.empty()) raise(ErrorCode::empty_input, "empty permutation text");

  const bool all_digits =
      std::all_of(text.begin(), text.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });

  std::vector<int> word;
  if (all_digits) {
    // Contiguous digit form: one value per character.
    for (char c : text) {
      if (c == '0')
        raise(ErrorCode::parse_error,
              "digit-string form has no value 0; use separators for n >= 10");
      word.push_back(c - '0');
    }
  } else {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() &&
             (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))))
        ++i;
      if (i == text.size()) break;
      std::size_t j = i;
      while (j < text.size() && text[j] != ',' &&
             !std::isspace(static_cast<unsigned char>(text[j])))
        ++j;
      int value = 0;
      auto res = std::from_chars(text.data() + i, text.data() + j, value);
      if (res.ec != std::errc{} || res.ptr != text.data() + j)
        raise(ErrorCode::parse_error,
              "bad token '" + std::string(text.substr(i, j - i)) + "'");
      word.push_back(value);
      i = j;
    }
    if (word.empty()) raise(ErrorCode::empty_input, "no values in permutation text");
  }
  return Permutation(std::move(word));
}

std::string Permutation::str() const {
  if (size() <= 9) {
    std::string s;
    for (int v : word_) s += static_cast<char>('0' + v);
    return s;
  }
  return str_canonical();
}

std::string Permutation::str_canonical() const {
  std::string s;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(word_[i]);
  }
  return s;
}

Permutation Permutation::reversed() const {
  std::vector<int> word(word_.rbegin(), word_.rend());
  return Permutation(std::move(word), Unchecked{});
}

std::vector<ValueInterval> intervals_of(const Permutation& w) {
  const int n = w.size();
  std::vector<ValueInterval> out;
  for (int i = 0; i < n; ++i) {
    int mn = w.at(i), mx = w.at(i);
    for (int j = i; j < n; ++j) {
      mn = std::min(mn, w.at(j));
      mx = std::max(mx, w.at(j));
      if (mx - mn == j - i) out.push_back({mn, mx});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_simple(const Permutation& w) {
  const int n = w.size();
  for (int i = 0; i < n; ++i) {
    int mn = w.at(i), mx = w.at(i);
    for (int j = i + 1; j < n && j - i < n - 1; ++j) {
      mn = std::min(mn, w.at(j));
      mx = std::max(mx, w.at(j));
      if (mx - mn == j - i) return false;
    }
  }
  return true;
}

std::vector<Permutation> simple_permutations(int k) {
  if (k < 1) raise(ErrorCode::bad_argument, "k must be positive");
  if (k > 11)
    raise(ErrorCode::unsupported,
          "simple_permutations(" + std::to_string(k) + ") exceeds the enumeration scale (k <= 11)");
  std::vector<Permutation> out;
  for_each_permutation(k, [&](const Permutation& w) {
    if (is_simple(w)) out.push_back(w);
  });
  return out;
}

std::uint64_t simple_count(int k) {
  if (k < 1) raise(ErrorCode::bad_argument, "k must be positive");
  if (k > 11)
    raise(ErrorCode::unsupported,
          "simple_count(" + std::to_string(k) + ") exceeds the enumeration scale (k <= 11)");
  static std::map<int, std::uint64_t> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  std::uint64_t count = 0;
  for_each_permutation(k, [&](const Permutation& w) {
    if (is_simple(w)) ++count;
  });
  cache.emplace(k, count);
  return count;
}

Permutation inflate(const Permutation& v, const std::vector<Permutation>& parts) {
  const int k = v.size();
  if (static_cast<int>(parts.size()) != k)
    raise(ErrorCode::arity_mismatch,
          "inflation of a length-" + std::to_string(k) + " permutation needs " +
              std::to_string(k) + " parts, got " + std::to_string(parts.size()));
  // Value offset of the block at position i: total size of blocks with smaller rank.
  std::vector<int> offset(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (v.at(j) < v.at(i)) offset[static_cast<std::size_t>(i)] += parts[static_cast<std::size_t>(j)].size();
  std::vector<int> word;
  for (int i = 0; i < k; ++i)
    for (int value : parts[static_cast<std::size_t>(i)].word())
      word.push_back(value + offset[static_cast<std::size_t>(i)]);
  return Permutation(std::move(word), Permutation::Unchecked{});
}

Permutation direct_sum(const Permutation& p, const Permutation& q) {
  std::vector<int> word = p.word();
  for (int v : q.word()) word.push_back(v + p.size());
  return Permutation(std::move(word), Permutation::Unchecked{});
}

Permutation skew_sum(const Permutation& p, const Permutation& q) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(p.size() + q.size()));
  for (int v : p.word()) word.push_back(v + q.size());
  for (int v : q.word()) word.push_back(v);
  return Permutation(std::move(word), Permutation::Unchecked{});
}

namespace {

bool embed_pattern(const Permutation& w, const Permutation& p, int from,
                   std::vector<int>& chosen) {
  const int t = static_cast<int>(chosen.size());
  if (t == p.size()) return true;
  for (int i = from; i <= w.size() - (p.size() - t); ++i) {
    bool ok = true;
    for (int s = 0; s < t && ok; ++s)
      if ((w.at(i) < w.at(chosen[static_cast<std::size_t>(s)])) != (p.at(t) < p.at(s)))
        ok = false;
    if (!ok) continue;
    chosen.push_back(i);
    if (embed_pattern(w, p, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& w, const Permutation& pattern) {
  if (pattern.size() > w.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(pattern.size()));
  return embed_pattern(w, pattern, 0, chosen);
}

bool is_sum_decomposable(const Permutation& w) {
  int mx = 0;
  for (int j = 0; j + 1 < w.size(); ++j) {
    mx = std::max(mx, w.at(j));
    if (mx == j + 1) return true;
  }
  return false;
}

bool is_skew_decomposable(const Permutation& w) {
  const int n = w.size();
  int mn = n + 1;
  for (int j = 0; j + 1 < n; ++j) {
    mn = std::min(mn, w.at(j));
    if (mn == n - j) return true;
  }
  return false;
}

std::vector<Permutation> sum_parts(const Permutation& w) {
  std::vector<Permutation> parts;
  const int n = w.size();
  int start = 0, mx = 0;
  for (int j = 0; j < n; ++j) {
    mx = std::max(mx, w.at(j));
    if (mx == j + 1) {
      std::vector<int> piece(w.word().begin() + start, w.word().begin() + j + 1);
      parts.push_back(standardize(piece));
      start = j + 1;
    }
  }
  return parts;
}

std::vector<Permutation> skew_parts(const Permutation& w) {
  std::vector<Permutation> parts;
  const int n = w.size();
  int start = 0, mn = n + 1;
  for (int j = 0; j < n; ++j) {
    mn = std::min(mn, w.at(j));
    if (mn == n - j) {
      std::vector<int> piece(w.word().begin() + start, w.word().begin() + j + 1);
      parts.push_back(standardize(piece));
      start = j + 1;
    }
  }
  return parts;
}

Permutation standardize(const std::vector<int>& values) {
  if (values.empty()) raise(ErrorCode::empty_input, "cannot standardize an empty word");
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> word;
  word.reserve(values.size());
  for (int v : values) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    word.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return Permutation(std::move(word), Permutation::Unchecked{});
}

Permutation restrict_to(const Permutation& w, const ValueInterval& iv) {
  std::vector<int> values;
  for (int v : w.word())
    if (iv.contains_value(v)) values.push_back(v);
  if (values.empty())
    raise(ErrorCode::not_an_element, "interval " + to_string(iv) + " selects no letters");
  return standardize(values);
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  if (n < 1) raise(ErrorCode::bad_argument, "n must be positive");
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    fn(Permutation(word));
  } while (std::next_permutation(word.begin(), word.end()));
}

Permutation nth_permutation(int n, std::uint64_t index) {
  if (n < 1) raise(ErrorCode::bad_argument, "n must be positive");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> word;
  word.reserve(pool.size());
  for (int i = n; i >= 1; --i) {
    std::uint64_t f = factorial(i - 1);
    std::size_t pick = static_cast<std::size_t>(index / f);
    if (pick >= pool.size()) raise(ErrorCode::bad_argument, "permutation index out of range");
    index %= f;
    word.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Permutation(std::move(word));
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace ivposet
