// Copyright 2026 The cayspec Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Integer partitions (Young diagrams, irrep labels of S_n) and cycle types
// (conjugacy class labels).
//
// Text notation:
//   Partition  "11,5"          comma-separated parts, weakly decreasing
//   CycleType  "5^3 1^1"       space-separated len^count, decreasing length
//
// Canonical partition order is decreasing lexicographic: (n) comes first and
// (1^n) last. Every scan in the library walks partitions in this order.

#ifndef CAYSPEC_PARTITIONS_HPP_
#define CAYSPEC_PARTITIONS_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cayspec/exact.hpp"

namespace cayspec {

class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw InputError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw InputError("partition parts must be weakly decreasing");
      }
      n_ += parts_[i];
    }
  }

  // "11,5"; the empty string denotes the empty partition.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view token = text.substr(pos, comma - pos);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      parts.push_back(parse_int(token, "partition part"));
      pos = comma + 1;
      if (comma + 1 == text.size()) throw InputError("trailing comma in partition");
    }
    return Partition(std::move(parts));
  }

  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int first_part() const { return parts_.empty() ? 0 : parts_.front(); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

  // Plain lexicographic order on the parts; canonical order is the reverse.
  std::strong_ordering operator<=>(const Partition& other) const {
    return parts_ <=> other.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// counts()[l - 1] is c_l, the number of l-cycles. Trailing zeros are trimmed.
class CycleType {
 public:
  CycleType() = default;

  static CycleType from_counts(std::vector<int> counts) {
    CycleType t;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] < 0) throw InputError("cycle counts must be non-negative");
      t.n_ += static_cast<int>(i + 1) * counts[i];
    }
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    t.counts_ = std::move(counts);
    return t;
  }

  static CycleType from_parts(const std::vector<int>& lengths) {
    std::vector<int> counts;
    for (int len : lengths) {
      if (len < 1) throw InputError("cycle lengths must be positive");
      if (static_cast<int>(counts.size()) < len) counts.resize(len, 0);
      ++counts[len - 1];
    }
    return from_counts(std::move(counts));
  }

  static CycleType from_partition(const Partition& p) { return from_parts(p.parts()); }

  static CycleType identity(int n) {
    return n == 0 ? CycleType() : from_counts({n});
  }

  // "5^3 1^1"; a bare length "5" means one cycle. Factors may come in any
  // order but a length may appear only once.
  static CycleType parse(std::string_view text) {
    std::vector<int> counts;
    std::istringstream in{std::string(text)};
    std::string token;
    std::vector<bool> seen;
    while (in >> token) {
      auto caret = token.find('^');
      int len = parse_int(std::string_view(token).substr(0, caret), "cycle length");
      int count = caret == std::string::npos
                      ? 1
                      : parse_int(std::string_view(token).substr(caret + 1), "cycle count");
      if (len < 1) throw InputError("cycle length must be positive in '" + token + "'");
      if (count < 0) throw InputError("cycle count must be non-negative in '" + token + "'");
      if (static_cast<int>(counts.size()) < len) {
        counts.resize(len, 0);
        seen.resize(len, false);
      }
      if (seen[len - 1]) throw InputError("repeated cycle length in '" + std::string(text) + "'");
      seen[len - 1] = true;
      counts[len - 1] = count;
    }
    return from_counts(std::move(counts));
  }

  int size() const { return n_; }
  const std::vector<int>& counts() const { return counts_; }

  // c_l for l >= 1; zero past the longest cycle.
  int count(int len) const {
    return len >= 1 && len <= static_cast<int>(counts_.size()) ? counts_[len - 1] : 0;
  }

  int num_cycles() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }
  int support_size() const { return n_ - count(1); }
  int sign() const { return ((n_ - num_cycles()) % 2 == 0) ? 1 : -1; }
  bool is_even() const { return sign() == 1; }
  int longest() const { return static_cast<int>(counts_.size()); }

  // Cycle lengths, decreasing.
  std::vector<int> parts() const {
    std::vector<int> out;
    for (int len = longest(); len >= 1; --len) {
      out.insert(out.end(), counts_[len - 1], len);
    }
    return out;
  }

  Partition as_partition() const { return Partition(parts()); }

  // Removes `k` fixed points; throws if there are fewer.
  CycleType without_fixed_points(int k) const {
    if (count(1) < k) throw DomainError("not enough fixed points to remove");
    std::vector<int> c = counts_;
    if (!c.empty()) c[0] -= k;
    return from_counts(std::move(c));
  }

  CycleType with_fixed_points(int k) const {
    std::vector<int> c = counts_;
    if (c.empty()) c.push_back(0);
    c[0] += k;
    return from_counts(std::move(c));
  }

  std::string to_string() const {
    std::string out;
    for (int len = longest(); len >= 1; --len) {
      if (counts_[len - 1] == 0) continue;
      if (!out.empty()) out += ' ';
      out += std::to_string(len) + "^" + std::to_string(counts_[len - 1]);
    }
    return out;
  }

  bool operator==(const CycleType& other) const { return counts_ == other.counts_; }
  std::strong_ordering operator<=>(const CycleType& other) const {
    if (auto c = n_ <=> other.n_; c != 0) return c;
    return parts() <=> other.parts();
  }

 private:
  std::vector<int> counts_;
  int n_ = 0;
};

// All partitions of n in decreasing lexicographic order.
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw DomainError("enumerate_partitions: n must be non-negative");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> a{n};
  for (;;) {
    out.emplace_back(a);
    // Rightmost part larger than 1.
    int i = static_cast<int>(a.size()) - 1;
    int ones = 0;
    while (i >= 0 && a[i] == 1) {
      ++ones;
      --i;
    }
    if (i < 0) break;
    int v = a[i] - 1;
    int rem = ones + 1;
    a.resize(i + 1);
    a[i] = v;
    while (rem > 0) {
      int take = std::min(v, rem);
      a.push_back(take);
      rem -= take;
    }
  }
  return out;
}

// Cycle types of S_n, in the canonical order of their underlying partitions.
inline std::vector<CycleType> enumerate_cycle_types(int n) {
  std::vector<CycleType> out;
  for (const auto& p : enumerate_partitions(n)) out.push_back(CycleType::from_partition(p));
  return out;
}

inline Partition transpose(const Partition& p) {
  std::vector<int> t(p.first_part(), 0);
  for (int part : p.parts()) {
    for (int j = 0; j < part; ++j) ++t[j];
  }
  return Partition(std::move(t));
}

inline int blocks_outside_first_row(const Partition& p) { return p.size() - p.first_part(); }
inline int blocks_outside_first_column(const Partition& p) { return p.size() - p.length(); }

// min(outside row, outside column); the "depth" a family is indexed by.
inline int blocks_outside(const Partition& p) {
  return std::min(blocks_outside_first_row(p), blocks_outside_first_column(p));
}

inline BigInt hook_product(const Partition& p) {
  Partition t = transpose(p);
  BigInt product = 1;
  for (int i = 0; i < p.length(); ++i) {
    for (int j = 0; j < p[i]; ++j) {
      product *= (p[i] - j - 1) + (t[j] - i - 1) + 1;
    }
  }
  return product;
}

// Hook length formula: n! / prod(hooks).
inline BigInt dimension(const Partition& p) { return factorial(p.size()) / hook_product(p); }

// n! / prod_l (l^{c_l} c_l!).
inline BigInt class_size(const CycleType& t) {
  BigInt denom = 1;
  for (int len = 1; len <= t.longest(); ++len) {
    int c = t.count(len);
    denom *= pow_big(BigInt(len), static_cast<unsigned>(c)) * factorial(c);
  }
  return factorial(t.size()) / denom;
}

inline Partition trivial_partition(int n) {
  return n == 0 ? Partition() : Partition(std::vector<int>{n});
}
inline Partition sign_partition(int n) { return Partition(std::vector<int>(n, 1)); }

inline bool is_trivial_or_sign(const Partition& p) {
  return p.length() <= 1 || p.first_part() == 1;
}

// (n - k, tail...), e.g. row_family_member(10, {2,1}) is
// (7,2,1).
inline Partition row_family_member(int n, const std::vector<int>& tail) {
  int k = std::accumulate(tail.begin(), tail.end(), 0);
  std::vector<int> parts;
  if (n - k > 0) parts.push_back(n - k);
  parts.insert(parts.end(), tail.begin(), tail.end());
  return Partition(std::move(parts));
}

// Rank of a partition in the canonical order of enumerate_partitions.
class PartitionRanker {
 public:
  explicit PartitionRanker(int max_n) : max_n_(max_n) {
    // bounded_[m][k]: partitions of m with all parts <= k.
    bounded_.assign(max_n + 1, std::vector<std::uint64_t>(max_n + 1, 0));
    for (int k = 0; k <= max_n; ++k) bounded_[0][k] = 1;
    for (int m = 1; m <= max_n; ++m) {
      for (int k = 1; k <= max_n; ++k) {
        bounded_[m][k] = bounded_[m][k - 1] + (k <= m ? bounded_[m - k][k] : 0);
      }
    }
    // prefix_[m][j] = sum_{i=1..j} (partitions of m with first part exactly i).
    prefix_.assign(max_n + 1, std::vector<std::uint64_t>(max_n + 1, 0));
    for (int m = 1; m <= max_n; ++m) {
      for (int j = 1; j <= max_n; ++j) {
        std::uint64_t exact = j <= m ? bounded_[m - j][j] : 0;
        prefix_[m][j] = prefix_[m][j - 1] + exact;
      }
    }
  }

  int max_n() const { return max_n_; }

  std::uint64_t count(int n) const { return bounded_[n][n]; }

  std::uint64_t rank(const std::vector<int>& parts) const {
    std::uint64_t r = 0;
    int m = 0;
    for (int part : parts) m += part;
    int cap = m;
    for (int part : parts) {
      // Partitions of m (parts <= cap) whose first part exceeds `part`.
      r += prefix_[m][cap] - prefix_[m][part];
      m -= part;
      cap = part;
    }
    return r;
  }

  std::uint64_t rank(const Partition& p) const { return rank(p.parts()); }

 private:
  int max_n_;
  std::vector<std::vector<std::uint64_t>> bounded_;
  std::vector<std::vector<std::uint64_t>> prefix_;
};

}  // namespace cayspec

#endif  // CAYSPEC_PARTITIONS_HPP_
