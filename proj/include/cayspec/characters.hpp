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

// Irreducible characters of S_n via the Murnaghan-Nakayama rule.
//
// Two evaluation routes share one engine:
//
//  * character(lambda, mu): a single value. Memoized on (diagram, remaining
//    cycles), cycles consumed longest first, so the result never depends on
//    the order in which values are requested. Cheap for shallow diagrams even
//    at large n (e.g. (97,3) in S_100).
//
//  * column(mu): chi_lambda(mu) for every lambda |- n in canonical order.
//    Each column is built from the column of mu minus its longest cycle, and
//    those sub-columns are memoized. This is what full scans use.
//
// Border strips are located on the beta-set (first-column hook lengths) of
// the diagram: removing an r-strip is moving one bead from position b to an
// empty position b - r, with sign (-1)^(beads strictly in between).
//
// The engine is safe to call from many threads. Memo tables are guarded by
// shared mutexes; concurrent misses may compute the same entry twice, which
// is harmless since values are deterministic.

#ifndef CAYSPEC_CHARACTERS_HPP_
#define CAYSPEC_CHARACTERS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "cayspec/exact.hpp"
#include "cayspec/partitions.hpp"

namespace cayspec {

namespace detail {

struct IntVectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Calls visit(parts_after_removal, sign) for every border strip of length r.
template <class Visit>
void for_each_border_strip(const std::vector<int>& parts, int r, Visit&& visit) {
  const int len = static_cast<int>(parts.size());
  if (len == 0 || r <= 0) return;
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = parts[i] + (len - 1 - i);
  std::vector<char> occupied(beta[0] + 1, 0);
  for (int b : beta) occupied[b] = 1;

  std::vector<int> moved(len);
  std::vector<int> out;
  out.reserve(len);
  for (int i = 0; i < len; ++i) {
    const int target = beta[i] - r;
    if (target < 0 || occupied[target]) continue;
    // Beads strictly between target and beta[i] sit at indices i+1 .. j-1.
    int j = i + 1;
    while (j < len && beta[j] > target) ++j;
    const int between = j - i - 1;
    // New bead sequence, still decreasing.
    int w = 0;
    for (int t = 0; t < i; ++t) moved[w++] = beta[t];
    for (int t = i + 1; t < j; ++t) moved[w++] = beta[t];
    moved[w++] = target;
    for (int t = j; t < len; ++t) moved[w++] = beta[t];
    out.clear();
    for (int t = 0; t < len; ++t) {
      int part = moved[t] - (len - 1 - t);
      if (part == 0) break;
      out.push_back(part);
    }
    visit(out, (between % 2 == 0) ? 1 : -1);
  }
}

}  // namespace detail

class CharacterEngine {
 public:
  struct Record {
    Partition partition;
    CycleType cycle_type;
    BigInt value;
  };

  CharacterEngine() = default;
  CharacterEngine(const CharacterEngine&) = delete;
  CharacterEngine& operator=(const CharacterEngine&) = delete;

  // chi_lambda(mu). Throws InputError if the sizes differ.
  BigInt character(const Partition& lambda, const CycleType& mu) {
    if (lambda.size() != mu.size()) {
      throw InputError("character: partition of " + std::to_string(lambda.size()) +
                       " evaluated on a cycle type of " + std::to_string(mu.size()));
    }
    std::vector<int> cycles = mu.parts();
    return point(lambda.parts(), cycles);
  }

  Rational normalized_character(const Partition& lambda, const CycleType& mu) {
    BigInt chi = character(lambda, mu);
    return Rational(chi, dimension(lambda));
  }

  // chi_lambda(mu) for all lambda |- mu.size(), indexed like partitions(n).
  std::shared_ptr<const std::vector<BigInt>> column(const CycleType& mu) {
    return column_of(mu.parts());
  }

  const std::vector<Partition>& partitions(int n) {
    std::lock_guard lock(lists_mutex_);
    auto it = partition_lists_.find(n);
    if (it == partition_lists_.end()) {
      it = partition_lists_
               .emplace(n, std::make_unique<const std::vector<Partition>>(enumerate_partitions(n)))
               .first;
    }
    return *it->second;
  }

  // Hook-length dimensions of partitions(n), same indexing.
  std::shared_ptr<const std::vector<BigInt>> dimensions(int n) {
    {
      std::lock_guard lock(lists_mutex_);
      auto it = dimension_lists_.find(n);
      if (it != dimension_lists_.end()) return it->second;
    }
    const auto& list = partitions(n);
    auto dims = std::make_shared<std::vector<BigInt>>();
    dims->reserve(list.size());
    for (const auto& p : list) dims->push_back(dimension(p));
    std::lock_guard lock(lists_mutex_);
    return dimension_lists_.emplace(n, std::move(dims)).first->second;
  }

  // Position of p in partitions(p.size()).
  std::size_t index_of(const Partition& p) { return ranker_for(p.size())->rank(p); }

  // Point-memo contents, sorted canonically; used by the cache file.
  std::vector<Record> export_records() const {
    std::vector<Record> out;
    {
      std::shared_lock lock(point_mutex_);
      out.reserve(point_memo_.size());
      for (const auto& [key, value] : point_memo_) {
        auto sep = std::find(key.begin(), key.end(), 0);
        Partition lambda(std::vector<int>(key.begin(), sep));
        CycleType mu = CycleType::from_parts(std::vector<int>(sep + 1, key.end()));
        out.push_back({std::move(lambda), std::move(mu), value});
      }
    }
    std::sort(out.begin(), out.end(), [](const Record& a, const Record& b) {
      if (a.partition.size() != b.partition.size()) return a.partition.size() < b.partition.size();
      if (a.partition != b.partition) return a.partition > b.partition;
      return a.cycle_type.parts() > b.cycle_type.parts();
    });
    return out;
  }

  void import_record(const Record& r) {
    if (r.partition.size() != r.cycle_type.size()) {
      throw InputError("character record with mismatched sizes");
    }
    std::unique_lock lock(point_mutex_);
    point_memo_.emplace(point_key(r.partition.parts(), r.cycle_type.parts()), r.value);
  }

  std::size_t point_memo_size() const {
    std::shared_lock lock(point_mutex_);
    return point_memo_.size();
  }

  void clear_columns() {
    std::unique_lock lock(column_mutex_);
    column_memo_.clear();
  }

 private:
  static std::vector<int> point_key(const std::vector<int>& lambda, std::span<const int> cycles) {
    std::vector<int> key;
    key.reserve(lambda.size() + cycles.size() + 1);
    key.insert(key.end(), lambda.begin(), lambda.end());
    key.push_back(0);
    key.insert(key.end(), cycles.begin(), cycles.end());
    return key;
  }

  BigInt point(const std::vector<int>& lambda, std::span<const int> cycles) {
    if (cycles.empty()) return lambda.empty() ? BigInt(1) : BigInt(0);
    if (cycles.front() == 1) return dimension(Partition(lambda));

    std::vector<int> key = point_key(lambda, cycles);
    {
      std::shared_lock lock(point_mutex_);
      auto it = point_memo_.find(key);
      if (it != point_memo_.end()) return it->second;
    }
    BigInt total = 0;
    const int r = cycles.front();
    std::span<const int> rest = cycles.subspan(1);
    detail::for_each_border_strip(lambda, r, [&](const std::vector<int>& smaller, int sign) {
      BigInt sub = point(smaller, rest);
      if (sign > 0) {
        total += sub;
      } else {
        total -= sub;
      }
    });
    std::unique_lock lock(point_mutex_);
    point_memo_.emplace(std::move(key), total);
    return total;
  }

  std::shared_ptr<const PartitionRanker> ranker_for(int n) {
    std::lock_guard lock(lists_mutex_);
    if (!ranker_ || ranker_->max_n() < n) {
      ranker_ = std::make_shared<const PartitionRanker>(std::max(n, 64));
    }
    return ranker_;
  }

  std::shared_ptr<const std::vector<BigInt>> column_of(const std::vector<int>& cycles) {
    int m = 0;
    for (int c : cycles) m += c;
    if (cycles.empty()) return std::make_shared<const std::vector<BigInt>>(1, BigInt(1));
    if (cycles.front() == 1) return dimensions(m);
    {
      std::shared_lock lock(column_mutex_);
      auto it = column_memo_.find(cycles);
      if (it != column_memo_.end()) return it->second;
    }
    const int r = cycles.front();
    std::vector<int> rest(cycles.begin() + 1, cycles.end());
    auto sub = column_of(rest);
    const auto& list = partitions(m);
    auto ranker = ranker_for(m);
    auto result = std::make_shared<std::vector<BigInt>>(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      BigInt& acc = (*result)[i];
      detail::for_each_border_strip(list[i].parts(), r, [&](const std::vector<int>& smaller, int sign) {
        const BigInt& v = (*sub)[ranker->rank(smaller)];
        if (sign > 0) {
          acc += v;
        } else {
          acc -= v;
        }
      });
    }
    std::unique_lock lock(column_mutex_);
    return column_memo_.emplace(cycles, std::move(result)).first->second;
  }

  mutable std::shared_mutex point_mutex_;
  std::unordered_map<std::vector<int>, BigInt, detail::IntVectorHash> point_memo_;

  mutable std::shared_mutex column_mutex_;
  std::unordered_map<std::vector<int>, std::shared_ptr<const std::vector<BigInt>>,
                     detail::IntVectorHash>
      column_memo_;

  std::mutex lists_mutex_;
  std::map<int, std::unique_ptr<const std::vector<Partition>>> partition_lists_;
  std::map<int, std::shared_ptr<const std::vector<BigInt>>> dimension_lists_;
  std::shared_ptr<const PartitionRanker> ranker_;
};

// Process-wide engine backing the free functions below.
inline CharacterEngine& default_engine() {
  static CharacterEngine engine;
  return engine;
}

inline BigInt mn_character(const Partition& lambda, const CycleType& mu) {
  return default_engine().character(lambda, mu);
}

inline Rational normalized_character(const Partition& lambda, const CycleType& mu) {
  return default_engine().normalized_character(lambda, mu);
}

// Diagrams obtained by deleting one removable corner, canonical order.
inline std::vector<Partition> branching_restrict(const Partition& lambda) {
  if (lambda.size() < 1) throw DomainError("branching_restrict: empty partition");
  std::vector<Partition> out;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i + 1 < parts.size() && parts[i] == parts[i + 1]) continue;
    std::vector<int> smaller = parts;
    if (--smaller[i] == 0) smaller.pop_back();
    out.emplace_back(std::move(smaller));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// Right-hand side dim^(-log(n/f)/(2 log n) + eps), f = max(c1, 1). Floating
// point diagnostic only; eps is supplied by the caller.
inline double ls_bound(int n, int fixed_points, double dim, double eps) {
  if (n < 2) throw DomainError("ls_bound: n must be at least 2");
  if (dim < 1) throw DomainError("ls_bound: dimension must be at least 1");
  const double f = std::max(fixed_points, 1);
  const double exponent = -std::log(n / f) / (2.0 * std::log(static_cast<double>(n))) + eps;
  return std::exp(exponent * std::log(dim));
}

inline double ls_bound(int n, int fixed_points, const BigInt& dim, double eps) {
  if (dim < 1) throw DomainError("ls_bound: dimension must be at least 1");
  if (n < 2) throw DomainError("ls_bound: n must be at least 2");
  const double f = std::max(fixed_points, 1);
  const double exponent = -std::log(n / f) / (2.0 * std::log(static_cast<double>(n))) + eps;
  return std::exp(exponent * log_big(dim));
}

}  // namespace cayspec

#endif  // CAYSPEC_CHARACTERS_HPP_
