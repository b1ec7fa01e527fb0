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

// Normal elements that vanish on every shallow irrep.
//
// The character of an irrep with at most k blocks outside its first row is
// a polynomial in c_1..c_k, and averaging it over S_m (m >= 2k) gives zero
// unless the irrep is trivial. So a non-negative normal element whose
// (c_1..c_k) distribution matches uniform S_m is annihilated by all those
// irreps; making it odd handles the transposes as well.
//
// Canonical realization of a distribution row (c_1..c_k) in S_n, f = k+1:
//   1. c_i cycles of length i for i <= k;
//   2. the R remaining points go into f-cycles, and when f does not divide
//      R the last f-cycle becomes one tail cycle of length f + (R mod f);
//   3. if the result is even, merge the tail with one f-cycle, or with no
//      tail merge two f-cycles into a 2f-cycle.
// Every chosen class is odd and has c_{k+1} >= floor(R/f) - 2.

#ifndef CAYSPEC_CONSTRUCTIONS_HPP_
#define CAYSPEC_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cayspec/characters.hpp"
#include "cayspec/exact.hpp"
#include "cayspec/normal_spectra.hpp"
#include "cayspec/partitions.hpp"

namespace cayspec {

struct CycleCountRow {
  std::vector<int> counts;  // c_1..c_k
  Rational probability;
};

struct CycleCountDistribution {
  int k = 0;
  int m = 0;
  std::vector<CycleCountRow> rows;  // counts in decreasing lex order
};

inline std::string counts_to_string(const std::vector<int>& counts) {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts[i]);
  }
  return out;
}

// Law of (c_1..c_k) for a uniform permutation of S_m.
inline CycleCountDistribution joint_cycle_distribution(int k, int m) {
  if (k < 1 || m < k) throw DomainError("joint_cycle_distribution: needs m >= k >= 1");
  std::map<std::vector<int>, BigInt, std::greater<>> mass;
  for (const auto& t : enumerate_cycle_types(m)) {
    std::vector<int> prefix(k);
    for (int i = 1; i <= k; ++i) prefix[i - 1] = t.count(i);
    mass[prefix] += class_size(t);
  }
  CycleCountDistribution d{k, m, {}};
  const BigInt total = factorial(m);
  for (const auto& [prefix, size] : mass) d.rows.push_back({prefix, Rational(size, total)});
  return d;
}

// Canonical odd class with the given prefix. Throws DomainError naming the
// row if n is too small.
inline CycleType realize_row(int n, int k, const std::vector<int>& prefix) {
  const int f = k + 1;
  std::vector<int> counts(f, 0);
  int used = 0;
  for (int i = 1; i <= k; ++i) {
    counts[i - 1] = prefix[i - 1];
    used += i * prefix[i - 1];
  }
  auto fail = [&](const std::string& why) {
    return DomainError("build_annihilator: row (" + counts_to_string(prefix) + ") infeasible at n=" +
                       std::to_string(n) + ": " + why);
  };
  const int rest = n - used;
  if (rest < 0) throw fail("prefix uses more than n points");
  int fillers = rest / f;
  const int r = rest % f;
  int tail = 0;
  if (r > 0) {
    if (fillers == 0) throw fail("too few points left for a cycle longer than k");
    --fillers;
    tail = f + r;
  }
  int cycles = std::accumulate(counts.begin(), counts.end(), 0) + fillers + (tail ? 1 : 0);
  int merged = 0;
  if ((n - cycles) % 2 == 0) {
    if (tail) {
      if (fillers < 1) throw fail("cannot make the class odd");
      --fillers;
      tail += f;
    } else {
      if (fillers < 2) throw fail("cannot make the class odd");
      fillers -= 2;
      merged = 2 * f;
    }
  }
  counts[f - 1] = fillers;
  std::vector<int> parts;
  for (int len = 1; len <= f; ++len) parts.insert(parts.end(), counts[len - 1], len);
  if (tail) parts.push_back(tail);
  if (merged) parts.push_back(merged);
  CycleType t = CycleType::from_parts(parts);
  if (t.is_even()) throw fail("parity fix failed");
  return t;
}

// Lower bound on c_{k+1} guaranteed for every chosen class.
inline long c_next_floor(int n, int k, const std::vector<int>& prefix) {
  long rest = n;
  for (int i = 1; i <= k; ++i) rest -= static_cast<long>(i) * prefix[i - 1];
  long q = rest - (k + 2);
  long fl = q >= 0 ? q / (k + 1) : -((-q + k) / (k + 1));
  return fl - 1;
}

struct AnnihilatorRow {
  std::vector<int> counts;
  Rational probability;
  CycleType cls;
  Rational alpha;  // probability / |cls|
};

struct AnnihilatorSpec {
  int n = 0;
  int k = 0;
  int m = 0;
  bool experimental = false;  // m < 2k
  std::vector<AnnihilatorRow> rows;

  NormalElement element() const {
    NormalElement sigma(n);
    for (const auto& r : rows) sigma.add(r.cls, r.alpha);
    return sigma;
  }
};

inline AnnihilatorSpec build_annihilator(int n, int k, int m) {
  auto dist = joint_cycle_distribution(k, m);
  AnnihilatorSpec spec;
  spec.n = n;
  spec.k = k;
  spec.m = m;
  spec.experimental = m < 2 * k;
  for (const auto& row : dist.rows) {
    CycleType cls = realize_row(n, k, row.counts);
    spec.rows.push_back({row.counts, row.probability, cls, row.probability / class_size(cls)});
  }
  return spec;
}

// Record format, one field per tab:
//   annihilator <n> <k> <m>
//   row <c_1,..,c_k> <probability p/q> <cycle type> <alpha p/q>
inline void write_annihilator_spec(const AnnihilatorSpec& spec, std::ostream& out) {
  out << "annihilator\t" << spec.n << '\t' << spec.k << '\t' << spec.m << '\n';
  for (const auto& r : spec.rows) {
    out << "row\t" << counts_to_string(r.counts) << '\t' << to_string(r.probability) << '\t'
        << r.cls.to_string() << '\t' << to_string(r.alpha) << '\n';
  }
}

inline AnnihilatorSpec read_annihilator_spec(std::istream& in) {
  auto split = [](const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream s(line);
    std::string f;
    while (std::getline(s, f, '\t')) fields.push_back(f);
    return fields;
  };
  std::string line;
  if (!std::getline(in, line)) throw InputError("annihilator spec: empty input");
  auto head = split(line);
  if (head.size() != 4 || head[0] != "annihilator") throw InputError("annihilator spec: bad header");
  AnnihilatorSpec spec;
  spec.n = parse_int(head[1], "n");
  spec.k = parse_int(head[2], "k");
  spec.m = parse_int(head[3], "m");
  spec.experimental = spec.m < 2 * spec.k;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split(line);
    if (f.size() != 5 || f[0] != "row") throw InputError("annihilator spec: bad row '" + line + "'");
    AnnihilatorRow r;
    std::istringstream cs(f[1]);
    std::string c;
    while (std::getline(cs, c, ',')) r.counts.push_back(parse_int(c, "cycle count"));
    r.probability = parse_rational(f[2]);
    r.cls = CycleType::parse(f[3]);
    r.alpha = parse_rational(f[4]);
    if (r.cls.size() != spec.n) throw InputError("annihilator spec: class is not of n");
    spec.rows.push_back(std::move(r));
  }
  return spec;
}

// Exact checks of a built spec against its own invariants.
struct SpecAudit {
  bool distribution_matches = false;  // induced law equals joint_cycle_distribution
  bool all_odd = false;
  bool prefixes_match = false;
  bool floor_holds = false;
  Rational total_weight;
};

inline SpecAudit audit_annihilator(const AnnihilatorSpec& spec) {
  SpecAudit a;
  auto dist = joint_cycle_distribution(spec.k, spec.m);
  std::map<std::vector<int>, Rational> induced;
  a.all_odd = a.prefixes_match = a.floor_holds = true;
  for (const auto& r : spec.rows) {
    if (r.alpha < 0) a.all_odd = false;
    induced[r.counts] += r.alpha * class_size(r.cls);
    a.all_odd = a.all_odd && !r.cls.is_even();
    for (int i = 1; i <= spec.k; ++i) a.prefixes_match = a.prefixes_match && r.cls.count(i) == r.counts[i - 1];
    a.floor_holds = a.floor_holds && r.cls.count(spec.k + 1) >= c_next_floor(spec.n, spec.k, r.counts);
  }
  a.distribution_matches = induced.size() == dist.rows.size();
  for (const auto& row : dist.rows) {
    auto it = induced.find(row.counts);
    a.distribution_matches = a.distribution_matches && it != induced.end() && it->second == row.probability;
  }
  a.total_weight = spec.element().total_weight();
  return a;
}

// Diagrams at n, other than (n) and (1^n), with blocks_outside == depth,
// in canonical order.
inline std::vector<Partition> irreps_at_depth(int n, int depth) {
  std::vector<Partition> out;
  for (const auto& tail : enumerate_partitions(depth)) {
    if (n - depth < tail.first_part()) continue;
    Partition p = row_family_member(n, tail.parts());
    for (const auto& q : {p, transpose(p)}) {
      if (blocks_outside(q) != depth || is_trivial_or_sign(q)) continue;
      if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// Eigenvalue evaluated on the shallow side of the diagram: a deep column is
// handled as sign times its transpose.
inline Rational shallow_eigenvalue(const NormalElement& sigma, const Partition& rho,
                                   CharacterEngine& engine = default_engine()) {
  const bool flip = blocks_outside_first_column(rho) < blocks_outside_first_row(rho);
  const Partition shallow = flip ? transpose(rho) : rho;
  Rational total = 0;
  for (const auto& [c, alpha] : sigma.coeffs()) {
    BigInt chi = engine.character(shallow, c);
    if (flip) chi *= c.sign();
    total += alpha * class_size(c) * chi;
  }
  return total / dimension(rho);
}

struct IrrepValue {
  Partition irrep;
  Rational eigenvalue;
};

struct AnnihilationReport {
  int k = 0;
  std::vector<IrrepValue> values;  // every irrep of depth 1..k
  bool all_zero = false;
};

inline AnnihilationReport verify_annihilation(const NormalElement& sigma, int k,
                                              CharacterEngine& engine = default_engine()) {
  AnnihilationReport r;
  r.k = k;
  r.all_zero = true;
  for (int depth = 1; depth <= k; ++depth) {
    for (const auto& rho : irreps_at_depth(sigma.n(), depth)) {
      Rational v = shallow_eigenvalue(sigma, rho, engine);
      r.all_zero = r.all_zero && v == 0;
      r.values.push_back({rho, v});
    }
  }
  return r;
}

// Depth k+1 irreps with a strictly positive eigenvalue.
inline std::vector<IrrepValue> find_beating_irrep(const NormalElement& sigma, int k,
                                                  CharacterEngine& engine = default_engine()) {
  std::vector<IrrepValue> out;
  for (const auto& rho : irreps_at_depth(sigma.n(), k + 1)) {
    Rational v = shallow_eigenvalue(sigma, rho, engine);
    if (v > 0) out.push_back({rho, v});
  }
  return out;
}

// Best-effort indicator (0-1 coefficient) variant: one odd class per row,
// all with coefficient 1, chosen among realization variants so that class
// sizes are as close as possible to proportional to the row probabilities.
// The induced law differs from the target; the residual is reported.
struct IndicatorVariant {
  NormalElement sigma;
  std::vector<CycleType> classes;       // one per distribution row
  std::vector<Rational> induced;        // |C_i| / sum_j |C_j|
  std::vector<Rational> target;
  double residual = 0;                  // max_i |induced_i - target_i|
};

namespace detail {

// Odd variants of the canonical class: j extra merges of f-cycle pairs
// (each changes parity, so j runs over even numbers).
inline std::vector<CycleType> realization_variants(int n, int k, const std::vector<int>& prefix,
                                                   int max_merges) {
  const int f = k + 1;
  CycleType base = realize_row(n, k, prefix);
  std::vector<CycleType> out{base};
  for (int j = 2; j <= max_merges; j += 2) {
    std::vector<int> counts = base.counts();
    if (static_cast<int>(counts.size()) < 2 * f) counts.resize(2 * f, 0);
    if (counts[f - 1] < 2 * j) break;
    counts[f - 1] -= 2 * j;
    counts[2 * f - 1] += j;
    out.push_back(CycleType::from_counts(counts));
  }
  return out;
}

}  // namespace detail

inline IndicatorVariant build_indicator_variant(int n, int k, int m, int max_merges = 12) {
  auto dist = joint_cycle_distribution(k, m);
  std::vector<std::vector<CycleType>> candidates;
  for (const auto& row : dist.rows) candidates.push_back(detail::realization_variants(n, k, row.counts, max_merges));

  // Choose log|C_i| - log p_i as close to a common level as possible; try
  // every candidate of every row as the level.
  auto log_size = [](const CycleType& c) { return log_big(class_size(c)); };
  std::vector<std::size_t> best_choice;
  double best_spread = INFINITY;
  for (std::size_t ref = 0; ref < candidates.size(); ++ref) {
    for (const auto& anchor : candidates[ref]) {
      const double level = log_size(anchor) - std::log(to_double(dist.rows[ref].probability));
      std::vector<std::size_t> choice;
      double spread = 0;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        const double want = level + std::log(to_double(dist.rows[i].probability));
        std::size_t pick = 0;
        double gap = INFINITY;
        for (std::size_t a = 0; a < candidates[i].size(); ++a) {
          double g = std::abs(log_size(candidates[i][a]) - want);
          if (g < gap) {
            gap = g;
            pick = a;
          }
        }
        choice.push_back(pick);
        spread = std::max(spread, gap);
      }
      if (spread < best_spread) {
        best_spread = spread;
        best_choice = choice;
      }
    }
  }
  IndicatorVariant v{NormalElement(n), {}, {}, {}, 0};
  BigInt total = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    v.classes.push_back(candidates[i][best_choice[i]]);
    v.sigma.add(v.classes.back(), 1);
    total += class_size(v.classes.back());
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    v.induced.push_back(Rational(class_size(v.classes[i]), total));
    v.target.push_back(dist.rows[i].probability);
    v.residual = std::max(v.residual, std::abs(to_double(v.induced[i] - v.target[i])));
  }
  return v;
}

}  // namespace cayspec

#endif  // CAYSPEC_CONSTRUCTIONS_HPP_
