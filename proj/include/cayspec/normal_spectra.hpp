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

// Spectra of normal (conjugation invariant) elements of R[S_n].
//
// A normal element Sigma = sum_C alpha_C * (sum of the class C) acts on the
// irrep lambda as the scalar
//
//   sum_C alpha_C |C| chi_lambda(C) / dim(lambda),
//
// so its spectrum is known exactly once the characters are. Everything here
// compares exact rationals: ties are real ties.
//
// "Nontrivial" irreps are all partitions of n other than (n) and (1^n).

#ifndef CAYSPEC_NORMAL_SPECTRA_HPP_
#define CAYSPEC_NORMAL_SPECTRA_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayspec/characters.hpp"
#include "cayspec/exact.hpp"
#include "cayspec/parallel.hpp"
#include "cayspec/partitions.hpp"
#include "cayspec/table1.hpp"

namespace cayspec {

class NormalElement {
 public:
  explicit NormalElement(int n) : n_(n) {
    if (n < 1) throw DomainError("NormalElement: n must be positive");
  }

  static NormalElement class_indicator(const CycleType& c) {
    NormalElement s(c.size());
    s.add(c, 1);
    return s;
  }

  // Adds alpha to the coefficient of every permutation of type c.
  void add(const CycleType& c, const Rational& alpha) {
    if (c.size() != n_) throw InputError("NormalElement: cycle type " + c.to_string() + " is not of n");
    if (alpha < 0) throw InputError("NormalElement: coefficients must be non-negative");
    if (alpha == 0) return;
    coeffs_[c] += alpha;
  }

  int n() const { return n_; }
  const std::map<CycleType, Rational>& coeffs() const { return coeffs_; }

  Rational coefficient(const CycleType& c) const {
    auto it = coeffs_.find(c);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  // |Sigma| = sum_C alpha_C |C|.
  Rational total_weight() const {
    Rational total = 0;
    for (const auto& [c, alpha] : coeffs_) total += alpha * class_size(c);
    return total;
  }

  NormalElement scaled(const Rational& factor) const {
    if (factor < 0) throw InputError("NormalElement: scale factor must be non-negative");
    NormalElement out(n_);
    for (const auto& [c, alpha] : coeffs_) out.add(c, alpha * factor);
    return out;
  }

 private:
  int n_;
  std::map<CycleType, Rational> coeffs_;
};

inline Rational eigenvalue(const NormalElement& sigma, const Partition& lambda,
                           CharacterEngine& engine = default_engine()) {
  if (lambda.size() != sigma.n()) throw InputError("eigenvalue: partition is not of n");
  Rational total = 0;
  for (const auto& [c, alpha] : sigma.coeffs()) {
    total += alpha * class_size(c) * engine.character(lambda, c);
  }
  return total / dimension(lambda);
}

struct EigenvalueReport {
  int n = 0;
  std::vector<Partition> irreps;     // partitions(n), canonical order
  std::vector<Rational> eigenvalues;  // same indexing
  Rational total;                    // |Sigma|, the trivial eigenvalue
  Rational lambda;                   // largest nontrivial eigenvalue
  std::vector<Partition> argmax;     // every nontrivial irrep attaining it
  Rational gap;                      // total - lambda
};

namespace detail {

// Indices of partitions(n) other than (n) and (1^n): 1 .. p(n) - 2.
inline bool is_nontrivial_index(std::size_t i, std::size_t count) { return i > 0 && i + 1 < count; }

struct FractionMax {
  BigInt num = 0;
  BigInt den = 0;  // 0 until the first candidate
  std::vector<std::size_t> argmax;

  void offer(const BigInt& a, const BigInt& b, std::size_t index) {
    if (den == 0) {
      num = a;
      den = b;
      argmax = {index};
      return;
    }
    int cmp = compare_fractions(a, b, num, den);
    if (cmp > 0) {
      num = a;
      den = b;
      argmax = {index};
    } else if (cmp == 0) {
      argmax.push_back(index);
    }
  }

  Rational value() const { return Rational(num, den); }
};

// Max of chi/dim over nontrivial irreps for one column.
inline FractionMax max_nontrivial(const std::vector<BigInt>& column, const std::vector<BigInt>& dims) {
  FractionMax best;
  for (std::size_t i = 0; i < column.size(); ++i) {
    if (is_nontrivial_index(i, column.size())) best.offer(column[i], dims[i], i);
  }
  return best;
}

inline void require_nontrivial_irreps(int n, const char* what) {
  if (n < 3) {
    throw DomainError(std::string(what) + ": S_n has no irreps besides trivial and sign for n < 3");
  }
}

}  // namespace detail

inline EigenvalueReport lambda_nontrivial(const NormalElement& sigma,
                                          CharacterEngine& engine = default_engine()) {
  const int n = sigma.n();
  detail::require_nontrivial_irreps(n, "lambda_nontrivial");
  EigenvalueReport report;
  report.n = n;
  report.irreps = engine.partitions(n);
  auto dims = engine.dimensions(n);
  std::vector<Rational> weighted(report.irreps.size(), Rational(0));
  for (const auto& [c, alpha] : sigma.coeffs()) {
    Rational w = alpha * class_size(c);
    auto col = engine.column(c);
    for (std::size_t i = 0; i < weighted.size(); ++i) weighted[i] += w * (*col)[i];
  }
  report.eigenvalues.resize(weighted.size());
  for (std::size_t i = 0; i < weighted.size(); ++i) {
    report.eigenvalues[i] = weighted[i] / (*dims)[i];
  }
  report.total = sigma.total_weight();
  bool first = true;
  for (std::size_t i = 0; i < weighted.size(); ++i) {
    if (!detail::is_nontrivial_index(i, weighted.size())) continue;
    const Rational& v = report.eigenvalues[i];
    if (first || v > report.lambda) {
      report.lambda = v;
      report.argmax.clear();
      first = false;
    }
    if (v == report.lambda) report.argmax.push_back(report.irreps[i]);
  }
  report.gap = report.total - report.lambda;
  return report;
}

struct RulingResult {
  Rational value;                 // max normalized character
  std::vector<Partition> irreps;  // full tie set, canonical order
};

// Nontrivial irreps maximizing the normalized character at mu.
inline RulingResult ruling_set(int n, const CycleType& mu, CharacterEngine& engine = default_engine()) {
  if (mu.size() != n) throw InputError("ruling_set: cycle type is not of n");
  detail::require_nontrivial_irreps(n, "ruling_set");
  auto col = engine.column(mu);
  auto dims = engine.dimensions(n);
  auto best = detail::max_nontrivial(*col, *dims);
  RulingResult out{best.value(), {}};
  const auto& parts = engine.partitions(n);
  for (auto i : best.argmax) out.irreps.push_back(parts[i]);
  return out;
}

// The eight low-depth families, in the order they are listed.
inline const std::vector<FamilyId>& eight_families() {
  static const std::vector<FamilyId> families = {
      family_by_tail({1}),          family_by_tail({2}),          family_by_tail({3}),
      family_by_tail({2, 1}),       family_by_tail({4}),          family_by_tail({1}, true),
      family_by_tail({2}, true),    family_by_tail({1, 1}, true),
  };
  return families;
}

struct EightSet {
  std::vector<Partition> members;     // distinct, in listing order
  std::vector<FamilyId> families;     // family of each member
  std::vector<Partition> duplicates;  // members listed twice (only for tiny n)
};

inline EightSet eight_set(int n) {
  if (n < 8) throw DomainError("eight_set: needs n >= 8");
  EightSet out;
  for (const auto& f : eight_families()) {
    Partition p = family_member(f, n);
    if (std::find(out.members.begin(), out.members.end(), p) != out.members.end()) {
      out.duplicates.push_back(p);
      continue;
    }
    out.members.push_back(p);
    out.families.push_back(f);
  }
  return out;
}

struct EightMax {
  Rational value;
  std::vector<Partition> argmax;  // listing order, distinct
};

// Max normalized character over the eight families, from the family polynomials alone.
inline EightMax eight_max(int n, const CycleType& mu) {
  if (mu.size() != n) throw InputError("eight_max: cycle type is not of n");
  EightSet eight = eight_set(n);
  EightMax out;
  for (std::size_t i = 0; i < eight.members.size(); ++i) {
    Rational v = table1_normalized(eight.families[i], mu);
    if (i == 0 || v > out.value) {
      out.value = v;
      out.argmax.clear();
    }
    if (v == out.value) out.argmax.push_back(eight.members[i]);
  }
  return out;
}

struct ScanOptions {
  int workers = 1;
  // Family polynomials only: report eight_max per class, no global scan.
  bool eight_only = false;
  // Skip irreps whose ls_bound cannot reach the eight_max incumbent. Heuristic.
  bool prune = false;
  double prune_eps = 0.1;
};

struct ClassVerdict {
  CycleType mu;
  EightMax eight;
  std::optional<RulingResult> global;  // absent in eight-only mode
  std::size_t pruned = 0;              // irreps skipped by the heuristic
  bool violation = false;              // global max strictly above eight_max
};

struct EightTheoremReport {
  int n = 0;
  bool exhaustive = true;  // false if pruning or eight-only was used
  std::vector<ClassVerdict> classes;

  std::vector<const ClassVerdict*> violations() const {
    std::vector<const ClassVerdict*> out;
    for (const auto& c : classes) {
      if (c.violation) out.push_back(&c);
    }
    return out;
  }
  std::size_t violation_count() const { return violations().size(); }
};

// For every cycle type of n: is the max over all nontrivial irreps attained
// inside the eight families?
inline EightTheoremReport check_eight_theorem(int n, const ScanOptions& options = {},
                                              CharacterEngine& engine = default_engine()) {
  if (n < 8) throw DomainError("check_eight_theorem: needs n >= 8");
  EightTheoremReport report;
  report.n = n;
  report.exhaustive = !options.eight_only && !options.prune;
  auto types = enumerate_cycle_types(n);
  report.classes.resize(types.size());
  const auto& parts = engine.partitions(n);
  auto dims = engine.dimensions(n);

  parallel_for(types.size(), options.workers, [&](std::size_t t) {
    ClassVerdict& v = report.classes[t];
    v.mu = types[t];
    v.eight = eight_max(n, v.mu);
    if (options.eight_only) return;
    detail::FractionMax best;
    if (!options.prune) {
      best = detail::max_nontrivial(*engine.column(v.mu), *dims);
    } else {
      const double incumbent = to_double(v.eight.value);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!detail::is_nontrivial_index(i, parts.size())) continue;
        if (ls_bound(n, v.mu.count(1), (*dims)[i], options.prune_eps) < incumbent) {
          ++v.pruned;
          continue;
        }
        best.offer(engine.character(parts[i], v.mu), (*dims)[i], i);
      }
    }
    RulingResult global{best.value(), {}};
    for (auto i : best.argmax) global.irreps.push_back(parts[i]);
    v.violation = global.value > v.eight.value;
    v.global = std::move(global);
  });
  return report;
}

// Tables of ruling irreps by short cycle counts. Each row names an irrep
// (the member of a transpose pair that is one of the eight) and the
// condition on c_1..c_4 as written.
struct Table23Rule {
  Partition irrep;
  std::string parity;     // "even" or "odd"
  std::string condition;  // e.g. "c1=1,c2=0,c3=0,c4<=(n-5)/8"
};

inline std::vector<Table23Rule> table23_predict(int n, const CycleType& mu) {
  if (mu.size() != n) throw InputError("table23_predict: cycle type is not of n");
  if (n < 8) throw DomainError("table23_predict: needs n >= 8");
  const long c1 = mu.count(1), c2 = mu.count(2), c3 = mu.count(3), c4 = mu.count(4);
  const Partition std_rep = family_member(family_by_tail({1}), n);
  const Partition two = family_member(family_by_tail({2}), n);
  const Partition three = family_member(family_by_tail({3}), n);
  const Partition two_one = family_member(family_by_tail({2, 1}), n);
  const Partition four = family_member(family_by_tail({4}), n);
  const Partition std_t = transpose(std_rep);
  const Partition two_t = transpose(two);
  const Partition hook_t = family_member(family_by_tail({1, 1}, true), n);

  std::vector<Table23Rule> out;
  auto rule = [&](bool holds, const Partition& p, const char* cond) {
    if (holds) out.push_back({p, mu.is_even() ? "even" : "odd", cond});
  };
  if (mu.is_even()) {
    rule(c1 >= 2, std_rep, "c1>=2");
    rule(c1 == 1 && c2 >= 2, two, "c1=1,c2>=2");
    rule(c1 == 0 && c2 >= 1, two, "c1=0,c2>=1");
    rule(c1 == 0 && c2 == 0 && 3 * c3 <= n - 4, hook_t, "c1=0,c2=0,c3<=(n-4)/3");
    rule(c1 == 1 && c2 == 1 && c3 >= 1, three, "c1=1,c2=1,c3>=1");
    rule(c1 == 1 && c2 == 0 && c3 >= 2, three, "c1=1,c2=0,c3>=2");
    rule(c1 == 1 && c2 == 0 && c3 == 1 && 4 * c4 <= n - 5, three, "c1=1,c2=0,c3=1,c4<=(n-5)/4");
    rule(c1 == 0 && c2 == 0 && 3 * c3 == n, three, "c1=0,c2=0,c3=n/3");
    rule(c1 == 1 && c2 == 1 && c3 == 0 && 8 * c4 <= n + 3, two_one, "c1=1,c2=1,c3=0,c4<=(n+3)/8");
    rule(c1 == 1 && c2 == 0 && c3 == 0 && 8 * c4 <= n - 5, two_one, "c1=1,c2=0,c3=0,c4<=(n-5)/8");
    rule(c1 == 1 && c2 == 1 && c3 == 0 && 8 * c4 >= n + 4, four, "c1=1,c2=1,c3=0,c4>=(n+4)/8");
    rule(c1 == 1 && c2 == 0 && c3 == 1 && 4 * c4 == n - 4, four, "c1=1,c2=0,c3=1,c4=(n-4)/4");
    rule(c1 == 1 && c2 == 0 && c3 == 0 && 8 * c4 >= n - 4, four, "c1=1,c2=0,c3=0,c4>=(n-4)/8");
  } else {
    rule(c1 >= 2, std_rep, "c1>=2");
    rule(c1 == 0 && 2 * c2 <= n - 3, std_t, "c1=0,c2<=(n-3)/2");
    rule(c1 == 0 && 2 * c2 == n, two, "c1=0,c2=n/2");
    rule(c1 == 1 && c2 == 0, two_t, "c1=1,c2=0");
    rule(c1 == 2 && 2 * c2 == n - 2, hook_t, "c1=2,c2=(n-2)/2");
    rule(c1 == 1 && c2 >= 2, hook_t, "c1=1,c2>=2");
    rule(c1 == 1 && c2 == 1 && 3 * c3 <= n - 4, hook_t, "c1=1,c2=1,c3<=(n-4)/3");
    rule(c1 == 1 && c2 == 1 && 3 * c3 == n - 3, three, "c1=1,c2=1,c3=(n-3)/3");
  }
  return out;
}

struct Table23Mismatch {
  CycleType mu;
  std::vector<Table23Rule> predicted;  // empty: no row matched
  EightMax eight;
  std::vector<Rational> predicted_values;
};

struct Table23Report {
  int n = 0;
  int max_c1 = 0;
  std::size_t checked = 0;
  std::size_t multi_row = 0;  // classes matched by more than one row
  std::vector<Table23Mismatch> mismatches;
};

// Report-only check, family polynomial evaluation only: over cycle types with
// c1 <= max_c1, every matched row's irrep must attain eight_max. Classes no
// row covers count as mismatches.
inline Table23Report check_table23(int n, int max_c1 = 1, int workers = 1) {
  Table23Report report;
  report.n = n;
  report.max_c1 = max_c1;
  std::vector<CycleType> types;
  for (auto& mu : enumerate_cycle_types(n)) {
    if (mu.count(1) <= max_c1) types.push_back(std::move(mu));
  }
  std::vector<std::optional<Table23Mismatch>> slots(types.size());
  std::vector<char> multi(types.size(), 0);
  parallel_for(types.size(), workers, [&](std::size_t t) {
    const CycleType& mu = types[t];
    auto rules = table23_predict(n, mu);
    multi[t] = rules.size() > 1;
    EightMax best = eight_max(n, mu);
    std::vector<Rational> values;
    bool ok = !rules.empty();
    for (const auto& r : rules) {
      auto family = family_of(r.irrep);
      values.push_back(table1_normalized(*family, mu));
      if (values.back() != best.value) ok = false;
    }
    if (!ok) slots[t] = Table23Mismatch{mu, std::move(rules), std::move(best), std::move(values)};
  });
  report.checked = types.size();
  for (std::size_t t = 0; t < types.size(); ++t) {
    report.multi_row += multi[t];
    if (slots[t]) report.mismatches.push_back(std::move(*slots[t]));
  }
  return report;
}

// delta_n = 2(n-2)/(n(n-3)).
inline Rational gap_delta(int n) {
  if (n < 4) throw DomainError("gap_delta: needs n >= 4");
  return Rational(2 * (n - 2), static_cast<long>(n) * (n - 3));
}

struct GapReport {
  int n = 0;
  Rational total;
  Rational lambda;
  std::vector<Partition> argmax;
  Rational std_eigenvalue;
  Rational gap;      // total - lambda
  Rational std_gap;  // total - std_eigenvalue
  Rational delta;
  Rational bound;  // std_gap * (1 - delta)
  bool holds = false;
};

// gap >= std_gap * (1 - delta_n), exactly.
inline GapReport check_gap_theorem(const NormalElement& sigma, CharacterEngine& engine = default_engine()) {
  const int n = sigma.n();
  auto lam = lambda_nontrivial(sigma, engine);
  GapReport r;
  r.n = n;
  r.total = lam.total;
  r.lambda = lam.lambda;
  r.argmax = lam.argmax;
  r.std_eigenvalue = lam.eigenvalues[1];  // (n-1,1) follows (n) canonically
  r.gap = lam.gap;
  r.std_gap = r.total - r.std_eigenvalue;
  r.delta = gap_delta(n);
  r.bound = r.std_gap * (1 - r.delta);
  r.holds = r.gap >= r.bound;
  return r;
}

struct GapClassViolation {
  CycleType mu;
  Partition irrep;
  Rational value;  // normalized character
  Rational limit;  // 1 - (1 - chi_std)(1 - delta)
};

struct GapClassReport {
  int n = 0;
  std::size_t pairs_checked = 0;
  std::vector<GapClassViolation> violations;
};

// Per class: 1 - chi~_rho >= (1 - chi~_std)(1 - delta_n) for every
// nontrivial rho.
inline GapClassReport check_gap_per_class(int n, int workers = 1, CharacterEngine& engine = default_engine()) {
  detail::require_nontrivial_irreps(n, "check_gap_per_class");
  GapClassReport report;
  report.n = n;
  const Rational keep = 1 - gap_delta(n);
  auto types = enumerate_cycle_types(n);
  const auto& parts = engine.partitions(n);
  auto dims = engine.dimensions(n);
  std::vector<std::vector<GapClassViolation>> slots(types.size());
  parallel_for(types.size(), workers, [&](std::size_t t) {
    auto col = engine.column(types[t]);
    Rational std_value((*col)[1], (*dims)[1]);
    Rational limit = 1 - (1 - std_value) * keep;
    auto best = detail::max_nontrivial(*col, *dims);
    if (best.value() <= limit) return;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!detail::is_nontrivial_index(i, parts.size())) continue;
      Rational v((*col)[i], (*dims)[i]);
      if (v > limit) slots[t].push_back({types[t], parts[i], v, limit});
    }
  });
  report.pairs_checked = types.size() * (parts.size() - 2);
  for (auto& s : slots) {
    for (auto& v : s) report.violations.push_back(std::move(v));
  }
  return report;
}

struct Lemma211Report {
  int n = 0;
  Rational bound;  // 3/(n(n-2)(n-4))
  std::size_t checked = 0;
  Rational min_value;
  CycleType argmin;
  std::vector<std::pair<CycleType, Rational>> violations;
};

// eight_max(n, mu) >= 3/(n(n-2)(n-4)) for every cycle type.
inline Lemma211Report check_lemma_211(int n, int workers = 1) {
  if (n < 8) throw DomainError("check_lemma_211: needs n >= 8");
  Lemma211Report report;
  report.n = n;
  report.bound = Rational(3, static_cast<long>(n) * (n - 2) * (n - 4));
  auto types = enumerate_cycle_types(n);
  std::vector<Rational> values(types.size());
  parallel_for(types.size(), workers, [&](std::size_t t) { values[t] = eight_max(n, types[t]).value; });
  report.checked = types.size();
  for (std::size_t t = 0; t < types.size(); ++t) {
    if (t == 0 || values[t] < report.min_value) {
      report.min_value = values[t];
      report.argmin = types[t];
    }
    if (values[t] < report.bound) report.violations.emplace_back(types[t], values[t]);
  }
  return report;
}

struct DimsAuditReport {
  int n = 0;
  int min_outside = 0;
  Rational exponent;
  std::size_t checked = 0;
  std::vector<Partition> failures;
  std::optional<BigInt> min_dimension;
  std::optional<Partition> argmin;
};

// Over partitions with at least min_outside blocks outside both the first
// row and the first column: dim >= n^exponent, checked as
// dim^q >= n^p for exponent = p/q.
inline DimsAuditReport dims_audit(int n, int min_outside, const Rational& exponent) {
  if (n < 1) throw DomainError("dims_audit: n must be positive");
  if (exponent <= 0) throw InputError("dims_audit: exponent must be positive");
  DimsAuditReport report;
  report.n = n;
  report.min_outside = min_outside;
  report.exponent = exponent;
  const BigInt p = numerator_of(exponent);
  const BigInt q = denominator_of(exponent);
  if (p > 100000 || q > 100000) throw InputError("dims_audit: exponent numerator/denominator too large");
  const BigInt rhs = pow_big(BigInt(n), static_cast<unsigned>(p));
  for (const auto& lambda : enumerate_partitions(n)) {
    if (blocks_outside(lambda) < min_outside) continue;
    ++report.checked;
    BigInt d = dimension(lambda);
    if (!report.min_dimension || d < *report.min_dimension) {
      report.min_dimension = d;
      report.argmin = lambda;
    }
    if (pow_big(d, static_cast<unsigned>(q)) < rhs) report.failures.push_back(lambda);
  }
  return report;
}

struct LsBoundReport {
  int n = 0;
  double eps = 0;
  std::size_t checked = 0;  // pairs with a positive normalized character
  std::size_t exceeding = 0;
  double worst_ratio = 0;  // max of value / bound
  std::optional<std::pair<Partition, CycleType>> worst;
};

// Floating point diagnostic comparing positive normalized characters with
// ls_bound at a caller supplied eps. Reports, never asserts.
inline LsBoundReport ls_bound_report(int n, double eps, CharacterEngine& engine = default_engine()) {
  detail::require_nontrivial_irreps(n, "ls_bound_report");
  LsBoundReport r;
  r.n = n;
  r.eps = eps;
  const auto& parts = engine.partitions(n);
  auto dims = engine.dimensions(n);
  for (const auto& mu : enumerate_cycle_types(n)) {
    auto col = engine.column(mu);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!detail::is_nontrivial_index(i, parts.size()) || (*col)[i] <= 0) continue;
      ++r.checked;
      const double value = to_double(Rational((*col)[i], (*dims)[i]));
      const double ratio = value / ls_bound(n, mu.count(1), (*dims)[i], eps);
      if (ratio > 1) ++r.exceeding;
      if (ratio > r.worst_ratio) {
        r.worst_ratio = ratio;
        r.worst = std::make_pair(parts[i], mu);
      }
    }
  }
  return r;
}

}  // namespace cayspec

#endif  // CAYSPEC_NORMAL_SPECTRA_HPP_
