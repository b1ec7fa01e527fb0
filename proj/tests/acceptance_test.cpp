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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances and time budgets are the stated ones.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cayspec/characters.hpp"
#include "cayspec/constructions.hpp"
#include "cayspec/normal_spectra.hpp"
#include "cayspec/schreier.hpp"
#include "cayspec/table1.hpp"

namespace {

using namespace cayspec;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int workers() { return std::max(1u, std::thread::hardware_concurrency()); }

NormalElement random_normal(int n, std::mt19937& rng, int max_support) {
  auto types = enumerate_cycle_types(n);
  std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
  std::uniform_int_distribution<int> num(1, 30), den(1, 30), support(1, max_support);
  NormalElement sigma(n);
  for (int i = support(rng); i > 0; --i) sigma.add(types[pick(rng)], Rational(num(rng), den(rng)));
  return sigma;
}

Outcome counterexample_16() {
  CycleType mu = CycleType::parse("5^3 1^1");
  auto rule = ruling_set(16, mu);
  auto eight = eight_max(16, mu);
  const std::vector<Partition> expected = {Partition({11, 5}), transpose(Partition({11, 5}))};
  std::ostringstream d;
  d << "ruling value " << to_string(rule.value) << " vs eight_max " << to_string(eight.value) << ", "
    << rule.irreps.size() << " ruling irreps";
  return {rule.irreps == expected && rule.value > eight.value, d.str()};
}

Outcome desk_scan() {
  std::size_t violations = 0, classes = 0;
  for (int n = 17; n <= 24; ++n) {
    auto r = check_eight_theorem(n, {.workers = workers()});
    violations += r.violation_count();
    classes += r.classes.size();
  }
  return {violations == 0, std::to_string(classes) + " classes, " + std::to_string(violations) + " violations"};
}

Outcome table1_cross_check() {
  std::size_t cases = 0, bad = 0;
  for (const auto& f : all_families(true)) {
    for (int n = std::max(1, 2 * f.k()); n <= 14; ++n) {
      Partition lambda = family_member(f, n);
      for (const auto& mu : enumerate_cycle_types(n)) {
        ++cases;
        bad += table1_character(f, mu) != mn_character(lambda, mu);
      }
    }
  }
  return {bad == 0 && cases > 0, std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches"};
}

Outcome dimension_counts() {
  auto a = dims_audit(13, 3, Rational(41, 20));
  auto b = dims_audit(14, 3, Rational(41, 20));
  std::ostringstream d;
  d << "n=13: " << a.checked << " irreps, " << a.failures.size() << " failures; n=14: " << b.checked
    << " irreps, " << b.failures.size() << " failures";
  return {a.checked == 93 && b.checked == 127 && a.failures.empty() && b.failures.empty(), d.str()};
}

Outcome deep_dimension_bound() {
  std::size_t checked = 0, failures = 0;
  double n48_seconds = 0;
  for (int n = 39; n <= 48; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = dims_audit(n, 14, Rational(121, 20));
    if (n == 48) n48_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    checked += r.checked;
    failures += r.failures.size();
  }
  std::ostringstream d;
  d << checked << " irreps over n=39..48, " << failures << " failures, n=48 in " << std::setprecision(3)
    << n48_seconds << " s";
  return {failures == 0 && checked > 0 && n48_seconds <= 120, d.str()};
}

Outcome gap_bound() {
  std::size_t pairs = 0, violations = 0, random_failures = 0;
  std::mt19937 rng(61);
  for (int n = 17; n <= 22; ++n) {
    auto r = check_gap_per_class(n, workers());
    pairs += r.pairs_checked;
    violations += r.violations.size();
    for (int t = 0; t < 100; ++t) random_failures += !check_gap_theorem(random_normal(n, rng, 8)).holds;
  }
  std::ostringstream d;
  d << pairs << " (class, irrep) pairs, " << violations << " violations; 600 random elements, "
    << random_failures << " failures";
  return {violations == 0 && random_failures == 0, d.str()};
}

Outcome eight_max_lower_bound() {
  std::size_t classes = 0, violations = 0;
  for (int n = 17; n <= 40; ++n) {
    auto r = check_lemma_211(n, workers());
    classes += r.checked;
    violations += r.violations.size();
  }
  return {violations == 0, std::to_string(classes) + " classes, " + std::to_string(violations) + " violations"};
}

Outcome construction_100() {
  NormalElement sigma = build_annihilator(100, 2, 4).element();
  auto ann = verify_annihilation(sigma, 2);
  bool listed_zero = true;
  for (const auto& p : {Partition({99, 1}), Partition({98, 2}), transpose(Partition({98, 1, 1}))}) {
    listed_zero = listed_zero && shallow_eigenvalue(sigma, p) == 0;
  }
  int positive = 0;
  for (const auto& p : {Partition({97, 3}), transpose(Partition({97, 2, 1})), Partition({97, 1, 1, 1})}) {
    positive += shallow_eigenvalue(sigma, p) > 0;
  }
  std::ostringstream d;
  d << ann.values.size() << " shallow irreps " << (ann.all_zero ? "all zero" : "NOT all zero") << ", "
    << positive << " of 3 depth-3 irreps positive";
  return {ann.all_zero && listed_zero && positive >= 1, d.str()};
}

Outcome class_sum_oracle() {
  std::mt19937 rng(21);
  double worst = 0;
  for (int n = 4; n <= 6; ++n) {
    auto types = enumerate_cycle_types(n);
    for (int t = 0; t < 20; ++t) {
      NormalElement sigma(n);
      std::uniform_int_distribution<int> num(0, 8);
      for (const auto& c : types) sigma.add(c, Rational(num(rng), 7));
      auto oracle = cayley_oracle(sigma);
      std::vector<double> expected;
      for (const auto& lambda : enumerate_partitions(n)) {
        const long d = static_cast<long>(dimension(lambda));
        expected.insert(expected.end(), d * d, to_double(eigenvalue(sigma, lambda)));
      }
      std::sort(expected.begin(), expected.end(), std::greater<>());
      for (std::size_t i = 0; i < expected.size(); ++i) worst = std::max(worst, std::abs(expected[i] - oracle.values[i]));
    }
  }
  std::ostringstream d;
  d << "60 elements, max deviation " << std::setprecision(3) << worst;
  return {worst <= 1e-8, d.str()};
}

Outcome transposition_weightings() {
  std::mt19937 rng(10);
  std::uniform_real_distribution<double> u(0, 1);
  double worst = 0;
  for (int n = 4; n <= 6; ++n) {
    for (int t = 0; t < 50; ++t) {
      std::vector<double> w(n * (n - 1) / 2);
      for (auto& x : w) x = u(rng);
      auto s = WeightedGenSet::transpositions(n, w);
      worst = std::max(worst, std::abs(cayley_oracle(s).lambda_nontrivial - attribute_blocks(s).standard.front()));
    }
  }
  std::ostringstream d;
  d << "150 weightings, max deviation " << std::setprecision(3) << worst;
  return {worst <= 1e-8, d.str()};
}

Outcome example_cycle_transposition() {
  const int n = 30;
  const double n3 = static_cast<double>(n) * n * n;
  auto a = attribute_blocks(WeightedGenSet::cycle_transposition(n), 1e-8);
  const double gap = 1 - a.top_nontrivial();
  const bool part_a = gap >= 1 / (18 * n3);
  auto w = rayleigh_witness(n);
  const bool part_b = w.ratio >= 0.75 && w.ratio <= 1.25;
  const double points = n * n * (1 - a.standard.front());
  const bool part_c = points >= 0.75 && points <= 1.25;
  auto winners = a.winners();
  const bool std_wins = std::find(winners.begin(), winners.end(), "(n-1,1)") != winners.end();
  const bool part_d = !winners.empty() && !std_wins;
  std::ostringstream d;
  d << std::setprecision(4) << "(a) " << (part_a ? "pass" : "FAIL") << " gap*n^3=" << gap * n3 << " >= 1/18; (b) "
    << (part_b ? "pass" : "FAIL") << " rayleigh/(6/n^3)=" << w.ratio << "; (c) " << (part_c ? "pass" : "FAIL")
    << " n^2*(1-lambda2(points))=" << points << "; (d) " << (part_d ? "pass" : "FAIL") << " winner "
    << (winners.empty() ? "none" : winners.front());
  return {part_a && part_b && part_c && part_d, d.str()};
}

Outcome ruling_rows() {
  auto first = check_table23(30, 1, workers());
  auto second = check_table23(30, 1, 1);
  bool same = first.mismatches.size() == second.mismatches.size();
  for (std::size_t i = 0; same && i < first.mismatches.size(); ++i) {
    same = first.mismatches[i].mu == second.mismatches[i].mu;
  }
  std::ostringstream d;
  d << first.checked << " classes with c1 <= 1, " << first.mismatches.size() << " mismatches"
    << (same ? ", reproducible" : ", NOT reproducible");
  return {same && first.mismatches.empty(), d.str()};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "n=16 counterexample", 60, counterexample_16},
      {2, "desk scan n=17..24", 1800, desk_scan},
      {3, "family polynomials vs Murnaghan-Nakayama", 1e9, table1_cross_check},
      {4, "dimension counts n=13,14", 10, dimension_counts},
      {5, "deep dimension bound n=39..48", 1e9, deep_dimension_bound},
      {6, "gap versus standard gap n=17..22", 1e9, gap_bound},
      {7, "eight_max lower bound n=17..40", 300, eight_max_lower_bound},
      {8, "annihilator at n=100", 1e9, construction_100},
      {9, "character spectrum vs Cayley oracle", 1e9, class_sum_oracle},
      {10, "transposition weightings n=4..6", 1e9, transposition_weightings},
      {11, "cycle-transposition set at n=30", 60, example_cycle_transposition},
      {12, "ruling rows at n=30", 1e9, ruling_rows},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (seconds > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over time budget";
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.name << "  ["
              << std::fixed << std::setprecision(2) << seconds << " s]  " << std::defaultfloat << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << " of " << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
