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

#include "cayspec/schreier.hpp"

#include <random>
#include <set>
#include <sstream>

#include "gtest/gtest.h"

namespace cayspec {
namespace {

TEST(PermutationTest, ParsePrintCompose) {
  Permutation p = Permutation::parse(5, "(1 2)(3 4 5)");
  EXPECT_EQ(p.to_string(), "(1 2)(3 4 5)");
  EXPECT_EQ(p.cycle_type(), CycleType::parse("2^1 3^1"));
  EXPECT_EQ(p.sign(), -1);
  EXPECT_EQ((p * p.inverse()), Permutation::identity(5));
  EXPECT_EQ(Permutation::parse(4, "()").to_string(), "()");
  EXPECT_EQ(Permutation::parse(4, "(2 4)").support(), (std::vector<int>{1, 3}));
  // (1 2) * (2 3): apply (2 3) first.
  Permutation q = Permutation::parse(3, "(1 2)") * Permutation::parse(3, "(2 3)");
  EXPECT_EQ(q.to_string(), "(1 2 3)");
  EXPECT_EQ(Permutation::long_cycle(4).to_string(), "(1 2 3 4)");
  EXPECT_THROW(Permutation::parse(3, "(1 4)"), InputError);
  EXPECT_THROW(Permutation::parse(3, "(1 2)(2 3)"), InputError);
  EXPECT_THROW(Permutation(std::vector<int>{0, 0}), InputError);
}

TEST(ActionMatrixTest, PairIndexingIsABijection) {
  for (int n = 2; n <= 9; ++n) {
    std::set<std::size_t> ordered, unordered;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        ordered.insert(ordered_pair_index(n, x, y));
        if (x < y) unordered.insert(unordered_pair_index(n, x, y));
      }
    }
    EXPECT_EQ(ordered.size(), static_cast<std::size_t>(n * (n - 1)));
    EXPECT_EQ(*ordered.rbegin(), static_cast<std::size_t>(n * (n - 1) - 1));
    EXPECT_EQ(unordered.size(), static_cast<std::size_t>(n * (n - 1) / 2));
    EXPECT_EQ(*unordered.rbegin(), static_cast<std::size_t>(n * (n - 1) / 2 - 1));
  }
}

TEST(ActionMatrixTest, RowSumsEqualTotalWeight) {
  auto s = WeightedGenSet::cycle_transposition(9);
  auto points = action_matrix(s, 1, false);
  EXPECT_EQ(points.rows(), 9);
  for (Eigen::Index i = 0; i < points.rows(); ++i) EXPECT_NEAR(points.row(i).sum(), 1.0, 1e-15);

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0, 2);
  WeightedGenSet random(7);
  for (int t = 0; t < 5; ++t) {
    std::vector<int> images(7);
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    random.add_symmetric(Permutation(images), u(rng));
  }
  for (bool ordered : {false, true}) {
    auto m = action_matrix(random, 2, ordered, 2);
    EXPECT_NEAR((m - m.transpose()).cwiseAbs().maxCoeff(), 0.0, 1e-15);
    for (Eigen::Index i = 0; i < m.rows(); ++i) EXPECT_NEAR(m.row(i).sum(), random.total_weight(), 1e-12);
  }

  WeightedGenSet id(6);
  id.add(Permutation::identity(6), 0.5);
  EXPECT_TRUE(action_matrix(id, 2, true).isApprox(0.5 * Eigen::MatrixXd::Identity(30, 30)));
}

TEST(ActionMatrixTest, RejectsAsymmetricSets) {
  WeightedGenSet s(5);
  s.add(Permutation::long_cycle(5), 1.0);
  EXPECT_FALSE(s.is_symmetric());
  EXPECT_THROW(action_matrix(s, 1, false), InputError);
  EXPECT_THROW(cayley_oracle(s), InputError);
  Eigen::MatrixXd m(2, 2);
  m << 0, 1, 0, 0;
  EXPECT_THROW(spectrum(m), InputError);
  EXPECT_THROW(action_matrix(WeightedGenSet::cycle_transposition(5), 3, false), InputError);
}

TEST(SpectrumTest, StochasticTopIsOne) {
  auto values = spectrum(action_matrix(WeightedGenSet::cycle_transposition(12), 1, false));
  ASSERT_EQ(values.size(), 12u);
  EXPECT_NEAR(values.front(), 1.0, 1e-12);
  EXPECT_TRUE(std::is_sorted(values.begin(), values.end(), std::greater<>()));
}

// The Cayley spectrum of a normal element is the union of the per-irrep
// scalars, each with multiplicity dim^2.
std::vector<double> character_multiset(const NormalElement& sigma) {
  std::vector<double> out;
  for (const auto& lambda : enumerate_partitions(sigma.n())) {
    const double v = to_double(eigenvalue(sigma, lambda));
    const long d = static_cast<long>(dimension(lambda));
    out.insert(out.end(), d * d, v);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

TEST(CayleyOracleTest, NormalElementsMatchCharacters) {
  std::mt19937 rng(42);
  for (int n = 3; n <= 5; ++n) {
    auto types = enumerate_cycle_types(n);
    for (int trial = 0; trial < 4; ++trial) {
      NormalElement sigma(n);
      std::uniform_int_distribution<int> num(0, 5);
      for (const auto& t : types) sigma.add(t, Rational(num(rng), 3));
      auto oracle = cayley_oracle(sigma);
      auto expected = character_multiset(sigma);
      ASSERT_EQ(oracle.values.size(), expected.size());
      for (std::size_t i = 0; i < expected.size(); ++i) ASSERT_NEAR(oracle.values[i], expected[i], 1e-8);
    }
  }
}

// These weights make the plain QL iteration run out of steps.
TEST(CayleyOracleTest, DegenerateSpectrumConverges) {
  NormalElement sigma(6);
  const std::vector<std::pair<const char*, int>> terms = {
      {"1^6", 8}, {"2^2 1^2", 7}, {"3^1 1^3", 4}, {"3^1 2^1 1^1", 3}, {"3^2", 5},
      {"4^1 1^2", 7}, {"4^1 2^1", 1}, {"5^1 1^1", 1}, {"6^1", 8}};
  for (const auto& [cls, num] : terms) sigma.add(CycleType::parse(cls), Rational(num, 7));
  auto oracle = cayley_oracle(sigma);
  auto expected = character_multiset(sigma);
  ASSERT_EQ(oracle.values.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) ASSERT_NEAR(oracle.values[i], expected[i], 1e-8);
}

TEST(CayleyOracleTest, TranspositionsInFour) {
  NormalElement sigma = NormalElement::class_indicator(CycleType::parse("2^1 1^2"));
  auto oracle = cayley_oracle(sigma);
  EXPECT_NEAR(oracle.lambda_nontrivial, 2.0, 1e-9);
  EXPECT_NEAR(oracle.trivial, 6.0, 1e-12);
  EXPECT_NEAR(oracle.sign, -6.0, 1e-12);
  auto attribution = attribute_blocks(WeightedGenSet::from_normal(sigma));
  EXPECT_NEAR(attribution.standard.front(), 2.0, 1e-9);
}

TEST(CayleyOracleTest, EmptySetHasZeroSpectrum) {
  auto oracle = cayley_oracle(WeightedGenSet(4));
  for (double v : oracle.values) EXPECT_EQ(v, 0.0);
  EXPECT_THROW(cayley_oracle(WeightedGenSet(7)), DomainError);
}

// Small n: for non-negative transposition weights the largest
// nontrivial Cayley eigenvalue sits in the standard block.
TEST(CayleyOracleTest, TranspositionWeightingsRuledByStandard) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(0, 1);
  for (int n = 4; n <= 5; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<double> w(n * (n - 1) / 2);
      for (auto& x : w) x = u(rng);
      auto s = WeightedGenSet::transpositions(n, w);
      auto oracle = cayley_oracle(s);
      auto attribution = attribute_blocks(s);
      EXPECT_NEAR(oracle.lambda_nontrivial, attribution.standard.front(), 1e-8);
    }
  }
}

TEST(AttributionTest, NormalBlocksAreConstantAtExactScalars) {
  std::mt19937 rng(17);
  for (int n = 5; n <= 6; ++n) {
    NormalElement sigma(n);
    std::uniform_int_distribution<int> num(0, 4);
    for (const auto& t : enumerate_cycle_types(n)) sigma.add(t, Rational(num(rng), 2));
    auto a = attribute_blocks(WeightedGenSet::from_normal(sigma));
    EXPECT_EQ(a.standard.size(), static_cast<std::size_t>(n - 1));
    EXPECT_EQ(a.two_row.size(), static_cast<std::size_t>(n * (n - 3) / 2));
    EXPECT_EQ(a.hook.size(), static_cast<std::size_t>((n - 1) * (n - 2) / 2));
    const double e_std = to_double(eigenvalue(sigma, Partition({n - 1, 1})));
    const double e_two = to_double(eigenvalue(sigma, Partition({n - 2, 2})));
    const double e_hook = to_double(eigenvalue(sigma, Partition({n - 2, 1, 1})));
    for (double v : a.standard) EXPECT_NEAR(v, e_std, 1e-8);
    for (double v : a.two_row) EXPECT_NEAR(v, e_two, 1e-8);
    for (double v : a.hook) EXPECT_NEAR(v, e_hook, 1e-8);
    EXPECT_NEAR(a.trivial, to_double(sigma.total_weight()), 1e-9);
  }
}

TEST(AttributionTest, CycleTranspositionWinnerIsNotStandard) {
  for (int n = 10; n <= 20; n += 5) {
    auto a = attribute_blocks(WeightedGenSet::cycle_transposition(n));
    auto winners = a.winners();
    ASSERT_FALSE(winners.empty());
    for (const auto& w : winners) EXPECT_NE(w, "(n-1,1)") << n;
    const double n3 = static_cast<double>(n) * n * n;
    EXPECT_GE(1 - a.top_nontrivial(), 1 / (18 * n3));
    EXPECT_GE(1 - a.standard.front(), 1 / (32.0 * n * n));
    EXPECT_EQ(a.standard.size() + a.two_row.size() + a.hook.size() + 1,
              static_cast<std::size_t>(n * (n - 1) - (n - 1)));
  }
}

TEST(AttributionTest, CollisionBeyondToleranceIsReported) {
  double residual = 0;
  EXPECT_THROW(detail::multiset_subtract({1.0, 2.0}, {2.5}, 1e-8, residual), AttributionError);
  auto rest = detail::multiset_subtract({1.0, 2.0, 3.0}, {2.0 + 1e-10}, 1e-8, residual);
  EXPECT_EQ(rest, (std::vector<double>{3.0, 1.0}));
  EXPECT_NEAR(residual, 1e-10, 1e-15);
}

// Rayleigh principle: f is orthogonal to constants, so its quotient bounds
// the ordered-pairs gap from above. The measured quotient is about
// n/2 times 6/n^3 because of the wrap-around pairs; printed for the record.
TEST(RayleighWitnessTest, BoundsGapFromAbove) {
  for (int n : {12, 24, 30}) {
    auto w = rayleigh_witness(n);
    auto values = spectrum(action_matrix(WeightedGenSet::cycle_transposition(n), 2, true));
    EXPECT_GE(w.quotient, 1 - values[1] - 1e-12);
    EXPECT_DOUBLE_EQ(w.bound, 6.0 / (n * n * n));
    std::cout << "n=" << n << " rayleigh quotient / (6/n^3) = " << w.ratio << "\n";
  }
  EXPECT_THROW(rayleigh_witness(4), DomainError);
}

TEST(DiagnosticsTest, DiameterAndExports) {
  EXPECT_NEAR(diameter_estimate(4, 1.0), 3 * std::log(24.0), 1e-12);
  EXPECT_THROW(diameter_estimate(4, 0.0), DomainError);
  Eigen::MatrixXd m(2, 2);
  m << 0.5, 0.25, 0.25, 0;
  std::ostringstream mm;
  write_matrix_market(m, mm);
  EXPECT_EQ(mm.str(), "%%MatrixMarket matrix coordinate real general\n2 2 3\n1 1 0.5\n2 1 0.25\n1 2 0.25\n");
  std::ostringstream csv;
  write_spectrum_csv({1.0 / 3, -2}, csv);
  EXPECT_EQ(csv.str(), "index,eigenvalue\n0,0.33333333333333331\n1,-2\n");
}

}  // namespace
}  // namespace cayspec
