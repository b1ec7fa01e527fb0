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

// Numerical spectra of weighted permutation sets that need not be normal.
//
// Actions are on points, ordered pairs of distinct points and unordered
// pairs, with lexicographic indexing:
//   points     x                  -> x
//   ordered    (x, y), x != y     -> x (n-1) + (y < x ? y : y - 1)
//   unordered  {x, y}, x < y      -> rank of (x, y) in lex order
// The operator is (A f)(v) = sum_g w_g f(g v), so A(v, g v) += w_g.
//
// As S_n-modules
//   points    = triv + (n-1,1)
//   unordered = triv + (n-1,1) + (n-2,2)
//   ordered   = triv + 2 (n-1,1) + (n-2,2) + (n-2,1,1)
// which lets the blocks be separated by multiset subtraction.
//
// Floating point lives here only.

#ifndef CAYSPEC_SCHREIER_HPP_
#define CAYSPEC_SCHREIER_HPP_

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cayspec/exact.hpp"
#include "cayspec/normal_spectra.hpp"
#include "cayspec/parallel.hpp"
#include "cayspec/partitions.hpp"

namespace cayspec {

class Permutation {
 public:
  Permutation() = default;

  // images[i] = image of i, 0-based.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
      if (v < 0 || v >= size() || seen[v]) throw InputError("Permutation: images are not a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
  }

  // Cycle notation on 1..n, e.g. "(1 2)(3 4 5)"; "" or "()" is the identity.
  static Permutation parse(int n, std::string_view text) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::vector<char> used(n, 0);
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        continue;
      }
      if (text[pos] != '(') throw InputError("Permutation: expected '(' in '" + std::string(text) + "'");
      auto close = text.find(')', pos);
      if (close == std::string_view::npos) throw InputError("Permutation: unbalanced '('");
      std::istringstream in{std::string(text.substr(pos + 1, close - pos - 1))};
      std::vector<int> cycle;
      std::string token;
      while (in >> token) {
        int point = parse_int(token, "point");
        if (point < 1 || point > n) throw InputError("Permutation: point " + token + " out of range");
        if (used[point - 1]) throw InputError("Permutation: point " + token + " repeated");
        used[point - 1] = 1;
        cycle.push_back(point - 1);
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      pos = close + 1;
    }
    return Permutation(std::move(images));
  }

  // (1 2 ... n)
  static Permutation long_cycle(int n) {
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = (i + 1) % n;
    return Permutation(std::move(images));
  }

  static Permutation transposition(int n, int a, int b) {
    Permutation p = identity(n);
    std::swap(p.images_[a], p.images_[b]);
    return p;
  }

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  // (this * other)(i) = this(other(i))
  Permutation operator*(const Permutation& other) const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = images_[other.images_[i]];
    return Permutation(std::move(out));
  }

  Permutation inverse() const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[images_[i]] = static_cast<int>(i);
    return Permutation(std::move(out));
  }

  CycleType cycle_type() const {
    std::vector<char> seen(images_.size(), 0);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = 1;
        ++len;
      }
      lengths.push_back(len);
    }
    return CycleType::from_parts(lengths);
  }

  // Points moved, 0-based.
  std::vector<int> support() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
      if (images_[i] != i) out.push_back(i);
    }
    return out;
  }

  int sign() const { return cycle_type().sign(); }

  std::string to_string() const {
    std::string out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == static_cast<int>(i)) continue;
      out += '(';
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = 1;
        if (j != i) out += ' ';
        out += std::to_string(j + 1);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

struct WeightedPermutation {
  Permutation g;
  double weight;
};

class WeightedGenSet {
 public:
  explicit WeightedGenSet(int n) : n_(n) {
    if (n < 1) throw DomainError("WeightedGenSet: n must be positive");
  }

  void add(const Permutation& g, double weight) {
    if (g.size() != n_) throw InputError("WeightedGenSet: permutation is not of n");
    if (!(weight >= 0)) throw InputError("WeightedGenSet: weights must be non-negative");
    items_.push_back({g, weight});
  }

  // Adds g and g^-1 with the same weight (once if g is an involution).
  void add_symmetric(const Permutation& g, double weight) {
    add(g, weight);
    Permutation inv = g.inverse();
    if (!(inv == g)) add(inv, weight);
  }

  int n() const { return n_; }
  const std::vector<WeightedPermutation>& items() const { return items_; }

  double total_weight() const {
    double t = 0;
    for (const auto& it : items_) t += it.weight;
    return t;
  }

  // Aggregated weight of g equals that of g^-1 within tol.
  bool is_symmetric(double tol = 1e-12) const {
    std::map<Permutation, double> weight;
    for (const auto& it : items_) weight[it.g] += it.weight;
    for (const auto& [g, w] : weight) {
      auto inv = weight.find(g.inverse());
      double winv = inv == weight.end() ? 0.0 : inv->second;
      if (std::abs(w - winv) > tol) return false;
    }
    return true;
  }

  // 1/4 [id + (1 2) + c + c^-1] with c = (1 2 ... n).
  static WeightedGenSet cycle_transposition(int n) {
    if (n < 3) throw DomainError("cycle_transposition: needs n >= 3");
    WeightedGenSet s(n);
    s.add(Permutation::identity(n), 0.25);
    s.add(Permutation::transposition(n, 0, 1), 0.25);
    s.add(Permutation::long_cycle(n), 0.25);
    s.add(Permutation::long_cycle(n).inverse(), 0.25);
    return s;
  }

  // weights[t] on the t-th transposition (a, b), a < b, in lex order.
  static WeightedGenSet transpositions(int n, const std::vector<double>& weights) {
    WeightedGenSet s(n);
    std::size_t t = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (t >= weights.size()) throw InputError("transpositions: too few weights");
        s.add(Permutation::transposition(n, a, b), weights[t++]);
      }
    }
    if (t != weights.size()) throw InputError("transpositions: too many weights");
    return s;
  }

  // Every permutation of each class with weight alpha_C.
  static WeightedGenSet from_normal(const NormalElement& sigma) {
    const int n = sigma.n();
    if (n > 8) throw DomainError("from_normal: expansion limited to n <= 8");
    WeightedGenSet s(n);
    Permutation p = Permutation::identity(n);
    std::vector<int> images = p.images();
    do {
      Permutation g(images);
      Rational alpha = sigma.coefficient(g.cycle_type());
      if (alpha != 0) s.add(g, to_double(alpha));
    } while (std::next_permutation(images.begin(), images.end()));
    return s;
  }

 private:
  int n_;
  std::vector<WeightedPermutation> items_;
};

// --- Indexing of tuples -------------------------------------------------

inline std::size_t ordered_pair_index(int n, int x, int y) {
  return static_cast<std::size_t>(x) * (n - 1) + (y < x ? y : y - 1);
}

inline std::size_t unordered_pair_index(int n, int x, int y) {
  if (x > y) std::swap(x, y);
  // pairs before row x: sum_{i<x} (n-1-i)
  return static_cast<std::size_t>(x) * (2 * n - x - 1) / 2 + (y - x - 1);
}

struct ActionDomain {
  int n;
  int ell;
  bool ordered;

  std::size_t size() const {
    const std::size_t m = n;
    if (ell == 1) return m;
    return ordered ? m * (m - 1) : m * (m - 1) / 2;
  }
};

// Weighted adjacency of the action on 1-tuples or 2-tuples of distinct
// points. Rows are filled in parallel.
inline Eigen::MatrixXd action_matrix(const WeightedGenSet& s, int ell, bool ordered, int workers = 1) {
  if (ell != 1 && ell != 2) throw InputError("action_matrix: ell must be 1 or 2");
  if (!s.is_symmetric()) throw InputError("action_matrix: weighted set is not symmetric");
  const int n = s.n();
  if (ell == 2 && n < 2) throw DomainError("action_matrix: pairs need n >= 2");
  ActionDomain dom{n, ell, ordered};
  const std::size_t size = dom.size();
  if (size > 20000) throw DomainError("action_matrix: domain too large for a dense matrix");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(size, size);
  if (ell == 1) {
    parallel_for(n, workers, [&](std::size_t x) {
      for (const auto& it : s.items()) a(x, it.g(static_cast<int>(x))) += it.weight;
    });
    return a;
  }
  parallel_for(n, workers, [&](std::size_t xi) {
    const int x = static_cast<int>(xi);
    for (int y = ordered ? 0 : x + 1; y < n; ++y) {
      if (y == x) continue;
      const std::size_t row = ordered ? ordered_pair_index(n, x, y) : unordered_pair_index(n, x, y);
      for (const auto& it : s.items()) {
        const int gx = it.g(x), gy = it.g(y);
        a(row, ordered ? ordered_pair_index(n, gx, gy) : unordered_pair_index(n, gx, gy)) += it.weight;
      }
    }
  });
  return a;
}

// Full spectrum, descending. Rejects matrices asymmetric beyond tol.
inline std::vector<double> spectrum(const Eigen::MatrixXd& m, double tol = 1e-9) {
  if (m.rows() != m.cols()) throw InputError("spectrum: matrix is not square");
  if (m.size() > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > tol) {
    throw InputError("spectrum: matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  // Highly degenerate spectra can exhaust the QL iteration budget; a
  // permutation similarity leaves the spectrum alone and changes the path.
  std::mt19937 rng(0x5eed);
  for (int attempt = 0; solver.info() != Eigen::Success && attempt < 8; ++attempt) {
    Eigen::PermutationMatrix<Eigen::Dynamic> p(m.rows());
    p.setIdentity();
    std::shuffle(p.indices().data(), p.indices().data() + m.rows(), rng);
    solver.compute(p.transpose() * m * p, Eigen::EigenvaluesOnly);
  }
  if (solver.info() != Eigen::Success) throw DomainError("spectrum: eigensolver did not converge");
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

class AttributionError : public DomainError {
 public:
  using DomainError::DomainError;
};

namespace detail {

// a minus b as multisets, pairing each b with its nearest unused a.
// Returns the remainder (descending) and updates the worst pairing distance.
inline std::vector<double> multiset_subtract(const std::vector<double>& a, const std::vector<double>& b,
                                             double tol, double& residual) {
  std::vector<double> rest = a;
  std::sort(rest.begin(), rest.end());
  for (double v : b) {
    if (rest.empty()) throw AttributionError("attribute_blocks: nothing left to subtract");
    auto it = std::lower_bound(rest.begin(), rest.end(), v);
    auto best = it;
    if (it == rest.end() || (it != rest.begin() && std::abs(*(it - 1) - v) <= std::abs(*it - v))) best = it - 1;
    const double dist = std::abs(*best - v);
    if (dist > tol) {
      std::ostringstream msg;
      msg << std::setprecision(17) << "attribute_blocks: no eigenvalue within " << tol << " of " << v
          << " (nearest off by " << dist << ")";
      throw AttributionError(msg.str());
    }
    residual = std::max(residual, dist);
    rest.erase(best);
  }
  std::sort(rest.begin(), rest.end(), std::greater<>());
  return rest;
}

}  // namespace detail

struct SpectrumAttribution {
  int n = 0;
  double trivial = 0;
  std::vector<double> standard;  // (n-1,1), size n-1
  std::vector<double> two_row;   // (n-2,2), size n(n-3)/2
  std::vector<double> hook;      // (n-2,1,1), size (n-1)(n-2)/2
  double residual = 0;           // worst pairing distance used
  std::vector<double> ordered_spectrum;

  // Blocks holding the largest eigenvalue below the trivial one, within tol.
  std::vector<std::string> winners(double tol = 1e-8) const {
    double top = -INFINITY;
    for (const auto* block : {&standard, &two_row, &hook}) {
      if (!block->empty()) top = std::max(top, block->front());
    }
    std::vector<std::string> out;
    if (!standard.empty() && standard.front() >= top - tol) out.push_back("(n-1,1)");
    if (!two_row.empty() && two_row.front() >= top - tol) out.push_back("(n-2,2)");
    if (!hook.empty() && hook.front() >= top - tol) out.push_back("(n-2,1,1)");
    return out;
  }

  double top_nontrivial() const {
    double top = -INFINITY;
    for (const auto* block : {&standard, &two_row, &hook}) {
      if (!block->empty()) top = std::max(top, block->front());
    }
    return top;
  }
};

inline SpectrumAttribution attribute_blocks(const WeightedGenSet& s, double tol = 1e-8, int workers = 1) {
  const int n = s.n();
  if (n < 4) throw DomainError("attribute_blocks: needs n >= 4");
  SpectrumAttribution out;
  out.n = n;
  out.trivial = s.total_weight();
  auto points = spectrum(action_matrix(s, 1, false, workers));
  auto unordered = spectrum(action_matrix(s, 2, false, workers));
  out.ordered_spectrum = spectrum(action_matrix(s, 2, true, workers));
  out.standard = detail::multiset_subtract(points, {out.trivial}, tol, out.residual);
  out.two_row = detail::multiset_subtract(unordered, points, tol, out.residual);
  auto no_unordered = detail::multiset_subtract(out.ordered_spectrum, unordered, tol, out.residual);
  out.hook = detail::multiset_subtract(no_unordered, out.standard, tol, out.residual);
  return out;
}

struct RayleighWitness {
  int n = 0;
  double quotient = 0;  // <(I - A) f, f> / <f, f>
  double bound = 0;     // 6 / n^3
  double ratio = 0;     // quotient / bound
};

// f(x, y) = ((x - y) mod n) - n/2 on ordered pairs, for the
// cycle-transposition set.
inline RayleighWitness rayleigh_witness(int n, int workers = 1) {
  if (n < 5) throw DomainError("rayleigh_witness: needs n >= 5");
  Eigen::MatrixXd a = action_matrix(WeightedGenSet::cycle_transposition(n), 2, true, workers);
  Eigen::VectorXd f(a.rows());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) f(ordered_pair_index(n, x, y)) = ((x - y) % n + n) % n - n / 2.0;
    }
  }
  RayleighWitness w;
  w.n = n;
  w.quotient = (f.dot(f) - f.dot(a * f)) / f.dot(f);
  w.bound = 6.0 / (static_cast<double>(n) * n * n);
  w.ratio = w.quotient / w.bound;
  return w;
}

struct CayleySpectrum {
  int n = 0;
  std::vector<double> values;  // descending, size n!
  double trivial = 0;          // sum of weights
  double sign = 0;             // sum of signed weights
  double lambda_nontrivial = 0;
};

// Dense |S_n| x |S_n| Cayley adjacency, A(x, g x) += w_g.
inline CayleySpectrum cayley_oracle(const WeightedGenSet& s, double tol = 1e-8) {
  const int n = s.n();
  if (n > 6) throw DomainError("cayley_oracle: limited to n <= 6");
  if (!s.is_symmetric()) throw InputError("cayley_oracle: weighted set is not symmetric");
  std::vector<Permutation> elements;
  std::map<std::vector<int>, std::size_t> index;
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  do {
    index[images] = elements.size();
    elements.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(elements.size(), elements.size());
  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (const auto& it : s.items()) a(x, index.at((it.g * elements[x]).images())) += it.weight;
  }
  CayleySpectrum out;
  out.n = n;
  out.values = spectrum(a);
  out.trivial = s.total_weight();
  for (const auto& it : s.items()) out.sign += it.g.sign() * it.weight;
  double residual = 0;
  std::vector<double> rest =
      n >= 2 ? detail::multiset_subtract(out.values, {out.trivial, out.sign}, tol, residual) : std::vector<double>{};
  out.lambda_nontrivial = rest.empty() ? 0.0 : rest.front();
  return out;
}

inline CayleySpectrum cayley_oracle(const NormalElement& sigma, double tol = 1e-8) {
  return cayley_oracle(WeightedGenSet::from_normal(sigma), tol);
}

// 3 log|S_n| / sqrt(gap).
inline double diameter_estimate(int n, double gap) {
  if (!(gap > 0)) throw DomainError("diameter_estimate: gap must be positive");
  return 3.0 * std::lgamma(n + 1.0) / std::sqrt(gap);
}

// MatrixMarket coordinate format, every nonzero entry, 1-based.
inline void write_matrix_market(const Eigen::MatrixXd& m, std::ostream& out) {
  std::size_t nonzeros = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) nonzeros += m(i, j) != 0;
  }
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << m.rows() << ' ' << m.cols() << ' ' << nonzeros << '\n';
  out << std::setprecision(17);
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (m(i, j) != 0) out << i + 1 << ' ' << j + 1 << ' ' << m(i, j) << '\n';
    }
  }
}

inline void write_spectrum_csv(const std::vector<double>& values, std::ostream& out) {
  out << "index,eigenvalue\n" << std::setprecision(17);
  for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << values[i] << '\n';
}

}  // namespace cayspec

#endif  // CAYSPEC_SCHREIER_HPP_
