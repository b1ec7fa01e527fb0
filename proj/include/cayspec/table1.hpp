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

// Closed-form character polynomials for the twelve families of irreps with at
// most four blocks outside the first row:
//
//   chi_{(n-k, tail)}(sigma)   = p(c_1, ..., c_4)            (n >= 2k)
//   chi_{(n-k, tail)^t}(sigma) = sgn(sigma) p(c_1, ..., c_4)
//
// Polynomials are stored as monomial lists with rational coefficients, and
// the dimension column as a univariate polynomial in n. Nothing here is
// derived at run time; the Murnaghan-Nakayama engine is the independent check.

#ifndef CAYSPEC_TABLE1_HPP_
#define CAYSPEC_TABLE1_HPP_

#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cayspec/exact.hpp"
#include "cayspec/partitions.hpp"

namespace cayspec {

struct Monomial {
  long num;
  long den;
  std::array<int, 4> exponents;  // powers of c_1 .. c_4

  // sum_i i * alpha_i
  int weighted_degree() const {
    return exponents[0] + 2 * exponents[1] + 3 * exponents[2] + 4 * exponents[3];
  }
};

struct PowerTerm {
  long num;
  long den;
  int exponent;  // power of n
};

struct Table1Row {
  std::vector<int> tail;  // diagram outside the first row
  std::vector<Monomial> character;
  std::vector<PowerTerm> dimension;

  int k() const { return std::accumulate(tail.begin(), tail.end(), 0); }
};

inline const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {{}, {{1, 1, {0, 0, 0, 0}}}, {{1, 1, 0}}},
      {{1}, {{1, 1, {1, 0, 0, 0}}, {-1, 1, {0, 0, 0, 0}}}, {{1, 1, 1}, {-1, 1, 0}}},
      {{2},
       {{1, 2, {2, 0, 0, 0}}, {-3, 2, {1, 0, 0, 0}}, {1, 1, {0, 1, 0, 0}}},
       {{1, 2, 2}, {-3, 2, 1}}},
      {{1, 1},
       {{1, 2, {2, 0, 0, 0}}, {-3, 2, {1, 0, 0, 0}}, {-1, 1, {0, 1, 0, 0}}, {1, 1, {0, 0, 0, 0}}},
       {{1, 2, 2}, {-3, 2, 1}, {1, 1, 0}}},
      {{3},
       {{1, 6, {3, 0, 0, 0}},
        {-1, 1, {2, 0, 0, 0}},
        {1, 1, {1, 1, 0, 0}},
        {5, 6, {1, 0, 0, 0}},
        {-1, 1, {0, 1, 0, 0}},
        {1, 1, {0, 0, 1, 0}}},
       {{1, 6, 3}, {-1, 1, 2}, {5, 6, 1}}},
      {{2, 1},
       {{1, 3, {3, 0, 0, 0}}, {-2, 1, {2, 0, 0, 0}}, {8, 3, {1, 0, 0, 0}}, {-1, 1, {0, 0, 1, 0}}},
       {{1, 3, 3}, {-2, 1, 2}, {8, 3, 1}}},
      {{1, 1, 1},
       {{1, 6, {3, 0, 0, 0}},
        {-1, 1, {2, 0, 0, 0}},
        {-1, 1, {1, 1, 0, 0}},
        {11, 6, {1, 0, 0, 0}},
        {1, 1, {0, 1, 0, 0}},
        {1, 1, {0, 0, 1, 0}},
        {-1, 1, {0, 0, 0, 0}}},
       {{1, 6, 3}, {-1, 1, 2}, {11, 6, 1}, {-1, 1, 0}}},
      {{4},
       {{1, 24, {4, 0, 0, 0}},
        {-5, 12, {3, 0, 0, 0}},
        {1, 2, {2, 1, 0, 0}},
        {23, 24, {2, 0, 0, 0}},
        {-3, 2, {1, 1, 0, 0}},
        {1, 1, {1, 0, 1, 0}},
        {-7, 12, {1, 0, 0, 0}},
        {1, 2, {0, 2, 0, 0}},
        {-1, 2, {0, 1, 0, 0}},
        {-1, 1, {0, 0, 1, 0}},
        {1, 1, {0, 0, 0, 1}}},
       {{1, 24, 4}, {-5, 12, 3}, {23, 24, 2}, {-7, 12, 1}}},
      {{3, 1},
       {{1, 8, {4, 0, 0, 0}},
        {-5, 4, {3, 0, 0, 0}},
        {1, 2, {2, 1, 0, 0}},
        {27, 8, {2, 0, 0, 0}},
        {-3, 2, {1, 1, 0, 0}},
        {-9, 4, {1, 0, 0, 0}},
        {-1, 2, {0, 2, 0, 0}},
        {3, 2, {0, 1, 0, 0}},
        {-1, 1, {0, 0, 0, 1}}},
       {{1, 8, 4}, {-5, 4, 3}, {27, 8, 2}, {-9, 4, 1}}},
      {{2, 2},
       {{1, 12, {4, 0, 0, 0}},
        {-5, 6, {3, 0, 0, 0}},
        {29, 12, {2, 0, 0, 0}},
        {-1, 1, {1, 0, 1, 0}},
        {-5, 3, {1, 0, 0, 0}},
        {1, 1, {0, 2, 0, 0}},
        {-2, 1, {0, 1, 0, 0}},
        {1, 1, {0, 0, 1, 0}}},
       {{1, 12, 4}, {-5, 6, 3}, {29, 12, 2}, {-5, 3, 1}}},
      {{2, 1, 1},
       {{1, 8, {4, 0, 0, 0}},
        {-5, 4, {3, 0, 0, 0}},
        {-1, 2, {2, 1, 0, 0}},
        {31, 8, {2, 0, 0, 0}},
        {3, 2, {1, 1, 0, 0}},
        {-15, 4, {1, 0, 0, 0}},
        {-1, 2, {0, 2, 0, 0}},
        {1, 2, {0, 1, 0, 0}},
        {1, 1, {0, 0, 0, 1}}},
       {{1, 8, 4}, {-5, 4, 3}, {31, 8, 2}, {-15, 4, 1}}},
      {{1, 1, 1, 1},
       {{1, 24, {4, 0, 0, 0}},
        {-5, 12, {3, 0, 0, 0}},
        {-1, 2, {2, 1, 0, 0}},
        {35, 24, {2, 0, 0, 0}},
        {3, 2, {1, 1, 0, 0}},
        {1, 1, {1, 0, 1, 0}},
        {-25, 12, {1, 0, 0, 0}},
        {1, 2, {0, 2, 0, 0}},
        {-3, 2, {0, 1, 0, 0}},
        {-1, 1, {0, 0, 1, 0}},
        {-1, 1, {0, 0, 0, 1}},
        {1, 1, {0, 0, 0, 0}}},
       {{1, 24, 4}, {-5, 12, 3}, {35, 24, 2}, {-25, 12, 1}, {1, 1, 0}}},
  };
  return rows;
}

// A family polynomial row plus a transpose flag, e.g. "[2,1]" or "[2,1]^t".
struct FamilyId {
  int row = 0;
  bool transposed = false;

  const Table1Row& data() const { return table1_rows().at(row); }
  int k() const { return data().k(); }

  std::string tag() const {
    std::string out = "[";
    const auto& tail = data().tail;
    for (std::size_t i = 0; i < tail.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(tail[i]);
    }
    out += ']';
    if (transposed) out += "^t";
    return out;
  }

  bool operator==(const FamilyId&) const = default;
};

inline std::vector<FamilyId> all_families(bool with_transposes) {
  std::vector<FamilyId> out;
  for (int r = 0; r < static_cast<int>(table1_rows().size()); ++r) {
    out.push_back({r, false});
    if (with_transposes) out.push_back({r, true});
  }
  return out;
}

inline FamilyId family_by_tail(const std::vector<int>& tail, bool transposed = false) {
  const auto& rows = table1_rows();
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    if (rows[r].tail == tail) return {r, transposed};
  }
  throw InputError("no family row with that shape outside the first row");
}

// The family member at n. Requires n >= 2k.
inline Partition family_member(const FamilyId& f, int n) {
  if (n < 2 * f.k()) {
    throw DomainError("family " + f.tag() + " needs n >= " + std::to_string(2 * f.k()));
  }
  Partition p = row_family_member(n, f.data().tail);
  return f.transposed ? transpose(p) : p;
}

// Family of p if it has at most four blocks outside its first row (or, for a
// transposed family, its first column) and p.size() >= 2k.
inline std::optional<FamilyId> family_of(const Partition& p) {
  const int n = p.size();
  auto lookup = [&](const Partition& q, bool transposed) -> std::optional<FamilyId> {
    if (blocks_outside_first_row(q) > 4) return std::nullopt;
    std::vector<int> tail(q.parts().begin() + (q.empty() ? 0 : 1), q.parts().end());
    for (int r = 0; r < static_cast<int>(table1_rows().size()); ++r) {
      if (table1_rows()[r].tail == tail && n >= 2 * table1_rows()[r].k()) return FamilyId{r, transposed};
    }
    return std::nullopt;
  };
  if (auto f = lookup(p, false)) return f;
  return lookup(transpose(p), true);
}

// c_1..c_4 and the sign of a permutation; all a family polynomial looks at.
struct ShortCycleCounts {
  std::array<long, 4> c{};
  int sign = 1;

  static ShortCycleCounts of(const CycleType& t) {
    return {{t.count(1), t.count(2), t.count(3), t.count(4)}, t.sign()};
  }
};

inline Rational evaluate(const std::vector<Monomial>& poly, const std::array<long, 4>& c) {
  Rational total = 0;
  for (const auto& m : poly) {
    BigInt term = m.num;
    for (int i = 0; i < 4; ++i) term *= pow_big(BigInt(c[i]), static_cast<unsigned>(m.exponents[i]));
    total += Rational(term, BigInt(m.den));
  }
  return total;
}

inline Rational evaluate(const std::vector<PowerTerm>& poly, long n) {
  Rational total = 0;
  for (const auto& t : poly) {
    total += Rational(BigInt(t.num) * pow_big(BigInt(n), static_cast<unsigned>(t.exponent)),
                      BigInt(t.den));
  }
  return total;
}

// chi_{family at n}(sigma) from the polynomial. Negative counts are rejected.
inline BigInt table1_character(const FamilyId& f, int n, const ShortCycleCounts& counts) {
  if (n < 2 * f.k()) {
    throw DomainError("table1_character: family " + f.tag() + " needs n >= " +
                      std::to_string(2 * f.k()));
  }
  long used = 0;
  for (int i = 0; i < 4; ++i) {
    if (counts.c[i] < 0) throw InputError("table1_character: negative cycle count");
    used += (i + 1) * counts.c[i];
  }
  if (used > n) throw InputError("table1_character: cycle counts exceed n");
  if (counts.sign != 1 && counts.sign != -1) throw InputError("table1_character: sign must be +-1");
  Rational value = evaluate(f.data().character, counts.c);
  if (denominator_of(value) != 1) {
    throw DomainError("table1_character: polynomial took a non-integral value");
  }
  BigInt chi = numerator_of(value);
  return f.transposed ? BigInt(chi * counts.sign) : chi;
}

inline BigInt table1_character(const FamilyId& f, const CycleType& t) {
  return table1_character(f, t.size(), ShortCycleCounts::of(t));
}

// Family dimension polynomial evaluated at n.
inline BigInt table1_dimension(const FamilyId& f, int n) {
  Rational value = evaluate(f.data().dimension, n);
  if (denominator_of(value) != 1) throw DomainError("table1_dimension: non-integral value");
  return numerator_of(value);
}

inline Rational table1_normalized(const FamilyId& f, const CycleType& t) {
  return Rational(table1_character(f, t), table1_dimension(f, t.size()));
}

}  // namespace cayspec

#endif  // CAYSPEC_TABLE1_HPP_
