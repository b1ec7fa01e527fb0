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

// Exact integer and rational arithmetic used throughout the library, plus the
// error types and text conversions shared by every module.

#ifndef CAYSPEC_EXACT_HPP_
#define CAYSPEC_EXACT_HPP_

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cayspec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Malformed or inconsistent input (bad notation, size mismatch, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input outside the domain where an operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline BigInt factorial(int n) {
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

inline BigInt pow_big(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  return Rational(num, den);
}

inline BigInt numerator_of(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline BigInt denominator_of(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline std::string to_string(const BigInt& x) { return x.str(); }

// Always "p/q" with q >= 1, also for integers ("2/1").
inline std::string to_string(const Rational& q) {
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw InputError("malformed integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw InputError("malformed integer '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s);
}

// Accepts "p/q", "p" and plain decimals such as "2.05".
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    return make_rational(parse_bigint(text.substr(0, slash)),
                         parse_bigint(text.substr(slash + 1)));
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_bigint(text));
  std::string digits(text.substr(0, dot));
  std::string frac(text.substr(dot + 1));
  if (frac.empty()) throw InputError("malformed decimal '" + std::string(text) + "'");
  bool negative = !digits.empty() && digits[0] == '-';
  if (digits.empty() || digits == "-" || digits == "+") digits += "0";
  BigInt whole = parse_bigint(digits);
  BigInt scale = pow_big(BigInt(10), static_cast<unsigned>(frac.size()));
  BigInt part = parse_bigint(frac);
  BigInt num = whole * scale + (negative ? -part : part);
  return make_rational(num, scale);
}

// Natural log of a positive big integer, safe beyond the double range.
inline double log_big(const BigInt& x) {
  if (x <= 0) throw DomainError("log of non-positive integer");
  unsigned bits = boost::multiprecision::msb(x);
  if (bits < 900) return std::log(static_cast<double>(x));
  unsigned shift = bits - 60;
  BigInt top = x >> shift;
  return std::log(static_cast<double>(top)) + shift * std::log(2.0);
}

inline double to_double(const Rational& q) { return static_cast<double>(q); }

// Sign of a/b - c/d for b, d > 0 without building rationals.
inline int compare_fractions(const BigInt& a, const BigInt& b, const BigInt& c,
                             const BigInt& d) {
  BigInt lhs = a * d;
  BigInt rhs = c * b;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

inline int parse_int(std::string_view text, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError(std::string("malformed ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace cayspec

#endif  // CAYSPEC_EXACT_HPP_
