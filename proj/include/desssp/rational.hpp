// Copyright 2026 The desssp Authors.
//
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

#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "desssp/errors.hpp"

namespace desssp {

using int128 = __int128;

/// Exact rational number with 64-bit numerator and denominator.
///
/// Used wherever a comparison must not depend on floating-point rounding:
/// the approximation parameter, thresholds and the scaling step. Arithmetic
/// is carried out in 128 bits and reduced; a result that does not fit back
/// into 64 bits raises InvalidArgument.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT
  Rational(int128 num, int128 den) { assign(num, den); }

  /// Parses "p/q", an integer, or a finite decimal such as "0.2".
  static Rational parse(std::string_view text) {
    auto fail = [&] {
      throw InvalidArgument("not a rational number: '" + std::string(text) + "'");
    };
    if (text.empty()) fail();
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      int128 p = parse_integer(text.substr(0, slash), fail);
      int128 q = parse_integer(text.substr(slash + 1), fail);
      if (q == 0) fail();
      return Rational(p, q);
    }
    bool negative = false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
      negative = text[0] == '-';
      i = 1;
    }
    int128 num = 0;
    int128 den = 1;
    bool seen_digit = false;
    bool seen_point = false;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c == '.') {
        if (seen_point) fail();
        seen_point = true;
        continue;
      }
      if (c < '0' || c > '9') fail();
      seen_digit = true;
      num = num * 10 + (c - '0');
      if (seen_point) den *= 10;
      if (num > kLimit || den > kLimit) fail();
    }
    if (!seen_digit) fail();
    return Rational(negative ? -num : num, den);
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Largest integer not above the value.
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  std::int64_t ceil() const { return -Rational(-int128{num_}, int128{den_}).floor(); }

  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(int128{a.num_} * b.den_ + int128{b.num_} * a.den_, int128{a.den_} * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(int128{a.num_} * b.den_ - int128{b.num_} * a.den_, int128{a.den_} * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(int128{a.num_} * b.num_, int128{a.den_} * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InvalidArgument("rational division by zero");
    return Rational(int128{a.num_} * b.den_, int128{a.den_} * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return int128{a.num_} * b.den_ <=> int128{b.num_} * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static constexpr int128 kLimit = std::numeric_limits<std::int64_t>::max();

  template <class Fail>
  static int128 parse_integer(std::string_view s, Fail fail) {
    bool negative = false;
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
      negative = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) fail();
    int128 v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') fail();
      v = v * 10 + (s[i] - '0');
      if (v > kLimit) fail();
    }
    return negative ? -v : v;
  }

  static int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void assign(int128 num, int128 den) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num > kLimit || num < -kLimit || den > kLimit) {
      throw InvalidArgument("rational overflow");
    }
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Exact rational value of a finite double (every double is a dyadic rational).
inline Rational exact_rational(double x) {
  if (!(x == x) || x == std::numeric_limits<double>::infinity() ||
      x == -std::numeric_limits<double>::infinity()) {
    throw InvalidArgument("non-finite value has no rational form");
  }
  if (x == 0.0) return Rational(0);
  int exponent = 0;
  double fraction = std::frexp(x, &exponent);
  auto mantissa = static_cast<std::int64_t>(std::ldexp(fraction, 53));
  exponent -= 53;
  while (mantissa % 2 == 0) {
    mantissa /= 2;
    ++exponent;
  }
  if (exponent >= 0) {
    if (exponent > 62) throw InvalidArgument("value too large for rational form");
    return Rational(int128{mantissa} << exponent, int128{1});
  }
  if (-exponent > 62) throw InvalidArgument("value too small for rational form");
  return Rational(int128{mantissa}, int128{1} << -exponent);
}

}  // namespace desssp
