/*
 * Copyright 2026 The typicalsets authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace typicalsets {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", a plain integer, or a decimal like "0.25". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical wire form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& value);

/// Exact binary value of a finite double. Throws ParseError on NaN/inf.
Rational rational_from_double(double value);

double to_double(const Rational& value);

/// 2^exponent for any sign of exponent.
Rational pow2(long exponent);

Int numerator(const Rational& value);
Int denominator(const Rational& value);

Rational abs(const Rational& value);

/// Closed interval of rationals. Used for certified square-root enclosures.
struct RationalInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  double midpoint() const;
};

/// Encloses sqrt(x) in an interval of width <= max_width with
/// lo^2 <= x <= hi^2. Requires x >= 0.
RationalInterval sqrt_enclosure(const Rational& x, const Rational& max_width);

/// True iff x is the square of a rational; the root comes out nonnegative.
bool is_perfect_square(const Rational& x, Rational& root);

/// Truncated decimal expansion with the given number of fractional digits;
/// trailing zeros are stripped.
std::string decimal_string(const Rational& value, int digits);

/// Number of bits of |n|; msb(0) == 0.
unsigned bit_length(const Int& n);

}  // namespace typicalsets
