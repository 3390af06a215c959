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
#include "typicalsets/rational.hpp"

#include "typicalsets/error.hpp"

#include <cctype>
#include <cmath>

namespace typicalsets {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  // strip surrounding whitespace
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational literal");

  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) {
      throw ParseError("malformed rational literal: " + std::string(text));
    }
    Int p(std::string(num));
    Int q(std::string(den));
    if (q == 0) throw ParseError("zero denominator in: " + std::string(text));
    return Rational(p, q);
  }

  const auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (whole.empty() || whole == "-" || whole == "+") whole = "0";
    if (frac.empty()) frac = "0";
    std::string digits(frac);
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("malformed decimal literal: " + std::string(text));
      }
    }
    if (!is_integer_token(whole)) throw ParseError("malformed decimal literal: " + std::string(text));
    Int scale = 1;
    for (std::size_t i = 0; i < digits.size(); ++i) scale *= 10;
    Int w(std::string(whole));
    Int f(digits);
    const bool negative = text.front() == '-';
    Int total = boost::multiprecision::abs(w) * scale + f;
    if (negative) total = -total;
    return Rational(total, scale);
  }

  if (!is_integer_token(text)) throw ParseError("malformed rational literal: " + std::string(text));
  return Rational(Int(std::string(text)));
}

std::string rational_to_string(const Rational& value) {
  const Int num = boost::multiprecision::numerator(value);
  const Int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw ParseError("non-finite double cannot become a rational");
  if (value == 0.0) return Rational(0);
  int exp = 0;
  const double mantissa = std::frexp(value, &exp);  // mantissa in [0.5, 1)
  // 53 bits capture the full mantissa exactly
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  Rational result(Int(scaled));
  const long e = exp - 53;
  return result * pow2(e);
}

double to_double(const Rational& value) { return value.template convert_to<double>(); }

Rational pow2(long exponent) {
  Int one = 1;
  if (exponent >= 0) return Rational(one << exponent);
  return Rational(one, one << (-exponent));
}

Int numerator(const Rational& value) { return boost::multiprecision::numerator(value); }
Int denominator(const Rational& value) { return boost::multiprecision::denominator(value); }

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

double RationalInterval::midpoint() const { return to_double((lo + hi) / 2); }

RationalInterval sqrt_enclosure(const Rational& x, const Rational& max_width) {
  if (x < 0) throw Error("sqrt_enclosure on a negative value");
  if (max_width <= 0) throw Error("sqrt_enclosure needs a positive width bound");
  if (x == 0) return RationalInterval{Rational(0), Rational(0)};

  const Int p = boost::multiprecision::numerator(x);
  const Int q = boost::multiprecision::denominator(x);
  // sqrt(p/q) = sqrt(p*q)/q; shifting by k bits refines the grid to 1/(q*2^k)
  const Rational inv_width = 1 / max_width;
  const Int need = boost::multiprecision::numerator(inv_width) / boost::multiprecision::denominator(inv_width) + 1;
  unsigned k = 0;
  Int grid = q;
  while (grid <= need) {
    grid <<= 1;
    ++k;
  }
  const Int scaled = p * q << (2 * k);
  const Int root = boost::multiprecision::sqrt(scaled);  // floor sqrt
  RationalInterval out{Rational(root, grid), Rational(root + 1, grid)};
  // floor sqrt guarantees root^2 <= scaled < (root+1)^2
  return out;
}

bool is_perfect_square(const Rational& x, Rational& root) {
  if (x < 0) return false;
  if (x == 0) {
    root = 0;
    return true;
  }
  const Int p = boost::multiprecision::numerator(x);
  const Int q = boost::multiprecision::denominator(x);
  const Int sp = boost::multiprecision::sqrt(p);
  if (sp * sp != p) return false;
  const Int sq = boost::multiprecision::sqrt(q);
  if (sq * sq != q) return false;
  root = Rational(sp, sq);
  return true;
}

std::string decimal_string(const Rational& value, int digits) {
  if (digits < 0) throw Error("decimal_string needs digits >= 0");
  const bool negative = value < 0;
  Rational v = abs(value);
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const Int scaled = boost::multiprecision::numerator(v) * scale / boost::multiprecision::denominator(v);
  const Int whole = scaled / scale;
  Int frac = scaled % scale;
  std::string out = whole.str();
  if (digits > 0 && frac != 0) {
    std::string f = frac.str();
    f.insert(f.begin(), digits - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    if (!f.empty()) out += "." + f;
  }
  if (negative && (whole != 0 || frac != 0)) out.insert(out.begin(), '-');
  return out;
}

unsigned bit_length(const Int& n) {
  if (n == 0) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(n)) + 1;
}

}  // namespace typicalsets
