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

#include "typicalsets/error.hpp"
#include "typicalsets/rational.hpp"

namespace typicalsets {

enum class Backend { exact, floating };

inline const char* backend_name(Backend b) { return b == Backend::exact ? "exact" : "float"; }

/// One coordinate value. Either an arbitrary-precision rational (kept
/// canonical by the backend) or a double. Arithmetic across backends is
/// rejected, never coerced.
class Scalar {
 public:
  Scalar() : backend_(Backend::exact), rational_(0), float_(0.0) {}

  static Scalar exact(Rational value) {
    Scalar s;
    s.backend_ = Backend::exact;
    s.rational_ = std::move(value);
    return s;
  }

  static Scalar floating(double value) {
    Scalar s;
    s.backend_ = Backend::floating;
    s.float_ = value;
    return s;
  }

  Backend backend() const { return backend_; }
  bool is_exact() const { return backend_ == Backend::exact; }

  const Rational& rational() const {
    if (backend_ != Backend::exact) throw BackendMismatch("float scalar has no exact rational value");
    return rational_;
  }

  /// Double view of either backend.
  double value() const { return backend_ == Backend::exact ? to_double(rational_) : float_; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return combine(a, b, '+'); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return combine(a, b, '-'); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return combine(a, b, '*'); }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return combine(a, b, '/'); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    check(a, b);
    return a.is_exact() ? a.rational_ == b.rational_ : a.float_ == b.float_;
  }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    check(a, b);
    return a.is_exact() ? a.rational_ < b.rational_ : a.float_ < b.float_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return a < b || a == b; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return b <= a; }

  std::string str() const;

 private:
  static void check(const Scalar& a, const Scalar& b) {
    if (a.backend_ != b.backend_) throw BackendMismatch("mixed exact/float scalar arithmetic is rejected");
  }

  static Scalar combine(const Scalar& a, const Scalar& b, char op) {
    check(a, b);
    if (a.is_exact()) {
      switch (op) {
        case '+': return exact(a.rational_ + b.rational_);
        case '-': return exact(a.rational_ - b.rational_);
        case '*': return exact(a.rational_ * b.rational_);
        default:
          if (b.rational_ == 0) throw Error("scalar division by zero");
          return exact(a.rational_ / b.rational_);
      }
    }
    switch (op) {
      case '+': return floating(a.float_ + b.float_);
      case '-': return floating(a.float_ - b.float_);
      case '*': return floating(a.float_ * b.float_);
      default: return floating(a.float_ / b.float_);
    }
  }

  Backend backend_;
  Rational rational_;
  double float_;
};

}  // namespace typicalsets
