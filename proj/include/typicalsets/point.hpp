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

#include "typicalsets/scalar.hpp"

#include <initializer_list>
#include <vector>

namespace typicalsets {

/// Coordinate vector with a fixed backend shared by all coordinates.
class Point {
 public:
  Point() = default;

  static Point exact(std::vector<Rational> coords);
  static Point exact(std::initializer_list<Rational> coords) {
    return exact(std::vector<Rational>(coords));
  }
  static Point floating(std::vector<double> coords);
  static Point floating(std::initializer_list<double> coords) {
    return floating(std::vector<double>(coords));
  }

  int dim() const { return static_cast<int>(coords_.size()); }
  Backend backend() const { return backend_; }

  const Scalar& operator[](int k) const { return coords_[static_cast<std::size_t>(k)]; }

  const Rational& rational(int k) const { return coords_[static_cast<std::size_t>(k)].rational(); }
  double value(int k) const { return coords_[static_cast<std::size_t>(k)].value(); }

  friend bool operator==(const Point& a, const Point& b);
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  /// Lexicographic; only defined within one backend.
  friend bool operator<(const Point& a, const Point& b);

  std::string str() const;

 private:
  Backend backend_ = Backend::exact;
  std::vector<Scalar> coords_;
};

/// Finite set of points of one dimension and one backend. Exact backend
/// deduplicates under exact equality; float backend collapses points within
/// an L-infinity tolerance.
class FinitePointSet {
 public:
  FinitePointSet() = default;
  FinitePointSet(int dim, Backend backend, double float_merge_tol = 1e-12);

  static FinitePointSet of(std::initializer_list<Point> pts);

  int dim() const { return dim_; }
  Backend backend() const { return backend_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  /// Returns true when the point was added (not a duplicate).
  bool insert(Point p);

  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  bool contains(const Point& p) const;

  friend bool operator==(const FinitePointSet& a, const FinitePointSet& b);
  friend bool operator!=(const FinitePointSet& a, const FinitePointSet& b) { return !(a == b); }

 private:
  int dim_ = 0;
  Backend backend_ = Backend::exact;
  double float_merge_tol_ = 1e-12;
  std::vector<Point> points_;
};

void require_same_backend(Backend a, Backend b, const char* what);
void require_dim(int got, int want, const char* what);

/// Numerators of every coordinate over one common positive denominator.
/// All exact predicates reduce to integer arithmetic on this view.
struct IntegerizedView {
  Int den = 1;
  int dim = 0;
  std::size_t count = 0;
  std::vector<Int> num;  // row-major, count * dim entries

  const Int& at(std::size_t point, int axis) const {
    return num[point * static_cast<std::size_t>(dim) + static_cast<std::size_t>(axis)];
  }

  /// Exact squared distance scaled by den^2 (ratios of these are den-free).
  Int squared_distance_scaled(std::size_t a, std::size_t b) const;
};

IntegerizedView integerize(const FinitePointSet& set);
IntegerizedView integerize(const std::vector<Point>& points);

}  // namespace typicalsets
