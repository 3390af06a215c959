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
#include "typicalsets/point.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace typicalsets {

void require_same_backend(Backend a, Backend b, const char* what) {
  if (a != b) throw BackendMismatch(std::string(what) + ": mixed exact/float operands");
}

void require_dim(int got, int want, const char* what) {
  if (got != want) {
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(got) +
                            " where " + std::to_string(want) + " expected");
  }
}

Point Point::exact(std::vector<Rational> coords) {
  if (coords.empty()) throw DimensionMismatch("point needs dimension >= 1");
  Point p;
  p.backend_ = Backend::exact;
  p.coords_.reserve(coords.size());
  for (auto& c : coords) p.coords_.push_back(Scalar::exact(std::move(c)));
  return p;
}

Point Point::floating(std::vector<double> coords) {
  if (coords.empty()) throw DimensionMismatch("point needs dimension >= 1");
  Point p;
  p.backend_ = Backend::floating;
  p.coords_.reserve(coords.size());
  for (double c : coords) p.coords_.push_back(Scalar::floating(c));
  return p;
}

bool operator==(const Point& a, const Point& b) {
  require_same_backend(a.backend_, b.backend_, "point equality");
  if (a.dim() != b.dim()) return false;
  for (int k = 0; k < a.dim(); ++k) {
    if (a[k] != b[k]) return false;
  }
  return true;
}

bool operator<(const Point& a, const Point& b) {
  require_same_backend(a.backend_, b.backend_, "point ordering");
  require_dim(b.dim(), a.dim(), "point ordering");
  for (int k = 0; k < a.dim(); ++k) {
    if (a[k] < b[k]) return true;
    if (b[k] < a[k]) return false;
  }
  return false;
}

std::string Point::str() const {
  std::ostringstream out;
  out << "(";
  for (int k = 0; k < dim(); ++k) {
    if (k) out << ", ";
    out << coords_[static_cast<std::size_t>(k)].str();
  }
  out << ")";
  return out.str();
}

std::string Scalar::str() const {
  if (is_exact()) return rational_to_string(rational_);
  std::ostringstream out;
  out.precision(17);
  out << float_;
  return out.str();
}

FinitePointSet::FinitePointSet(int dim, Backend backend, double float_merge_tol)
    : dim_(dim), backend_(backend), float_merge_tol_(float_merge_tol) {
  if (dim < 1) throw DimensionMismatch("point set needs dimension >= 1");
}

FinitePointSet FinitePointSet::of(std::initializer_list<Point> pts) {
  if (pts.size() == 0) throw EmptySetError("FinitePointSet::of needs at least one point");
  FinitePointSet s(pts.begin()->dim(), pts.begin()->backend());
  for (const auto& p : pts) s.insert(p);
  return s;
}

bool FinitePointSet::insert(Point p) {
  require_same_backend(p.backend(), backend_, "point set insert");
  require_dim(p.dim(), dim_, "point set insert");
  if (backend_ == Backend::exact) {
    for (const auto& q : points_) {
      if (q == p) return false;
    }
  } else {
    for (const auto& q : points_) {
      double linf = 0.0;
      for (int k = 0; k < dim_; ++k) linf = std::max(linf, std::fabs(q.value(k) - p.value(k)));
      if (linf <= float_merge_tol_) return false;
    }
  }
  points_.push_back(std::move(p));
  return true;
}

bool FinitePointSet::contains(const Point& p) const {
  for (const auto& q : points_) {
    if (q == p) return true;
  }
  return false;
}

bool operator==(const FinitePointSet& a, const FinitePointSet& b) {
  if (a.dim_ != b.dim_ || a.backend_ != b.backend_ || a.size() != b.size()) return false;
  // order-insensitive
  for (const auto& p : a.points_) {
    if (!b.contains(p)) return false;
  }
  return true;
}

Int IntegerizedView::squared_distance_scaled(std::size_t a, std::size_t b) const {
  Int acc = 0;
  for (int k = 0; k < dim; ++k) {
    const Int diff = at(a, k) - at(b, k);
    acc += diff * diff;
  }
  return acc;
}

namespace {

IntegerizedView integerize_impl(const std::vector<Point>& points) {
  IntegerizedView view;
  if (points.empty()) return view;
  view.dim = points.front().dim();
  view.count = points.size();
  Int den = 1;
  for (const auto& p : points) {
    if (p.backend() != Backend::exact) throw BackendMismatch("integerize requires the exact backend");
    require_dim(p.dim(), view.dim, "integerize");
    for (int k = 0; k < view.dim; ++k) {
      den = boost::multiprecision::lcm(den, denominator(p.rational(k)));
    }
  }
  view.den = den;
  view.num.reserve(view.count * static_cast<std::size_t>(view.dim));
  for (const auto& p : points) {
    for (int k = 0; k < view.dim; ++k) {
      const auto& c = p.rational(k);
      view.num.push_back(numerator(c) * (den / denominator(c)));
    }
  }
  return view;
}

}  // namespace

IntegerizedView integerize(const FinitePointSet& set) { return integerize_impl(set.points()); }
IntegerizedView integerize(const std::vector<Point>& points) { return integerize_impl(points); }

}  // namespace typicalsets
