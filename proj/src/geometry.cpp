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
#include "typicalsets/geometry.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace typicalsets {

namespace {

const Rational kEnclosureWidth = Rational(1, Int("1000000000000000000000000000000"));  // 1e-30

void require_pair(const Point& a, const Point& b, const char* what) {
  require_same_backend(a.backend(), b.backend(), what);
  require_dim(b.dim(), a.dim(), what);
}

Rational squared_distance_exact(const Point& a, const Point& b) {
  Rational acc = 0;
  for (int k = 0; k < a.dim(); ++k) {
    const Rational diff = a.rational(k) - b.rational(k);
    acc += diff * diff;
  }
  return acc;
}

}  // namespace

Scalar squared_distance(const Point& a, const Point& b) {
  require_pair(a, b, "euclidean_distance");
  if (a.backend() == Backend::exact) return Scalar::exact(squared_distance_exact(a, b));
  return Scalar::floating(squared_distance_f(a, b));
}

double squared_distance_f(const Point& a, const Point& b) {
  double acc = 0.0;
  for (int k = 0; k < a.dim(); ++k) {
    const double diff = a.value(k) - b.value(k);
    acc += diff * diff;
  }
  return acc;
}

DistanceResult euclidean_distance(const Point& a, const Point& b) {
  DistanceResult out;
  out.squared = squared_distance(a, b);
  if (a.backend() == Backend::exact) {
    out.enclosure = sqrt_enclosure(out.squared.rational(), kEnclosureWidth);
    out.value = out.enclosure->midpoint();
  } else {
    out.value = std::sqrt(out.squared.value());
  }
  return out;
}

// ---------------------------------------------------------------------------
// similarity signatures

SimilaritySignature similarity_signature(const Point& a, const Point& b, const Point& c) {
  require_pair(a, b, "similarity_signature");
  require_pair(a, c, "similarity_signature");
  SimilaritySignature sig;
  sig.backend_ = a.backend();

  if (sig.backend_ == Backend::exact) {
    std::array<Rational, 3> q = {squared_distance_exact(a, b), squared_distance_exact(b, c),
                                 squared_distance_exact(a, c)};
    std::sort(q.begin(), q.end());
    if (q[2] == 0) throw DegenerateInput("similarity_signature: all three points coincide");
    sig.degenerate_ = q[0] == 0;
    sig.sq_[0] = q[0] / q[2];
    sig.sq_[1] = q[1] / q[2];
    sig.sides_[0] = std::sqrt(to_double(sig.sq_[0]));
    sig.sides_[1] = std::sqrt(to_double(sig.sq_[1]));
    return sig;
  }

  std::array<double, 3> q = {squared_distance_f(a, b), squared_distance_f(b, c), squared_distance_f(a, c)};
  std::sort(q.begin(), q.end());
  if (q[2] == 0.0) throw DegenerateInput("similarity_signature: all three points coincide");
  sig.degenerate_ = q[0] == 0.0;
  sig.sides_[0] = std::sqrt(q[0] / q[2]);
  sig.sides_[1] = std::sqrt(q[1] / q[2]);
  return sig;
}

double SimilaritySignature::side(int i) const {
  if (i == 2) return 1.0;
  return sides_[i];
}

const Rational& SimilaritySignature::squared_ratio(int i) const {
  if (backend_ != Backend::exact) throw BackendMismatch("squared_ratio needs the exact backend");
  return sq_[i];
}

bool SimilaritySignature::equals_exact(const SimilaritySignature& other) const {
  if (backend_ != Backend::exact || other.backend_ != Backend::exact) {
    throw BackendMismatch("equals_exact needs exact signatures");
  }
  return sq_[0] == other.sq_[0] && sq_[1] == other.sq_[1];
}

double SimilaritySignature::linf_gap(const SimilaritySignature& other) const {
  return std::max(std::fabs(sides_[0] - other.sides_[0]), std::fabs(sides_[1] - other.sides_[1]));
}

bool SimilaritySignature::equals(const SimilaritySignature& other, double float_tol) const {
  if (backend_ == Backend::exact && other.backend_ == Backend::exact) return equals_exact(other);
  return linf_gap(other) <= float_tol;
}

RatioSet ratio_set(const Point& a, const Point& b, const Point& c) {
  require_pair(a, b, "ratio_set");
  require_pair(a, c, "ratio_set");
  RatioSet out;
  out.backend = a.backend();

  if (out.backend == Backend::exact) {
    std::array<Rational, 3> q = {squared_distance_exact(a, b), squared_distance_exact(b, c),
                                 squared_distance_exact(a, c)};
    if (q[0] == 0 || q[1] == 0 || q[2] == 0) throw DegenerateInput("ratio_set: coincident points");
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const Rational r = q[i] / q[j];
        bool seen = false;
        for (const auto& s : out.squared) {
          if (s == r) {
            seen = true;
            break;
          }
        }
        if (!seen) out.squared.push_back(r);
      }
    }
    std::sort(out.squared.begin(), out.squared.end());
    out.values.reserve(out.squared.size());
    for (const auto& s : out.squared) out.values.push_back(std::sqrt(to_double(s)));
    return out;
  }

  std::array<double, 3> q = {squared_distance_f(a, b), squared_distance_f(b, c), squared_distance_f(a, c)};
  if (q[0] == 0.0 || q[1] == 0.0 || q[2] == 0.0) throw DegenerateInput("ratio_set: coincident points");
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const double r = std::sqrt(q[i] / q[j]);
      bool seen = false;
      for (double s : out.values) {
        if (std::fabs(s - r) <= 1e-9) {
          seen = true;
          break;
        }
      }
      if (!seen) out.values.push_back(r);
    }
  }
  std::sort(out.values.begin(), out.values.end());
  return out;
}

bool operator==(const RatioSet& a, const RatioSet& b) {
  if (a.backend == Backend::exact && b.backend == Backend::exact) return a.squared == b.squared;
  if (a.values.size() != b.values.size()) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (std::fabs(a.values[i] - b.values[i]) > 1e-9) return false;
  }
  return true;
}

Pattern::Pattern(Point a, Point b, Point c) {
  require_pair(a, b, "Pattern");
  require_pair(a, c, "Pattern");
  pts_ = {std::move(a), std::move(b), std::move(c)};
  signature_ = similarity_signature(pts_[0], pts_[1], pts_[2]);
  if (signature_.degenerate()) throw DegenerateInput("pattern needs three pairwise-distinct points");
  r_min_ = signature_.side(0);
}

double similarity_gap(const Point& a, const Point& b, const Point& c, const Pattern& pattern) {
  const auto sig = similarity_signature(a, b, c);
  if (sig.degenerate()) return std::numeric_limits<double>::infinity();
  if (sig.backend() == Backend::exact && pattern.backend() == Backend::exact) {
    if (sig.equals_exact(pattern.signature())) return 0.0;
  }
  const double gap = sig.linf_gap(pattern.signature());
  // exact inequality established above; never report a spurious zero
  if (gap == 0.0 && sig.backend() == Backend::exact && pattern.backend() == Backend::exact) {
    return std::numeric_limits<double>::denorm_min();
  }
  return gap;
}

bool similar_to(const Point& a, const Point& b, const Point& c, const Pattern& pattern) {
  const auto sig = similarity_signature(a, b, c);
  if (sig.degenerate()) return false;
  return sig.equals_exact(pattern.signature());
}

// ---------------------------------------------------------------------------
// affine dependence

namespace {

Rational determinant_exact(std::vector<std::vector<Rational>> m) {
  // Gaussian elimination with exact pivoting
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      const Rational factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

double smallest_singular_value(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues().tail(1)(0);
}

}  // namespace

AffineCheck affine_dependence_margin(const std::vector<Point>& points) {
  if (points.empty()) throw EmptySetError("affine_dependence_margin: no points");
  const int d = points.front().dim();
  if (static_cast<int>(points.size()) != d + 1) {
    throw DimensionMismatch("affine_dependence_margin needs exactly d+1 points of dimension d");
  }
  for (const auto& p : points) {
    require_same_backend(p.backend(), points.front().backend(), "affine_dependence_margin");
    require_dim(p.dim(), d, "affine_dependence_margin");
  }

  Eigen::MatrixXd fm(d, d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) fm(i, k) = points[static_cast<std::size_t>(i + 1)].value(k) - points[0].value(k);
  }

  AffineCheck out;
  if (points.front().backend() == Backend::exact) {
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i) {
      for (int k = 0; k < d; ++k) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
            points[static_cast<std::size_t>(i + 1)].rational(k) - points[0].rational(k);
      }
    }
    const Rational det = determinant_exact(std::move(m));
    out.independent = det != 0;
    out.det = Scalar::exact(det);
  } else {
    const double det = fm.determinant();
    out.independent = det != 0.0;
    out.det = Scalar::floating(det);
  }
  out.margin = out.independent ? smallest_singular_value(fm) : 0.0;
  if (out.independent && out.margin == 0.0) out.margin = std::numeric_limits<double>::denorm_min();
  return out;
}

// ---------------------------------------------------------------------------
// angles

namespace {

void arm_vectors(const Point& x, const Point& y, const Point& z, std::vector<double>& u, std::vector<double>& v) {
  require_pair(x, y, "angle_at");
  require_pair(x, z, "angle_at");
  const int d = x.dim();
  u.resize(static_cast<std::size_t>(d));
  v.resize(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    u[static_cast<std::size_t>(k)] = y.value(k) - x.value(k);
    v[static_cast<std::size_t>(k)] = z.value(k) - x.value(k);
  }
}

}  // namespace

double angle_at(const Point& x, const Point& y, const Point& z) {
  std::vector<double> u, v;
  arm_vectors(x, y, z, u, v);
  double uu = 0, vv = 0, uv = 0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    uu += u[k] * u[k];
    vv += v[k] * v[k];
    uv += u[k] * v[k];
  }
  if (x.backend() == Backend::exact) {
    // decide zero arms exactly, not through the doubles
    if (squared_distance_exact(x, y) == 0 || squared_distance_exact(x, z) == 0) {
      throw DegenerateInput("angle_at: zero-length arm");
    }
  } else if (uu == 0.0 || vv == 0.0) {
    throw DegenerateInput("angle_at: zero-length arm");
  }
  const double c = std::clamp(uv / std::sqrt(uu * vv), -1.0, 1.0);
  return std::acos(c);
}

double angle_gap(const Point& x, const Point& y, const Point& z, double theta) {
  return std::fabs(angle_at(x, y, z) - theta);
}

bool angle_equals_exact(const Point& x, const Point& y, const Point& z, const Rational& cos_theta) {
  if (x.backend() != Backend::exact) throw BackendMismatch("angle_equals_exact needs the exact backend");
  const int d = x.dim();
  Rational uu = 0, vv = 0, uv = 0;
  for (int k = 0; k < d; ++k) {
    const Rational a = y.rational(k) - x.rational(k);
    const Rational b = z.rational(k) - x.rational(k);
    uu += a * a;
    vv += b * b;
    uv += a * b;
  }
  if (uu == 0 || vv == 0) throw DegenerateInput("angle_equals_exact: zero-length arm");
  // cos = uv / sqrt(uu*vv); compare squares and signs
  if ((uv < 0) != (cos_theta < 0) && uv != 0 && cos_theta != 0) return false;
  if ((uv == 0) != (cos_theta == 0)) return false;
  return uv * uv == cos_theta * cos_theta * uu * vv;
}

// ---------------------------------------------------------------------------
// Hausdorff metric on finite sets

namespace {

// directed exact scan with an integerized view; returns max-min scaled squared
Int directed_sq_scaled(const IntegerizedView& view, std::size_t a_begin, std::size_t a_end,
                       std::size_t b_begin, std::size_t b_end) {
  Int best_max = 0;
  for (std::size_t i = a_begin; i < a_end; ++i) {
    Int best;
    bool have = false;
    for (std::size_t j = b_begin; j < b_end; ++j) {
      Int d = view.squared_distance_scaled(i, j);
      if (!have || d < best) {
        best = std::move(d);
        have = true;
      }
      if (best == 0) break;
    }
    if (best > best_max) best_max = std::move(best);
  }
  return best_max;
}

// d=1: sorted values + binary search (the sum-set suites need this path)
Rational hausdorff_1d_exact(const FinitePointSet& e, const FinitePointSet& f) {
  std::vector<Rational> ev, fv;
  ev.reserve(e.size());
  fv.reserve(f.size());
  for (const auto& p : e.points()) ev.push_back(p.rational(0));
  for (const auto& p : f.points()) fv.push_back(p.rational(0));
  std::sort(ev.begin(), ev.end());
  std::sort(fv.begin(), fv.end());

  auto directed = [](const std::vector<Rational>& from, const std::vector<Rational>& to) {
    Rational worst = 0;
    for (const auto& x : from) {
      auto it = std::lower_bound(to.begin(), to.end(), x);
      Rational best = -1;
      if (it != to.end()) best = *it - x;
      if (it != to.begin()) {
        const Rational alt = x - *(it - 1);
        if (best < 0 || alt < best) best = alt;
      }
      if (best > worst) worst = best;
    }
    return worst;
  };

  return std::max(directed(ev, fv), directed(fv, ev));
}

double hausdorff_float(const FinitePointSet& e, const FinitePointSet& f) {
  auto directed = [](const FinitePointSet& from, const FinitePointSet& to) {
    double worst = 0.0;
    for (const auto& p : from.points()) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to.points()) best = std::min(best, squared_distance_f(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(e, f), directed(f, e));
}

}  // namespace

HausdorffResult hausdorff_distance(const FinitePointSet& e, const FinitePointSet& f) {
  if (e.empty() || f.empty()) throw EmptySetError("hausdorff_distance needs nonempty sets");
  require_same_backend(e.backend(), f.backend(), "hausdorff_distance");
  require_dim(f.dim(), e.dim(), "hausdorff_distance");

  HausdorffResult out;
  if (e.backend() == Backend::floating) {
    const double sq = hausdorff_float(e, f);
    out.squared = Scalar::floating(sq);
    out.value = std::sqrt(sq);
    return out;
  }

  if (e.dim() == 1) {
    const Rational dist = hausdorff_1d_exact(e, f);
    out.squared = Scalar::exact(dist * dist);
    out.value = to_double(dist);
    return out;
  }

  std::vector<Point> all;
  all.reserve(e.size() + f.size());
  for (const auto& p : e.points()) all.push_back(p);
  for (const auto& p : f.points()) all.push_back(p);
  const auto view = integerize(all);
  const Int fwd = directed_sq_scaled(view, 0, e.size(), e.size(), all.size());
  const Int bwd = directed_sq_scaled(view, e.size(), all.size(), 0, e.size());
  const Int worst = std::max(fwd, bwd);
  const Rational sq = Rational(worst, view.den * view.den);
  out.squared = Scalar::exact(sq);
  out.value = std::sqrt(to_double(sq));
  return out;
}

}  // namespace typicalsets
