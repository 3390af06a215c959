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

#include "typicalsets/point.hpp"

#include <optional>
#include <vector>

namespace typicalsets {

/// Euclidean distance. The exact backend carries the exact squared value and
/// a certified rational enclosure of the root (width < 1e-30 by default);
/// the float backend carries only the double.
struct DistanceResult {
  Scalar squared;
  double value = 0.0;
  std::optional<RationalInterval> enclosure;
};

DistanceResult euclidean_distance(const Point& a, const Point& b);

/// Squared distance in the shared backend (cheap form used everywhere).
Scalar squared_distance(const Point& a, const Point& b);
double squared_distance_f(const Point& a, const Point& b);

/// Scale/isometry-invariant canonical form of a 3-point configuration:
/// side lengths sorted ascending and normalized by the largest, stored as
/// squared ratios under the exact backend so equality is decidable.
class SimilaritySignature {
 public:
  Backend backend() const { return backend_; }
  bool degenerate() const { return degenerate_; }

  /// Normalized sides s1 <= s2 <= s3 == 1 as doubles.
  double side(int i) const;

  /// Exact squared normalized sides (s_i / s_3)^2, i in {0, 1}.
  const Rational& squared_ratio(int i) const;

  /// Exact equality (exact backend only).
  bool equals_exact(const SimilaritySignature& other) const;
  /// L-infinity distance between the normalized side vectors.
  double linf_gap(const SimilaritySignature& other) const;
  /// Backend-appropriate equality; float tolerance defaults to 1e-9.
  bool equals(const SimilaritySignature& other, double float_tol = 1e-9) const;

  friend SimilaritySignature similarity_signature(const Point&, const Point&, const Point&);

 private:
  Backend backend_ = Backend::exact;
  bool degenerate_ = false;
  Rational sq_[2];     // exact backend
  double sides_[2] = {0.0, 0.0};  // both backends, doubles
};

/// Throws DegenerateInput when all three points coincide; flags the
/// signature degenerate when exactly two do.
SimilaritySignature similarity_signature(const Point& a, const Point& b, const Point& c);

/// The deduplicated set of the six pairwise-distance ratios of a triple.
/// Exact backend: dedup by exact squared-ratio equality, sorted ascending.
struct RatioSet {
  Backend backend = Backend::exact;
  std::vector<Rational> squared;  // exact backend only
  std::vector<double> values;

  friend bool operator==(const RatioSet& a, const RatioSet& b);
};

RatioSet ratio_set(const Point& a, const Point& b, const Point& c);

/// A 3-point target configuration with its cached signature and the
/// min-to-max side ratio.
class Pattern {
 public:
  Pattern(Point a, Point b, Point c);

  const Point& point(int i) const { return pts_[static_cast<std::size_t>(i)]; }
  const SimilaritySignature& signature() const { return signature_; }
  Backend backend() const { return pts_[0].backend(); }

  /// min side / max side, in (0, 1].
  double r_min() const { return r_min_; }

 private:
  std::vector<Point> pts_;
  SimilaritySignature signature_;
  double r_min_ = 1.0;
};

/// L-infinity distance between the triple's signature and the pattern's.
/// Returns exactly 0.0 iff the triple is similar to the pattern (exact
/// backend); degenerate triples are never similar to anything.
double similarity_gap(const Point& a, const Point& b, const Point& c, const Pattern& pattern);

/// Exact similarity predicate (exact backend).
bool similar_to(const Point& a, const Point& b, const Point& c, const Pattern& pattern);

/// Verdict from the exact determinant of the (d x d) difference matrix,
/// margin from its smallest singular value. margin == 0 iff dependent.
struct AffineCheck {
  bool independent = false;
  Scalar det;
  double margin = 0.0;
};

/// Requires exactly d+1 points of dimension d.
AffineCheck affine_dependence_margin(const std::vector<Point>& points);

/// Angle at x between y-x and z-x, in [0, pi]. Throws on a zero arm.
double angle_at(const Point& x, const Point& y, const Point& z);
double angle_gap(const Point& x, const Point& y, const Point& z, double theta);

/// Exact test of cos(angle_at(x,y,z)) == cos_theta (exact backend).
bool angle_equals_exact(const Point& x, const Point& y, const Point& z, const Rational& cos_theta);

/// max( sup_e inf_f |e-f| , sup_f inf_e |e-f| ) on nonempty finite sets.
/// Exact backend: the squared value of the attained maximum is exact.
struct HausdorffResult {
  Scalar squared;
  double value = 0.0;

  const Rational& squared_rational() const { return squared.rational(); }
};

HausdorffResult hausdorff_distance(const FinitePointSet& e, const FinitePointSet& f);

}  // namespace typicalsets
