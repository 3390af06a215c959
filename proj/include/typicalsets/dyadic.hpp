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

#include "typicalsets/geometry.hpp"

#include <cstdint>
#include <vector>

namespace typicalsets {

inline constexpr std::uint64_t kDefaultCubeCap = std::uint64_t(1) << 22;

/// Closed cube prod_k [i_k 2^-n, (i_k+1) 2^-n] of [0,1]^d. Cubes of one
/// level tile the unit cube and share faces.
struct DyadicCube {
  int level = 0;
  std::vector<std::int64_t> index;

  int dim() const { return static_cast<int>(index.size()); }
  Rational lo(int k) const;
  Rational hi(int k) const;
  Rational side() const { return pow2(-level); }
  Point center() const;

  /// Closed-cube membership, exact.
  bool contains(const Point& p) const;

  /// L-infinity distance from an interior point to the cube boundary;
  /// negative when the point is outside.
  Rational boundary_margin(const Point& p) const;

  /// Exact squared Euclidean distance from a point to this closed cube.
  Rational squared_distance_to(const Point& p) const;

  /// Closed cubes intersect iff their axis intervals all overlap.
  bool intersects(const DyadicCube& other) const;

  DyadicCube child(std::uint64_t selector) const;
  DyadicCube ancestor(int coarser_level) const;

  friend bool operator==(const DyadicCube& a, const DyadicCube& b) {
    return a.level == b.level && a.index == b.index;
  }
  friend bool operator<(const DyadicCube& a, const DyadicCube& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.index < b.index;
  }

  std::string str() const;
};

/// All 2^{nd} level-n cubes in lexicographic index order.
/// Throws CapExceeded when 2^{nd} > cap.
std::vector<DyadicCube> cubes_at_level(int n, int d, std::uint64_t cap = kDefaultCubeCap);

std::uint64_t cube_count(int n, int d, std::uint64_t cap = kDefaultCubeCap);

/// The grid {k/2^n : 0 <= k <= 2^n} as an exact 1-d point set.
FinitePointSet dyadic_grid_1d(int n);

/// Per-axis candidate indices of the closed level-n cubes containing
/// coordinate c (two on interior grid faces, one otherwise).
std::vector<std::int64_t> axis_indices(const Rational& c, int n);

/// All closed level-n cubes meeting a nonempty set, lexicographic, deduped.
/// Boundary points belong to every incident cube.
std::vector<DyadicCube> cubes_meeting_set(const FinitePointSet& set, int n);

struct BoxCountRow {
  int level = 0;
  std::uint64_t count = 0;
  double slope = 0.0;  // log2(count) / level; 0 at level 0
};

/// Incidence counting over the set's own points, never cube enumeration.
std::vector<BoxCountRow> box_count_profile(const FinitePointSet& set, int n_max);

}  // namespace typicalsets
