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
#include "typicalsets/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace typicalsets {

Rational DyadicCube::lo(int k) const { return Rational(index[static_cast<std::size_t>(k)]) * pow2(-level); }

Rational DyadicCube::hi(int k) const {
  return Rational(index[static_cast<std::size_t>(k)] + 1) * pow2(-level);
}

Point DyadicCube::center() const {
  std::vector<Rational> coords;
  coords.reserve(index.size());
  for (std::size_t k = 0; k < index.size(); ++k) {
    coords.push_back(Rational(2 * index[k] + 1) * pow2(-level - 1));
  }
  return Point::exact(std::move(coords));
}

bool DyadicCube::contains(const Point& p) const {
  require_dim(p.dim(), dim(), "DyadicCube::contains");
  for (int k = 0; k < dim(); ++k) {
    const Rational& c = p.rational(k);
    if (c < lo(k) || c > hi(k)) return false;
  }
  return true;
}

Rational DyadicCube::boundary_margin(const Point& p) const {
  require_dim(p.dim(), dim(), "DyadicCube::boundary_margin");
  Rational margin;
  bool first = true;
  for (int k = 0; k < dim(); ++k) {
    const Rational& c = p.rational(k);
    const Rational m = std::min(Rational(c - lo(k)), Rational(hi(k) - c));
    if (first || m < margin) {
      margin = m;
      first = false;
    }
  }
  return margin;
}

Rational DyadicCube::squared_distance_to(const Point& p) const {
  require_dim(p.dim(), dim(), "DyadicCube::squared_distance_to");
  Rational acc = 0;
  for (int k = 0; k < dim(); ++k) {
    const Rational& c = p.rational(k);
    const Rational l = lo(k);
    const Rational h = hi(k);
    if (c < l) {
      const Rational gap = l - c;
      acc += gap * gap;
    } else if (c > h) {
      const Rational gap = c - h;
      acc += gap * gap;
    }
  }
  return acc;
}

bool DyadicCube::intersects(const DyadicCube& other) const {
  require_dim(other.dim(), dim(), "DyadicCube::intersects");
  for (int k = 0; k < dim(); ++k) {
    if (hi(k) < other.lo(k) || other.hi(k) < lo(k)) return false;
  }
  return true;
}

DyadicCube DyadicCube::child(std::uint64_t selector) const {
  DyadicCube c;
  c.level = level + 1;
  c.index.reserve(index.size());
  for (std::size_t k = 0; k < index.size(); ++k) {
    const std::int64_t bit = static_cast<std::int64_t>((selector >> k) & 1u);
    c.index.push_back(index[k] * 2 + bit);
  }
  return c;
}

DyadicCube DyadicCube::ancestor(int coarser_level) const {
  if (coarser_level > level) throw Error("ancestor level must not exceed the cube's level");
  DyadicCube c;
  c.level = coarser_level;
  c.index.reserve(index.size());
  const int shift = level - coarser_level;
  for (std::size_t k = 0; k < index.size(); ++k) c.index.push_back(index[k] >> shift);
  return c;
}

std::string DyadicCube::str() const {
  std::ostringstream out;
  out << "Q(level=" << level << ", index=[";
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (k) out << ",";
    out << index[k];
  }
  out << "])";
  return out.str();
}

std::uint64_t cube_count(int n, int d, std::uint64_t cap) {
  if (n < 0 || d < 1) throw Error("cube_count needs n >= 0, d >= 1");
  const long long bits = static_cast<long long>(n) * d;
  if (bits >= 63) throw CapExceeded("2^(n*d) exceeds the enumeration cap");
  const std::uint64_t total = std::uint64_t(1) << bits;
  if (total > cap) throw CapExceeded("2^(n*d) = " + std::to_string(total) + " exceeds cap " + std::to_string(cap));
  return total;
}

std::vector<DyadicCube> cubes_at_level(int n, int d, std::uint64_t cap) {
  const std::uint64_t total = cube_count(n, d, cap);
  std::vector<DyadicCube> out;
  out.reserve(total);
  DyadicCube cube;
  cube.level = n;
  cube.index.assign(static_cast<std::size_t>(d), 0);
  const std::int64_t limit = std::int64_t(1) << n;
  for (;;) {
    out.push_back(cube);
    int k = d - 1;
    while (k >= 0) {
      if (++cube.index[static_cast<std::size_t>(k)] < limit) break;
      cube.index[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

FinitePointSet dyadic_grid_1d(int n) {
  if (n < 0) throw Error("dyadic_grid_1d needs n >= 0");
  if (n > 40) throw CapExceeded("dyadic_grid_1d level too large");
  FinitePointSet grid(1, Backend::exact);
  const std::int64_t top = std::int64_t(1) << n;
  for (std::int64_t k = 0; k <= top; ++k) grid.insert(Point::exact({Rational(k, top)}));
  return grid;
}

std::vector<std::int64_t> axis_indices(const Rational& c, int n) {
  if (c < 0 || c > 1) throw Error("axis_indices: coordinate outside [0,1]");
  const std::int64_t top = std::int64_t(1) << n;
  // i = floor(c * 2^n), boundary iff c * 2^n is an integer
  const Rational scaled = c * pow2(n);
  const Int num = numerator(scaled);
  const Int den = denominator(scaled);
  const Int fl = (num >= 0) ? num / den : -((-num + den - 1) / den);
  std::int64_t i = fl.convert_to<std::int64_t>();
  const bool on_grid = den == 1;
  std::vector<std::int64_t> out;
  if (i >= top) i = top - 1;  // c == 1
  out.push_back(i);
  if (on_grid && i >= 1 && Rational(Int(i)) == scaled) out.push_back(i - 1);
  return out;
}

std::vector<DyadicCube> cubes_meeting_set(const FinitePointSet& set, int n) {
  if (set.empty()) throw EmptySetError("cubes_meeting_set needs a nonempty set");
  if (set.backend() != Backend::exact) throw BackendMismatch("cubes_meeting_set needs the exact backend");
  const int d = set.dim();
  std::set<std::vector<std::int64_t>> indices;
  std::vector<std::vector<std::int64_t>> per_axis(static_cast<std::size_t>(d));
  for (const auto& p : set.points()) {
    for (int k = 0; k < d; ++k) per_axis[static_cast<std::size_t>(k)] = axis_indices(p.rational(k), n);
    // cartesian product of per-axis candidates
    std::vector<std::size_t> pick(static_cast<std::size_t>(d), 0);
    for (;;) {
      std::vector<std::int64_t> idx(static_cast<std::size_t>(d));
      for (int k = 0; k < d; ++k) idx[static_cast<std::size_t>(k)] = per_axis[static_cast<std::size_t>(k)][pick[static_cast<std::size_t>(k)]];
      indices.insert(std::move(idx));
      int k = d - 1;
      while (k >= 0) {
        auto& pk = pick[static_cast<std::size_t>(k)];
        if (++pk < per_axis[static_cast<std::size_t>(k)].size()) break;
        pk = 0;
        --k;
      }
      if (k < 0) break;
    }
  }
  std::vector<DyadicCube> out;
  out.reserve(indices.size());
  for (auto& idx : indices) {
    DyadicCube c;
    c.level = n;
    c.index = idx;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<BoxCountRow> box_count_profile(const FinitePointSet& set, int n_max) {
  if (set.empty()) throw EmptySetError("box_count_profile needs a nonempty set");
  if (n_max < 0 || n_max > 512) throw CapExceeded("box_count_profile: n_max out of range");
  std::vector<BoxCountRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const auto cubes = cubes_meeting_set(set, n);
    BoxCountRow row;
    row.level = n;
    row.count = cubes.size();
    row.slope = n == 0 ? 0.0 : std::log2(static_cast<double>(row.count)) / n;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace typicalsets
