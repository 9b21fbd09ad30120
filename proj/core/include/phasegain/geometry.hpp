// SPDX-License-Identifier: Apache-2.0
//
// phasegain: beamforming gain with nonideal phase shifters
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "phasegain/complex.hpp"

namespace phasegain {

/// Absolute cross-product tolerance below which three points count as collinear.
inline constexpr double kHullEpsilon = 1e-12;

/// A convex polygon in the complex plane, possibly degenerate.
///
/// Vertices are stored counter-clockwise, strictly convex, starting from the
/// lexicographically smallest vertex (smallest real part, then smallest
/// imaginary part). With that canonical form two polygons built from the same
/// point set compare equal with `==`. Zero vertices is the empty set, one is a
/// point, two is a segment.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;

  std::span<const Complex> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  const Complex& operator[](std::size_t i) const { return vertices_[i]; }

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

  // Wraps an already-canonical vertex list without re-checking it.
  static ConvexPolygon from_canonical(std::vector<Complex> vertices) {
    ConvexPolygon p;
    p.vertices_ = std::move(vertices);
    return p;
  }

 private:
  std::vector<Complex> vertices_;
};

struct SupportEvaluation {
  double value = 0.0;
  std::size_t argmax_vertex = 0;
};

/// Indices (into `points`) of the hull vertices in canonical order. Exact
/// duplicates resolve to the lowest input index.
std::vector<std::size_t> hull_indices(std::span<const Complex> points,
                                      double eps = kHullEpsilon);

/// Monotone-chain convex hull. Throws EmptyInput for an empty list.
ConvexPolygon convex_hull(std::span<const Complex> points, double eps = kHullEpsilon);

/// max over vertices of <e^{j theta}, v>; ties go to the lowest vertex index.
SupportEvaluation support(const ConvexPolygon& poly, double theta);

double width(const ConvexPolygon& poly, double theta);

/// Midpoint-rule average of width over [0, 2pi) with `n_samples` nodes.
double mean_width(const ConvexPolygon& poly, int n_samples);

/// Integral of the support function over [0, 2pi), evaluated arc by arc in
/// closed form.
double support_integral(const ConvexPolygon& poly);

/// Mean width from the closed-form support integral.
double mean_width_exact(const ConvexPolygon& poly);

/// Sum of edge lengths. A segment counts both sides (2 x length); a point or
/// the empty set has perimeter 0.
double perimeter(const ConvexPolygon& poly);

/// Exact minimum over theta of the support function.
double min_support(const ConvexPolygon& poly);

double max_modulus(const ConvexPolygon& poly);

/// Angle of the outward normal of edge k (vertex k -> vertex k+1), in (-pi, pi].
/// Vertex k maximizes the support function on the arc from the normal of edge
/// k-1 to the normal of edge k. Empty for fewer than two vertices.
std::vector<double> edge_normal_angles(const ConvexPolygon& poly);

/// {u + v : u in a, v in b} by merging the edge sequences of both polygons.
ConvexPolygon minkowski_sum(const ConvexPolygon& a, const ConvexPolygon& b);

/// Every vertex multiplied by h; h == 0 collapses to the point 0.
ConvexPolygon scale_rotate(const ConvexPolygon& poly, Complex h);

namespace detail {

struct MergedPolygon {
  std::vector<Complex> vertices;
  // For every output vertex, the indices of the a- and b-vertices it sums.
  std::vector<std::size_t> source_a;
  std::vector<std::size_t> source_b;
};

/// Edge-merge Minkowski sum of two canonical vertex lists, keeping track of
/// which input vertices produced each output vertex.
MergedPolygon minkowski_merge(std::span<const Complex> a, std::span<const Complex> b,
                              double eps = kHullEpsilon);

}  // namespace detail

}  // namespace phasegain
