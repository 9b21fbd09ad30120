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

#include "phasegain/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "phasegain/error.hpp"

namespace phasegain {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Maps an angle into [0, 2pi).
double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

void require_non_empty(const ConvexPolygon& poly, const char* what) {
  if (poly.empty()) {
    throw Error(ErrorCode::EmptyPolygon, std::string(what) + ": polygon is empty");
  }
}

double turn(Complex o, Complex a, Complex b) { return cross(a - o, b - o); }

// Orders edge directions by polar angle, measured counter-clockwise from the
// straight-down direction (exclusive), which is where the outgoing edge of the
// lexicographically smallest vertex starts. Returns <0, 0, >0.
int half_plane(Complex r) {
  return (r.imag() > 0.0 || (r.imag() == 0.0 && r.real() < 0.0)) ? 0 : 1;
}

int compare_edges(Complex ea, Complex eb) {
  // Rotate by +90 degrees so that straight down lands on angle 0.
  const Complex ra{-ea.imag(), ea.real()};
  const Complex rb{-eb.imag(), eb.real()};
  const int ha = half_plane(ra);
  const int hb = half_plane(rb);
  if (ha != hb) return ha < hb ? -1 : 1;
  const double c = cross(ra, rb);
  if (c > 0.0) return -1;
  if (c < 0.0) return 1;
  return 0;
}

std::vector<Complex> edges_of(std::span<const Complex> v) {
  std::vector<Complex> e;
  if (v.size() < 2) return e;
  e.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) e.push_back(v[(k + 1) % v.size()] - v[k]);
  return e;
}

}  // namespace

std::vector<std::size_t> hull_indices(std::span<const Complex> points, double eps) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "convex_hull: no points");
  for (const auto& p : points) {
    if (!is_finite(p)) throw Error(ErrorCode::BadParameter, "convex_hull: non-finite point");
  }

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const Complex& p = points[i];
    const Complex& q = points[j];
    if (p.real() != q.real()) return p.real() < q.real();
    if (p.imag() != q.imag()) return p.imag() < q.imag();
    return i < j;
  });
  order.erase(std::unique(order.begin(), order.end(),
                          [&](std::size_t i, std::size_t j) { return points[i] == points[j]; }),
              order.end());

  if (order.size() == 1) return order;

  std::vector<std::size_t> hull(2 * order.size());
  std::size_t k = 0;
  for (std::size_t idx : order) {
    while (k >= 2 && turn(points[hull[k - 2]], points[hull[k - 1]], points[idx]) <= eps) --k;
    hull[k++] = idx;
  }
  const std::size_t lower = k + 1;
  for (std::size_t r = order.size() - 1; r-- > 0;) {
    const std::size_t idx = order[r];
    while (k >= lower && turn(points[hull[k - 2]], points[hull[k - 1]], points[idx]) <= eps) --k;
    hull[k++] = idx;
  }
  hull.resize(k - 1);
  return hull;
}

ConvexPolygon convex_hull(std::span<const Complex> points, double eps) {
  const auto idx = hull_indices(points, eps);
  std::vector<Complex> v;
  v.reserve(idx.size());
  for (std::size_t i : idx) v.push_back(points[i]);
  return ConvexPolygon::from_canonical(std::move(v));
}

SupportEvaluation support(const ConvexPolygon& poly, double theta) {
  require_non_empty(poly, "support");
  const Complex dir = unit_phasor(theta);
  SupportEvaluation best{inner(dir, poly[0]), 0};
  for (std::size_t k = 1; k < poly.size(); ++k) {
    const double v = inner(dir, poly[k]);
    if (v > best.value) best = {v, k};
  }
  return best;
}

double width(const ConvexPolygon& poly, double theta) {
  require_non_empty(poly, "width");
  return support(poly, theta).value + support(poly, theta + std::numbers::pi).value;
}

double mean_width(const ConvexPolygon& poly, int n_samples) {
  require_non_empty(poly, "mean_width");
  if (n_samples < 8) throw Error(ErrorCode::BadParameter, "mean_width: need at least 8 samples");
  const double step = kTwoPi / n_samples;
  double acc = 0.0;
  for (int k = 0; k < n_samples; ++k) acc += width(poly, (k + 0.5) * step);
  return acc / n_samples;
}

std::vector<double> edge_normal_angles(const ConvexPolygon& poly) {
  std::vector<double> out;
  for (const Complex& d : edges_of(poly.vertices())) out.push_back(std::atan2(-d.real(), d.imag()));
  return out;
}

double support_integral(const ConvexPolygon& poly) {
  require_non_empty(poly, "support_integral");
  const std::size_t n = poly.size();
  if (n == 1) return 0.0;
  const auto normals = edge_normal_angles(poly);
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double a = normals[(k + n - 1) % n];
    const double b = a + wrap_angle(normals[k] - a);
    const Complex v = poly[k];
    acc += v.real() * (std::sin(b) - std::sin(a)) - v.imag() * (std::cos(b) - std::cos(a));
  }
  return acc;
}

double mean_width_exact(const ConvexPolygon& poly) {
  return support_integral(poly) / std::numbers::pi;
}

double perimeter(const ConvexPolygon& poly) {
  double acc = 0.0;
  for (const Complex& e : edges_of(poly.vertices())) acc += std::abs(e);
  return acc;
}

double min_support(const ConvexPolygon& poly) {
  require_non_empty(poly, "min_support");
  const std::size_t n = poly.size();
  if (n == 1) return -std::abs(poly[0]);
  const auto normals = edge_normal_angles(poly);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex v = poly[k];
    const double a = normals[(k + n - 1) % n];
    const double len = wrap_angle(normals[k] - a);
    best = std::min({best, inner(unit_phasor(a), v), inner(unit_phasor(a + len), v)});
    const double mod = std::abs(v);
    if (mod > 0.0 && wrap_angle(std::arg(v) + std::numbers::pi - a) <= len) best = std::min(best, -mod);
  }
  return best;
}

double max_modulus(const ConvexPolygon& poly) {
  require_non_empty(poly, "max_modulus");
  double best = 0.0;
  for (const Complex& v : poly.vertices()) best = std::max(best, std::abs(v));
  return best;
}

namespace detail {

MergedPolygon minkowski_merge(std::span<const Complex> a, std::span<const Complex> b,
                              double eps) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptyPolygon, "minkowski_sum: empty operand");

  const auto ea = edges_of(a);
  const auto eb = edges_of(b);
  const std::size_t na = ea.size();
  const std::size_t nb = eb.size();

  std::vector<Complex> cand;
  std::vector<std::size_t> src_a;
  std::vector<std::size_t> src_b;
  cand.reserve(na + nb + 1);
  src_a.reserve(na + nb + 1);
  src_b.reserve(na + nb + 1);

  std::size_t i = 0;
  std::size_t j = 0;
  auto emit = [&] {
    const std::size_t ia = na ? i % na : 0;
    const std::size_t jb = nb ? j % nb : 0;
    cand.push_back(a[ia] + b[jb]);
    src_a.push_back(ia);
    src_b.push_back(jb);
  };
  emit();
  while (i < na || j < nb) {
    int c;
    if (i < na && j < nb) {
      c = compare_edges(ea[i], eb[j]);
    } else {
      c = i < na ? -1 : 1;
    }
    if (c <= 0) ++i;
    if (c >= 0) ++j;
    if (i < na || j < nb) emit();
  }

  // Nearly parallel edges can leave collinear or marginally reflex vertices.
  const auto keep = hull_indices(cand, eps);
  MergedPolygon out;
  out.vertices.reserve(keep.size());
  out.source_a.reserve(keep.size());
  out.source_b.reserve(keep.size());
  for (std::size_t k : keep) {
    out.vertices.push_back(cand[k]);
    out.source_a.push_back(src_a[k]);
    out.source_b.push_back(src_b[k]);
  }
  return out;
}

}  // namespace detail

ConvexPolygon minkowski_sum(const ConvexPolygon& a, const ConvexPolygon& b) {
  auto merged = detail::minkowski_merge(a.vertices(), b.vertices());
  return ConvexPolygon::from_canonical(std::move(merged.vertices));
}

ConvexPolygon scale_rotate(const ConvexPolygon& poly, Complex h) {
  if (poly.empty()) return poly;
  if (h == Complex{}) return ConvexPolygon::from_canonical({Complex{}});
  std::vector<Complex> scaled;
  scaled.reserve(poly.size());
  for (const Complex& v : poly.vertices()) scaled.push_back(v * h);
  return convex_hull(scaled);
}

}  // namespace phasegain
