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

#include "phasegain/bounds.hpp"

#include <cmath>
#include <numbers>

#include "phasegain/error.hpp"

namespace phasegain {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double db_from_constant(double c) {
  if (!(c > 0.0)) throw Error(ErrorCode::DegenerateSet, "shortfall_db: hull has zero perimeter");
  return 20.0 * std::log10(c);
}

double refined_from_hull(const ConvexPolygon& hull, int N) {
  if (N < 1) throw Error(ErrorCode::BadParameter, "refined_constant: N must be at least 1");
  if (hull.size() < 2) throw Error(ErrorCode::DegenerateSet, "refined_constant: hull is a single point");
  const double mn = static_cast<double>(hull.size()) * N;
  return perimeter(hull) / (2.0 * mn * std::sin(std::numbers::pi / mn));
}

}  // namespace

double best_constant(const FeasibleSet& set, int resolution) {
  return perimeter(to_polygon(set, resolution)) / kTwoPi;
}

double shortfall_db(const FeasibleSet& set, int resolution) {
  return db_from_constant(best_constant(set, resolution));
}

double crude_constant(const FeasibleSet& set, int resolution) {
  return min_support(to_polygon(set, resolution));
}

double refined_constant(const FeasibleSet& set, int N) {
  if (!set.is_discrete() && !std::holds_alternative<SampledSet>(set.variant())) {
    throw Error(ErrorCode::NotPolygon, "refined_constant: hull of " + set.describe() + " is not a polygon");
  }
  return refined_from_hull(to_polygon(set), N);
}

AsymptoticConstants asymptotic_constants(int M) {
  if (M < 2) throw Error(ErrorCode::BadParameter, "asymptotic_constants: M must be at least 2");
  const double inv = 1.0 / (static_cast<double>(M) * M);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return {1.0 - pi2 / 2.0 * inv, 1.0 - pi2 / 6.0 * inv};
}

double onoff_small_n_constant(int N) {
  switch (N) {
    case 2: return 0.5;
    case 3: return 1.0 / 3.0;
    default:
      throw Error(ErrorCode::Unsupported,
                  "onoff_small_n_constant: only N = 2 and N = 3 are known, got " + std::to_string(N));
  }
}

BoundReport analyze(const FeasibleSet& set, std::optional<int> n, int resolution) {
  const ConvexPolygon hull = to_polygon(set, resolution);
  BoundReport r;
  r.perimeter = perimeter(hull);
  r.best_constant = r.perimeter / kTwoPi;
  if (r.best_constant > 0.0) r.shortfall_db = db_from_constant(r.best_constant);
  r.crude_constant = min_support(hull);
  r.hull_vertex_count = hull.size();
  r.hull_vertices.assign(hull.vertices().begin(), hull.vertices().end());
  const bool polygonal = set.is_discrete() || std::holds_alternative<SampledSet>(set.variant());
  if (n && polygonal && hull.size() >= 2) {
    r.refined_constant = refined_from_hull(hull, *n);
    r.refined_n = *n;
  } else if (n && *n < 1) {
    throw Error(ErrorCode::BadParameter, "analyze: N must be at least 1");
  }
  return r;
}

}  // namespace phasegain
