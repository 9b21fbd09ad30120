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

#include <optional>
#include <vector>

#include "phasegain/feasible_set.hpp"

namespace phasegain {

/// Everything known about the worst-case shortfall of one feasible set.
struct BoundReport {
  double perimeter = 0.0;
  double best_constant = 0.0;
  /// Absent when the hull has zero perimeter (single-point set).
  std::optional<double> shortfall_db;
  double crude_constant = 0.0;
  std::optional<double> refined_constant;
  std::optional<int> refined_n;
  std::size_t hull_vertex_count = 0;
  std::vector<Complex> hull_vertices;
};

/// perimeter(Conv W) / 2pi: the largest c with g_W >= c * g_ideal for every
/// channel of every size.
double best_constant(const FeasibleSet& set, int resolution = kDefaultResolution);

/// 20 log10(best_constant). Throws DegenerateSet when the hull is a point.
double shortfall_db(const FeasibleSet& set, int resolution = kDefaultResolution);

/// min over theta of the support function of Conv W; cos(pi/M) for W_M.
double crude_constant(const FeasibleSet& set, int resolution = kDefaultResolution);

/// Fixed-N constant perimeter / (2 M N sin(pi / (M N))) for a polygonal hull
/// with M vertices (a segment counts as M = 2). Throws NotPolygon for
/// continuous sets and DegenerateSet for a single-point hull.
double refined_constant(const FeasibleSet& set, int N);

struct AsymptoticConstants {
  double crude_expansion;  // 1 - pi^2 / (2 M^2)
  double best_expansion;   // 1 - pi^2 / (6 M^2)
};

AsymptoticConstants asymptotic_constants(int M);

/// Best constant for W = {0, 1} at N = 2 (1/2) and N = 3 (1/3). Any other N
/// throws Unsupported.
double onoff_small_n_constant(int N);

/// All of the above in one report; the refined constant is filled in when
/// `n` is given and the hull is polygonal.
BoundReport analyze(const FeasibleSet& set, std::optional<int> n = std::nullopt,
                    int resolution = kDefaultResolution);

}  // namespace phasegain
