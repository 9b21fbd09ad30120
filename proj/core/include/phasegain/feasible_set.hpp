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

#include <string>
#include <variant>
#include <vector>

#include "phasegain/complex.hpp"
#include "phasegain/geometry.hpp"

namespace phasegain {

/// Samples per continuous boundary when building its hull.
inline constexpr int kDefaultResolution = 4096;

/// Coarse sampling used by `project` on curves without a closed-form argmax;
/// the best sample is then refined by a bracketed search.
inline constexpr int kDefaultProjectResolution = 8192;

/// e^{j 2 pi k / M}, with components snapped to exact 0 / +-1 where they
/// should be.
Complex root_of_unity(long long k, long long M);

struct DiscreteSet {
  std::vector<Complex> points;

  friend bool operator==(const DiscreteSet&, const DiscreteSet&) = default;
};

/// The M-th roots of unity: a log2(M)-bit uniform phase shifter.
struct RegularPolygonSet {
  int M = 1;

  friend bool operator==(const RegularPolygonSet&, const RegularPolygonSet&) = default;
};

/// {0, 1}: an element that is either off or passes the signal unchanged.
struct OnOffSet {
  friend bool operator==(const OnOffSet&, const OnOffSet&) = default;
};

/// radius * e^{j phi}, phi in [phi_min, phi_max]: limited phase range.
struct ArcSet {
  double phi_min = 0.0;
  double phi_max = 0.0;
  double radius = 1.0;

  friend bool operator==(const ArcSet&, const ArcSet&) = default;
};

/// A circle that need not be centered at the origin.
struct ShiftedCircleSet {
  Complex center;
  double radius = 0.0;

  friend bool operator==(const ShiftedCircleSet&, const ShiftedCircleSet&) = default;
};

/// RIS element response r(t) e^{jt} with
/// r(t) = (1 - beta) ((1 + sin t) / 2)^alpha + beta.
struct RisLorentzSet {
  double alpha = 1.0;
  double beta = 0.0;

  friend bool operator==(const RisLorentzSet&, const RisLorentzSet&) = default;
};

/// Samples of a continuous set supplied by the user; the hull is exact but
/// the set is treated as continuous (no enumeration, no vertex count).
struct SampledSet {
  std::vector<Complex> points;

  friend bool operator==(const SampledSet&, const SampledSet&) = default;
};

/// The set of beamforming coefficients a phase shifter can realize. Every
/// member lies in the closed unit disk; factories reject parameters that
/// would violate that with Error(BadParameter).
class FeasibleSet {
 public:
  using Variant = std::variant<DiscreteSet, RegularPolygonSet, OnOffSet, ArcSet,
                               ShiftedCircleSet, RisLorentzSet, SampledSet>;

  static FeasibleSet discrete(std::vector<Complex> points);
  static FeasibleSet discrete_polar(const std::vector<std::pair<double, double>>& modulus_degrees);
  static FeasibleSet regular(int M);
  static FeasibleSet onoff();
  static FeasibleSet arc(double phi_min, double phi_max, double radius = 1.0);
  static FeasibleSet shifted_circle(Complex center, double radius);
  static FeasibleSet ris_lorentz(double alpha, double beta);
  static FeasibleSet samples(std::vector<Complex> points);

  const Variant& variant() const noexcept { return v_; }

  /// True when the set has finitely many members that can be enumerated.
  bool is_discrete() const noexcept;

  /// Human-readable short description, e.g. "regular(M=4)".
  std::string describe() const;

  /// Enumerated members for discrete sets; `resolution` boundary samples for
  /// continuous ones.
  std::vector<Complex> members(int resolution = kDefaultResolution) const;

  friend bool operator==(const FeasibleSet&, const FeasibleSet&) = default;

 private:
  explicit FeasibleSet(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Conv W. Exact for enumerable sets; an inscribed polygon through
/// `resolution` boundary samples for continuous ones (resolution >= 3).
ConvexPolygon to_polygon(const FeasibleSet& set, int resolution = kDefaultResolution);

/// argmax over W of <e^{j phi}, w>. Ties go to the lowest member index (or
/// the smallest parameter for curves).
Complex project(const FeasibleSet& set, double phi, int resolution = kDefaultProjectResolution);

}  // namespace phasegain
