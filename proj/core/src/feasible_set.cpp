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

#include "phasegain/feasible_set.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "phasegain/error.hpp"

namespace phasegain {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kModulusSlack = 1e-12;
constexpr double kTieTolerance = 1e-12;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::BadParameter, msg); }

void check_points(const std::vector<Complex>& points, const char* what) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, std::string(what) + ": no points");
  for (const Complex& p : points) {
    if (!is_finite(p)) bad(std::string(what) + ": non-finite point");
    if (std::abs(p) > 1.0 + kModulusSlack) bad(std::string(what) + ": point outside the unit disk");
  }
}

double lorentz_radius(const RisLorentzSet& s, double t) {
  return (1.0 - s.beta) * std::pow((1.0 + std::sin(t)) / 2.0, s.alpha) + s.beta;
}

Complex lorentz_point(const RisLorentzSet& s, double t) {
  return lorentz_radius(s, t) * unit_phasor(t);
}

// Index of the member with the largest projection on e^{j phi}; earlier
// members win ties.
std::size_t best_member(const std::vector<Complex>& members, double phi) {
  const Complex dir = unit_phasor(phi);
  std::size_t best = 0;
  double best_val = inner(dir, members[0]);
  for (std::size_t k = 1; k < members.size(); ++k) {
    const double v = inner(dir, members[k]);
    if (v > best_val + kTieTolerance) {
      best = k;
      best_val = v;
    }
  }
  return best;
}

Complex project_regular(int M, double phi) {
  const double t = phi * M / kTwoPi;
  const long long lo = static_cast<long long>(std::floor(t));
  const long long k_lo = ((lo % M) + M) % M;
  const long long k_hi = (k_lo + 1) % M;
  const Complex dir = unit_phasor(phi);
  const Complex a = root_of_unity(k_lo, M);
  const Complex b = root_of_unity(k_hi, M);
  const double va = inner(dir, a);
  const double vb = inner(dir, b);
  if (std::abs(va - vb) <= kTieTolerance) return k_lo < k_hi ? a : b;
  return va > vb ? a : b;
}

Complex project_arc(const ArcSet& s, double phi) {
  if (s.radius == 0.0) return Complex{};
  const double span = s.phi_max - s.phi_min;
  if (span >= kTwoPi) return s.radius * unit_phasor(phi);
  double d = std::fmod(phi - s.phi_min, kTwoPi);
  if (d < 0.0) d += kTwoPi;
  if (d <= span) return s.radius * unit_phasor(s.phi_min + d);
  const double v_min = std::cos(phi - s.phi_min);
  const double v_max = std::cos(phi - s.phi_max);
  return s.radius * unit_phasor(v_max > v_min + kTieTolerance ? s.phi_max : s.phi_min);
}

Complex project_lorentz(const RisLorentzSet& s, double phi, int resolution) {
  if (resolution < 3) bad("project: resolution must be at least 3");
  const Complex dir = unit_phasor(phi);
  auto f = [&](double t) { return inner(dir, lorentz_point(s, t)); };

  const double step = kTwoPi / resolution;
  int best = 0;
  double best_val = f(0.0);
  for (int k = 1; k < resolution; ++k) {
    const double v = f(k * step);
    if (v > best_val + kTieTolerance) {
      best = k;
      best_val = v;
    }
  }

  // Golden-section refinement inside the two neighbouring sample intervals.
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = (best - 1) * step;
  double hi = (best + 1) * step;
  double x1 = hi - g * (hi - lo);
  double x2 = lo + g * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(x1);
    }
  }
  const double t = 0.5 * (lo + hi);
  if (f(t) > best_val) return lorentz_point(s, t);
  return lorentz_point(s, best * step);
}

}  // namespace

Complex root_of_unity(long long k, long long M) {
  const long long r = ((k % M) + M) % M;
  if ((4 * r) % M == 0) {
    switch ((4 * r) / M) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return unit_phasor(kTwoPi * static_cast<double>(r) / static_cast<double>(M));
}

FeasibleSet FeasibleSet::discrete(std::vector<Complex> points) {
  check_points(points, "discrete set");
  return FeasibleSet(DiscreteSet{std::move(points)});
}

FeasibleSet FeasibleSet::discrete_polar(const std::vector<std::pair<double, double>>& modulus_degrees) {
  std::vector<Complex> pts;
  pts.reserve(modulus_degrees.size());
  for (auto [r, deg] : modulus_degrees) pts.push_back(std::polar(r, deg * std::numbers::pi / 180.0));
  return discrete(std::move(pts));
}

FeasibleSet FeasibleSet::regular(int M) {
  if (M < 1 || M > (1 << 24)) bad("regular set: M must be in [1, 2^24]");
  return FeasibleSet(RegularPolygonSet{M});
}

FeasibleSet FeasibleSet::onoff() { return FeasibleSet(OnOffSet{}); }

FeasibleSet FeasibleSet::arc(double phi_min, double phi_max, double radius) {
  if (!std::isfinite(phi_min) || !std::isfinite(phi_max) || !std::isfinite(radius)) {
    bad("arc set: non-finite parameter");
  }
  if (radius < 0.0 || radius > 1.0 + kModulusSlack) bad("arc set: radius must be in [0, 1]");
  if (phi_max < phi_min) bad("arc set: phi_max < phi_min");
  return FeasibleSet(ArcSet{phi_min, phi_max, radius});
}

FeasibleSet FeasibleSet::shifted_circle(Complex center, double radius) {
  if (!is_finite(center) || !std::isfinite(radius)) bad("shifted circle: non-finite parameter");
  if (radius < 0.0) bad("shifted circle: negative radius");
  if (std::abs(center) + radius > 1.0 + 1e-9) bad("shifted circle: leaves the unit disk");
  return FeasibleSet(ShiftedCircleSet{center, radius});
}

FeasibleSet FeasibleSet::ris_lorentz(double alpha, double beta) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) bad("ris set: alpha must be positive");
  if (!(beta >= 0.0 && beta <= 1.0)) bad("ris set: beta must be in [0, 1]");
  return FeasibleSet(RisLorentzSet{alpha, beta});
}

FeasibleSet FeasibleSet::samples(std::vector<Complex> points) {
  check_points(points, "sampled set");
  return FeasibleSet(SampledSet{std::move(points)});
}

bool FeasibleSet::is_discrete() const noexcept {
  return std::holds_alternative<DiscreteSet>(v_) || std::holds_alternative<RegularPolygonSet>(v_) ||
         std::holds_alternative<OnOffSet>(v_);
}

std::string FeasibleSet::describe() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const DiscreteSet& s) { os << "discrete(" << s.points.size() << " points)"; },
                 [&](const RegularPolygonSet& s) { os << "regular(M=" << s.M << ")"; },
                 [&](const OnOffSet&) { os << "onoff"; },
                 [&](const ArcSet& s) {
                   os << "arc(phi=[" << s.phi_min << "," << s.phi_max << "], r=" << s.radius << ")";
                 },
                 [&](const ShiftedCircleSet& s) {
                   os << "circle(center=" << s.center.real() << (s.center.imag() < 0 ? "" : "+")
                      << s.center.imag() << "j, r=" << s.radius << ")";
                 },
                 [&](const RisLorentzSet& s) { os << "ris(alpha=" << s.alpha << ", beta=" << s.beta << ")"; },
                 [&](const SampledSet& s) { os << "samples(" << s.points.size() << " points)"; },
             },
             v_);
  return os.str();
}

std::vector<Complex> FeasibleSet::members(int resolution) const {
  return std::visit(
      overloaded{
          [](const DiscreteSet& s) { return s.points; },
          [](const RegularPolygonSet& s) {
            std::vector<Complex> out;
            out.reserve(static_cast<std::size_t>(s.M));
            for (int k = 0; k < s.M; ++k) out.push_back(root_of_unity(k, s.M));
            return out;
          },
          [](const OnOffSet&) { return std::vector<Complex>{{0.0, 0.0}, {1.0, 0.0}}; },
          [&](const ArcSet& s) {
            if (resolution < 2) bad("arc set: resolution must be at least 2");
            std::vector<Complex> out;
            out.reserve(static_cast<std::size_t>(resolution));
            const double span = s.phi_max - s.phi_min;
            for (int k = 0; k < resolution; ++k) {
              const double phi = k + 1 == resolution ? s.phi_max : s.phi_min + span * k / (resolution - 1);
              out.push_back(s.radius * unit_phasor(phi));
            }
            return out;
          },
          [&](const ShiftedCircleSet& s) {
            if (resolution < 1) bad("shifted circle: resolution must be positive");
            std::vector<Complex> out;
            out.reserve(static_cast<std::size_t>(resolution));
            for (int k = 0; k < resolution; ++k) out.push_back(s.center + s.radius * unit_phasor(kTwoPi * k / resolution));
            return out;
          },
          [&](const RisLorentzSet& s) {
            if (resolution < 1) bad("ris set: resolution must be positive");
            std::vector<Complex> out;
            out.reserve(static_cast<std::size_t>(resolution));
            for (int k = 0; k < resolution; ++k) out.push_back(lorentz_point(s, kTwoPi * k / resolution));
            return out;
          },
          [](const SampledSet& s) { return s.points; },
      },
      v_);
}

ConvexPolygon to_polygon(const FeasibleSet& set, int resolution) {
  const bool exact = set.is_discrete() || std::holds_alternative<SampledSet>(set.variant());
  if (!exact && resolution < 3) bad("to_polygon: resolution must be at least 3 for continuous sets");
  return convex_hull(set.members(resolution));
}

Complex project(const FeasibleSet& set, double phi, int resolution) {
  return std::visit(
      overloaded{
          [&](const RegularPolygonSet& s) { return project_regular(s.M, phi); },
          [&](const ArcSet& s) { return project_arc(s, phi); },
          [&](const ShiftedCircleSet& s) { return s.center + s.radius * unit_phasor(phi); },
          [&](const RisLorentzSet& s) { return project_lorentz(s, phi, resolution); },
          [&](const auto&) {
            const auto m = set.members();
            return m[best_member(m, phi)];
          },
      },
      set.variant());
}

}  // namespace phasegain
