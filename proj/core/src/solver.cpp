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

#include "phasegain/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "phasegain/error.hpp"
#include "phasegain/geometry.hpp"

namespace phasegain {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

void check_channel(const PhasorChannel& ch, const char* who) {
  if (ch.coefficients.empty()) throw Error(ErrorCode::EmptyInput, std::string(who) + ": channel has no antennas");
  for (const Complex& h : ch.coefficients) {
    if (!is_finite(h)) throw Error(ErrorCode::BadParameter, std::string(who) + ": non-finite channel coefficient");
  }
  if (ch.direct && !is_finite(*ch.direct)) {
    throw Error(ErrorCode::BadParameter, std::string(who) + ": non-finite direct path");
  }
}

// Conv W as used by the exact solvers. Continuous sets need an explicit
// sampling resolution.
ConvexPolygon solver_hull(const FeasibleSet& set, const SolveOptions& opts, const char* who) {
  if (set.is_discrete() || std::holds_alternative<SampledSet>(set.variant())) return to_polygon(set);
  if (!opts.resolution) {
    throw Error(ErrorCode::ContinuousSetNotSupported,
                std::string(who) + ": " + set.describe() + " is continuous; supply a resolution");
  }
  return to_polygon(set, *opts.resolution);
}

BeamformingSolution make_solution(std::vector<Complex> weights, const PhasorChannel& ch, SolveMethod method) {
  BeamformingSolution s;
  s.gain = evaluate_gain(weights, ch);
  s.ideal_gain = ideal_gain(ch);
  s.ratio = s.ideal_gain > 0.0 ? s.gain / s.ideal_gain : 0.0;
  s.weights = std::move(weights);
  s.method = method;
  return s;
}

struct SweepEvent {
  double angle;
  std::uint32_t antenna;
  std::uint32_t vertex;
};

// Hull-vertex index per antenna for the best arc of the phase-reference sweep.
std::vector<std::size_t> sweep_assignment(std::span<const Complex> h, const ConvexPolygon& hull,
                                          std::size_t recompute_interval) {
  const std::size_t n_ant = h.size();
  const std::size_t n_v = hull.size();
  std::vector<std::size_t> assign(n_ant, 0);
  if (n_v <= 1) return assign;

  const auto normals = edge_normal_angles(hull);
  std::vector<SweepEvent> events;
  events.reserve(n_ant * n_v);
  for (std::size_t n = 0; n < n_ant; ++n) {
    if (h[n] == Complex{}) continue;
    const double theta_n = std::arg(h[n]);
    // Past the normal of edge k, vertex k+1 takes over as the argmax.
    for (std::size_t k = 0; k < n_v; ++k) {
      events.push_back({wrap_angle(theta_n + normals[k]), static_cast<std::uint32_t>(n),
                        static_cast<std::uint32_t>((k + 1) % n_v)});
    }
  }
  std::sort(events.begin(), events.end(), [](const SweepEvent& a, const SweepEvent& b) {
    if (a.angle != b.angle) return a.angle < b.angle;
    if (a.antenna != b.antenna) return a.antenna < b.antenna;
    return a.vertex < b.vertex;
  });

  // Start in the arc that wraps through theta = 0.
  const double start =
      events.empty() ? 0.0 : 0.5 * ((events.back().angle - kTwoPi) + events.front().angle);
  for (std::size_t n = 0; n < n_ant; ++n) {
    if (h[n] != Complex{}) assign[n] = support(hull, start - std::arg(h[n])).argmax_vertex;
  }
  const std::vector<std::size_t> initial = assign;

  auto full_sum = [&] {
    Complex s{};
    for (std::size_t n = 0; n < n_ant; ++n) s += hull[assign[n]] * h[n];
    return s;
  };

  Complex s = full_sum();
  double best = std::abs(s);
  std::size_t best_pos = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const SweepEvent& e = events[i];
    s += (hull[e.vertex] - hull[assign[e.antenna]]) * h[e.antenna];
    assign[e.antenna] = e.vertex;
    if ((i + 1) % recompute_interval == 0) s = full_sum();
    const double g = std::abs(s);
    if (g > best) {
      best = g;
      best_pos = i + 1;
    }
  }

  assign = initial;
  for (std::size_t i = 0; i < best_pos; ++i) assign[events[i].antenna] = events[i].vertex;
  return assign;
}

}  // namespace

std::string_view to_string(SolveMethod m) noexcept {
  switch (m) {
    case SolveMethod::Greedy: return "greedy";
    case SolveMethod::AngleSweep: return "angle_sweep";
    case SolveMethod::Minkowski: return "minkowski";
    case SolveMethod::BruteForce: return "brute_force";
    case SolveMethod::Ris: return "ris";
  }
  return "unknown";
}

double ideal_gain(const PhasorChannel& ch) {
  double acc = 0.0;
  for (const Complex& h : ch.coefficients) acc += std::abs(h);
  return acc;
}

double evaluate_gain(std::span<const Complex> weights, const PhasorChannel& ch) {
  if (weights.size() != ch.coefficients.size()) {
    throw Error(ErrorCode::BadParameter, "evaluate_gain: weight count does not match channel size");
  }
  Complex s{};
  for (std::size_t n = 0; n < weights.size(); ++n) s += weights[n] * ch.coefficients[n];
  return std::abs(s);
}

BeamformingSolution greedy_quantize(const PhasorChannel& ch, const FeasibleSet& set, const SolveOptions& opts) {
  check_channel(ch, "greedy_quantize");
  const int res = opts.resolution.value_or(kDefaultProjectResolution);
  std::vector<Complex> w;
  w.reserve(ch.size());
  for (const Complex& h : ch.coefficients) w.push_back(project(set, -std::arg(h), res));
  return make_solution(std::move(w), ch, SolveMethod::Greedy);
}

BeamformingSolution solve_angle_sweep(const PhasorChannel& ch, const FeasibleSet& set, const SolveOptions& opts) {
  check_channel(ch, "solve_angle_sweep");
  const ConvexPolygon hull = solver_hull(set, opts, "solve_angle_sweep");
  const auto assign = sweep_assignment(ch.coefficients, hull, std::max<std::size_t>(1, opts.recompute_interval));
  std::vector<Complex> w;
  w.reserve(ch.size());
  for (std::size_t k : assign) w.push_back(hull[k]);
  return make_solution(std::move(w), ch, SolveMethod::AngleSweep);
}

BeamformingSolution solve_minkowski(const PhasorChannel& ch, const FeasibleSet& set, const SolveOptions& opts) {
  check_channel(ch, "solve_minkowski");
  const ConvexPolygon hull = solver_hull(set, opts, "solve_minkowski");
  const std::size_t n_ant = ch.size();
  if (n_ant > opts.vertex_budget / hull.size()) {
    throw Error(ErrorCode::BudgetExceeded,
                "solve_minkowski: N * |V| = " + std::to_string(n_ant * hull.size()) + " exceeds the budget of " +
                    std::to_string(opts.vertex_budget));
  }

  // h * Conv W in canonical order, remembering which hull vertex each
  // summand vertex came from.
  auto summand = [&](Complex h, std::vector<Complex>& verts, std::vector<std::uint32_t>& origin) {
    verts.clear();
    origin.clear();
    if (h == Complex{}) {
      verts.push_back(Complex{});
      origin.push_back(0);
      return;
    }
    std::vector<Complex> scaled;
    scaled.reserve(hull.size());
    for (const Complex& v : hull.vertices()) scaled.push_back(v * h);
    for (std::size_t k : hull_indices(scaled)) {
      verts.push_back(scaled[k]);
      origin.push_back(static_cast<std::uint32_t>(k));
    }
  };

  struct Step {
    std::vector<std::uint32_t> prev;    // vertex of the running sum before this step
    std::vector<std::uint32_t> vertex;  // hull vertex chosen for this antenna
  };
  std::vector<Step> steps(n_ant);

  std::vector<Complex> acc;
  std::vector<std::uint32_t> origin;
  summand(ch.coefficients[0], acc, origin);
  steps[0].vertex = origin;

  std::vector<Complex> term;
  for (std::size_t n = 1; n < n_ant; ++n) {
    summand(ch.coefficients[n], term, origin);
    auto merged = detail::minkowski_merge(acc, term);
    Step& st = steps[n];
    st.prev.reserve(merged.vertices.size());
    st.vertex.reserve(merged.vertices.size());
    for (std::size_t k = 0; k < merged.vertices.size(); ++k) {
      st.prev.push_back(static_cast<std::uint32_t>(merged.source_a[k]));
      st.vertex.push_back(origin[merged.source_b[k]]);
    }
    acc = std::move(merged.vertices);
  }

  std::size_t cur = 0;
  double best = -1.0;
  for (std::size_t k = 0; k < acc.size(); ++k) {
    const double m = std::abs(acc[k]);
    if (m > best) {
      best = m;
      cur = k;
    }
  }

  std::vector<Complex> w(n_ant);
  for (std::size_t n = n_ant; n-- > 0;) {
    w[n] = hull[steps[n].vertex[cur]];
    if (n > 0) cur = steps[n].prev[cur];
  }
  return make_solution(std::move(w), ch, SolveMethod::Minkowski);
}

BeamformingSolution brute_force(const PhasorChannel& ch, const FeasibleSet& set, const SolveOptions& opts) {
  check_channel(ch, "brute_force");
  if (!set.is_discrete()) {
    throw Error(ErrorCode::ContinuousSetNotSupported, "brute_force: " + set.describe() + " cannot be enumerated");
  }
  const auto members = set.members();
  const std::size_t m = members.size();
  const std::size_t n_ant = ch.size();

  std::size_t total = 1;
  for (std::size_t n = 0; n < n_ant && m > 1; ++n) {
    if (total > opts.enumeration_budget / m) {
      throw Error(ErrorCode::TooLarge, "brute_force: |W|^N exceeds the enumeration budget of " +
                                           std::to_string(opts.enumeration_budget));
    }
    total *= m;
  }

  const auto& h = ch.coefficients;
  // Odometer over W^N; partial[n] holds sum_{i<n} w_i h_i.
  std::vector<std::size_t> idx(n_ant, 0);
  std::vector<Complex> partial(n_ant + 1);
  for (std::size_t n = 0; n < n_ant; ++n) partial[n + 1] = partial[n] + members[0] * h[n];

  std::vector<std::size_t> best_idx = idx;
  double best = std::abs(partial[n_ant]);
  while (m > 1) {
    std::size_t pos = n_ant;
    while (pos > 0 && idx[pos - 1] + 1 == m) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t n = pos; n < n_ant; ++n) idx[n] = 0;
    for (std::size_t n = pos - 1; n < n_ant; ++n) partial[n + 1] = partial[n] + members[idx[n]] * h[n];
    const double g = std::abs(partial[n_ant]);
    if (g > best) {
      best = g;
      best_idx = idx;
    }
  }

  std::vector<Complex> w;
  w.reserve(n_ant);
  for (std::size_t k : best_idx) w.push_back(members[k]);
  return make_solution(std::move(w), ch, SolveMethod::BruteForce);
}

BeamformingSolution ris_solve(const PhasorChannel& ch, int M, const SolveOptions& opts) {
  check_channel(ch, "ris_solve");
  const FeasibleSet set = FeasibleSet::regular(M);
  const Complex h0 = ch.direct.value_or(Complex{});

  BeamformingSolution sol;
  if (h0 == Complex{}) {
    sol = solve_angle_sweep(PhasorChannel{ch.coefficients, std::nullopt}, set, opts);
  } else {
    const auto members = set.members();
    const auto hull_to_member = hull_indices(members);
    const ConvexPolygon hull = to_polygon(set);

    std::vector<Complex> augmented;
    augmented.reserve(ch.size() + 1);
    augmented.push_back(h0);
    augmented.insert(augmented.end(), ch.coefficients.begin(), ch.coefficients.end());
    const auto assign = sweep_assignment(augmented, hull, std::max<std::size_t>(1, opts.recompute_interval));

    // W_M is a group, so w_n / w_0 is again a member: index k_n - k_0.
    const long long k0 = static_cast<long long>(hull_to_member[assign[0]]);
    std::vector<Complex> w;
    w.reserve(ch.size());
    for (std::size_t n = 1; n < assign.size(); ++n) {
      w.push_back(root_of_unity(static_cast<long long>(hull_to_member[assign[n]]) - k0, M));
    }
    sol.weights = std::move(w);
  }

  Complex s = h0;
  for (std::size_t n = 0; n < ch.size(); ++n) s += sol.weights[n] * ch.coefficients[n];
  sol.gain = std::abs(s);
  sol.ideal_gain = std::abs(h0) + ideal_gain(ch);
  sol.ratio = sol.ideal_gain > 0.0 ? sol.gain / sol.ideal_gain : 0.0;
  sol.method = SolveMethod::Ris;
  return sol;
}

BeamformingSolution ris_solve(const PhasorChannel& ch, const FeasibleSet& set, const SolveOptions& opts) {
  const auto* reg = std::get_if<RegularPolygonSet>(&set.variant());
  if (reg == nullptr) {
    throw Error(ErrorCode::NotAGroup,
                "ris_solve: direct-path reduction needs a regular M-gon, got " + set.describe());
  }
  return ris_solve(ch, reg->M, opts);
}

PhasorChannel worst_case_channel(int N) {
  if (N < 1) throw Error(ErrorCode::BadParameter, "worst_case_channel: N must be at least 1");
  PhasorChannel ch;
  ch.coefficients.reserve(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) ch.coefficients.push_back(root_of_unity(n, N));
  return ch;
}

PhasorChannel tightness_channel(int M, int N) {
  if (M < 2 || N < 1) throw Error(ErrorCode::BadParameter, "tightness_channel: need M >= 2 and N >= 1");
  const long long mn = static_cast<long long>(M) * N;
  PhasorChannel ch;
  ch.coefficients.reserve(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) ch.coefficients.push_back(root_of_unity(n, mn));
  return ch;
}

SubsetSelection onoff_subset_check(const PhasorChannel& ch, bool exhaustive) {
  check_channel(ch, "onoff_subset_check");
  const std::size_t n_ant = ch.size();
  const auto& h = ch.coefficients;
  SubsetSelection out;
  out.mask.assign(n_ant, false);

  if (exhaustive) {
    if (n_ant > 24) throw Error(ErrorCode::TooLarge, "onoff_subset_check: exhaustive search needs N <= 24");
    // Gray-code walk: one element enters or leaves per step.
    std::uint32_t gray = 0;
    std::uint32_t best_mask = 0;
    Complex s{};
    double best = 0.0;
    const std::uint32_t count = std::uint32_t{1} << n_ant;
    for (std::uint32_t i = 1; i < count; ++i) {
      const std::uint32_t next = i ^ (i >> 1);
      const std::uint32_t flipped = gray ^ next;
      const int bit = std::countr_zero(flipped);
      s += (next & flipped) ? h[bit] : -h[bit];
      gray = next;
      const double g = std::abs(s);
      if (g > best) {
        best = g;
        best_mask = gray;
      }
    }
    for (std::size_t n = 0; n < n_ant; ++n) out.mask[n] = (best_mask >> n) & 1u;
  } else {
    const ConvexPolygon hull = to_polygon(FeasibleSet::onoff());
    const auto assign = sweep_assignment(h, hull, 4096);
    for (std::size_t n = 0; n < n_ant; ++n) out.mask[n] = hull[assign[n]] != Complex{};
  }

  Complex s{};
  for (std::size_t n = 0; n < n_ant; ++n) {
    if (out.mask[n]) s += h[n];
  }
  out.gain = std::abs(s);
  const double ideal = ideal_gain(ch);
  out.ratio = ideal > 0.0 ? out.gain / ideal : 0.0;
  return out;
}

}  // namespace phasegain
