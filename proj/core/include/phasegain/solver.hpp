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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "phasegain/complex.hpp"
#include "phasegain/feasible_set.hpp"

namespace phasegain {

/// Channel coefficients h_1..h_N seen by an N-element array (or RIS), with an
/// optional direct path h_0 that bypasses the weights.
struct PhasorChannel {
  std::vector<Complex> coefficients;
  std::optional<Complex> direct;

  std::size_t size() const noexcept { return coefficients.size(); }
};

enum class SolveMethod { Greedy, AngleSweep, Minkowski, BruteForce, Ris };

std::string_view to_string(SolveMethod m) noexcept;

struct BeamformingSolution {
  std::vector<Complex> weights;
  double gain = 0.0;        // |h_0 + sum_n w_n h_n| (h_0 only for Ris)
  double ideal_gain = 0.0;  // sum_n |h_n| (plus |h_0| for Ris)
  double ratio = 0.0;       // gain / ideal_gain, 0 for an all-zero channel
  SolveMethod method = SolveMethod::AngleSweep;
};

struct SolveOptions {
  /// Boundary samples for continuous sets. Without it the exact solvers
  /// refuse continuous sets.
  std::optional<int> resolution;
  /// Cap on N * |hull vertices| for the Minkowski solver.
  std::size_t vertex_budget = 1'000'000;
  /// Cap on |W|^N for exhaustive enumeration.
  std::size_t enumeration_budget = 10'000'000;
  /// The sweep re-sums the combined signal from scratch this often.
  std::size_t recompute_interval = 4096;
};

/// sum_n |h_n|; the direct path is not included.
double ideal_gain(const PhasorChannel& ch);

/// |sum_n w_n h_n| over the coefficients (direct path ignored).
double evaluate_gain(std::span<const Complex> weights, const PhasorChannel& ch);

/// Rounds each ideal co-phasing weight e^{-j theta_n} to its best member of W.
BeamformingSolution greedy_quantize(const PhasorChannel& ch, const FeasibleSet& set,
                                    const SolveOptions& opts = {});

/// Exact optimum through the one-dimensional search over the common phase
/// reference theta: between consecutive breakpoints every antenna keeps the
/// same hull vertex, so the gain is evaluated once per arc.
BeamformingSolution solve_angle_sweep(const PhasorChannel& ch, const FeasibleSet& set,
                                      const SolveOptions& opts = {});

/// Exact optimum as the largest-modulus vertex of the Minkowski sum
/// h_1 Conv W + ... + h_N Conv W, with the weights read back from the
/// contributing vertices of every summand.
BeamformingSolution solve_minkowski(const PhasorChannel& ch, const FeasibleSet& set,
                                    const SolveOptions& opts = {});

/// Exhaustive search over W^N (discrete sets only).
BeamformingSolution brute_force(const PhasorChannel& ch, const FeasibleSet& set,
                                const SolveOptions& opts = {});

/// max over W_M^N of |h_0 + sum_n w_n h_n|, solved as an (N+1)-element
/// problem and renormalized so the direct path has coefficient 1.
BeamformingSolution ris_solve(const PhasorChannel& ch, int M, const SolveOptions& opts = {});

/// As above; throws NotAGroup unless `set` is a regular M-gon.
BeamformingSolution ris_solve(const PhasorChannel& ch, const FeasibleSet& set,
                              const SolveOptions& opts = {});

/// h_n = e^{j 2 pi n / N}, n = 1..N.
PhasorChannel worst_case_channel(int N);

/// h_n = e^{j 2 pi n / (M N)}, n = 1..N: equality case of the fixed-N bound
/// for W_M.
PhasorChannel tightness_channel(int M, int N);

struct SubsetSelection {
  std::vector<bool> mask;
  double gain = 0.0;
  double ratio = 0.0;
};

/// A subset S maximizing |sum_{n in S} h_n|, i.e. the optimum over {0,1}^N.
/// `exhaustive` enumerates all 2^N subsets (N <= 24); otherwise the angle
/// sweep is used.
SubsetSelection onoff_subset_check(const PhasorChannel& ch, bool exhaustive = false);

}  // namespace phasegain
