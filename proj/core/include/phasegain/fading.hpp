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

#include <cstdint>
#include <map>
#include <vector>

#include "phasegain/feasible_set.hpp"
#include "phasegain/solver.hpp"

namespace phasegain {

enum class FadingDistribution {
  ComplexGaussian,              // CN(0, variance): Rayleigh modulus
  ConstantModulusUniformPhase,  // e^{j U[0, 2pi)}
};

struct FadingConfig {
  FadingDistribution distribution = FadingDistribution::ComplexGaussian;
  /// E|h|^2 for the Gaussian model.
  double variance = 1.0;
  std::vector<int> n_list;
  int trials = 1;
  std::uint64_t seed = 0;
  FeasibleSet set = FeasibleSet::regular(4);
  /// Boundary samples when `set` is continuous.
  int resolution = kDefaultResolution;
};

struct FadingRecord {
  int N = 0;
  double mean_normalized_gain = 0.0;  // mean of g_W / N
  double std_normalized_gain = 0.0;   // sample standard deviation of g_W / N
  double target = 0.0;                // E|h| * best_constant
  double mean_ratio_to_ideal = 0.0;   // mean of g_W / g_ideal
  std::map<int, double> p_norm_estimates;  // p -> mean of (g_W / N)^p, p in {1, 2}
};

struct TrialRow {
  int N = 0;
  int trial = 0;
  double gain = 0.0;
  double ideal_gain = 0.0;
  double ratio = 0.0;
};

struct FadingResult {
  std::vector<FadingRecord> records;
  std::vector<TrialRow> rows;  // ordered by (N, trial)
};

/// Throws BadParameter when trials < 1, n_list is empty or not strictly
/// increasing, or a size is below 1.
void validate(const FadingConfig& cfg);

/// N i.i.d. draws. The stream is a function of (seed, N, trial) only, so the
/// same channel comes back regardless of which thread asks for it.
PhasorChannel sample_channel(const FadingConfig& cfg, int N, int trial);

/// E|h| of the configured distribution.
double expected_modulus(const FadingConfig& cfg);

/// For every N in n_list, solves `trials` independent channels with the
/// angle sweep on `workers` threads and aggregates g_W / N in trial order.
/// A failing solve is rethrown with its (N, trial) in the message.
FadingResult convergence_experiment(const FadingConfig& cfg, unsigned workers = 1);

}  // namespace phasegain
