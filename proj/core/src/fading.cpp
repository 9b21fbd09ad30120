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

#include "phasegain/fading.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <random>
#include <string>
#include <thread>

#include "phasegain/bounds.hpp"
#include "phasegain/error.hpp"

namespace phasegain {

void validate(const FadingConfig& cfg) {
  if (cfg.trials < 1) throw Error(ErrorCode::BadParameter, "fading: trials must be at least 1");
  if (cfg.n_list.empty()) throw Error(ErrorCode::BadParameter, "fading: n_list is empty");
  if (cfg.n_list.front() < 1) throw Error(ErrorCode::BadParameter, "fading: array sizes must be positive");
  for (std::size_t i = 1; i < cfg.n_list.size(); ++i) {
    if (cfg.n_list[i] <= cfg.n_list[i - 1]) {
      throw Error(ErrorCode::BadParameter, "fading: n_list must be strictly increasing");
    }
  }
  if (!(cfg.variance > 0.0) || !std::isfinite(cfg.variance)) {
    throw Error(ErrorCode::BadParameter, "fading: variance must be positive");
  }
}

PhasorChannel sample_channel(const FadingConfig& cfg, int N, int trial) {
  if (N < 0) throw Error(ErrorCode::BadParameter, "sample_channel: negative size");
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(N), static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(cfg.distribution)};
  std::mt19937_64 rng(seq);

  PhasorChannel ch;
  ch.coefficients.reserve(static_cast<std::size_t>(N));
  if (cfg.distribution == FadingDistribution::ComplexGaussian) {
    std::normal_distribution<double> normal(0.0, std::sqrt(cfg.variance / 2.0));
    for (int n = 0; n < N; ++n) {
      const double re = normal(rng);
      const double im = normal(rng);
      ch.coefficients.emplace_back(re, im);
    }
  } else {
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    for (int n = 0; n < N; ++n) ch.coefficients.push_back(unit_phasor(phase(rng)));
  }
  return ch;
}

double expected_modulus(const FadingConfig& cfg) {
  switch (cfg.distribution) {
    case FadingDistribution::ComplexGaussian:
      // Rayleigh with E|h|^2 = variance.
      return std::sqrt(cfg.variance) * std::sqrt(std::numbers::pi) / 2.0;
    case FadingDistribution::ConstantModulusUniformPhase:
      return 1.0;
  }
  return 0.0;
}

FadingResult convergence_experiment(const FadingConfig& cfg, unsigned workers) {
  validate(cfg);
  const double c = best_constant(cfg.set, cfg.resolution);
  const double target = expected_modulus(cfg) * c;

  SolveOptions opts;
  if (!cfg.set.is_discrete()) opts.resolution = cfg.resolution;

  const std::size_t trials = static_cast<std::size_t>(cfg.trials);
  const std::size_t total = cfg.n_list.size() * trials;
  FadingResult out;
  out.rows.resize(total);

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&] {
    for (std::size_t job = next++; job < total && !failed; job = next++) {
      const int N = cfg.n_list[job / trials];
      const int trial = static_cast<int>(job % trials);
      try {
        const PhasorChannel ch = sample_channel(cfg, N, trial);
        const BeamformingSolution sol = solve_angle_sweep(ch, cfg.set, opts);
        out.rows[job] = {N, trial, sol.gain, sol.ideal_gain, sol.ratio};
      } catch (const Error& e) {
        std::lock_guard lock(error_mutex);
        if (!failed.exchange(true)) {
          error = std::make_exception_ptr(Error(e.code(), "fading: N=" + std::to_string(N) +
                                                              " trial=" + std::to_string(trial) + ": " + e.what()));
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };

  const unsigned n_threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(total)));
  if (n_threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);

  for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
    const int N = cfg.n_list[i];
    FadingRecord rec;
    rec.N = N;
    rec.target = target;
    double sum = 0.0;
    double sum_sq = 0.0;
    double ratio_sum = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      const TrialRow& row = out.rows[i * trials + t];
      const double x = row.gain / N;
      sum += x;
      sum_sq += x * x;
      ratio_sum += row.ratio;
    }
    const double n = static_cast<double>(trials);
    rec.mean_normalized_gain = sum / n;
    rec.mean_ratio_to_ideal = ratio_sum / n;
    rec.p_norm_estimates[1] = sum / n;
    rec.p_norm_estimates[2] = sum_sq / n;
    if (trials > 1) {
      double ss = 0.0;
      for (std::size_t t = 0; t < trials; ++t) {
        const double d = out.rows[i * trials + t].gain / N - rec.mean_normalized_gain;
        ss += d * d;
      }
      rec.std_normalized_gain = std::sqrt(ss / (n - 1.0));
    }
    out.records.push_back(rec);
  }
  return out;
}

}  // namespace phasegain
