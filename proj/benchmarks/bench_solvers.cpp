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

#include <benchmark/benchmark.h>

#include <complex>
#include <numbers>
#include <random>

#include "phasegain/phasegain.hpp"

using namespace phasegain;

namespace {

PhasorChannel gaussian(std::size_t n, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  PhasorChannel ch;
  ch.coefficients.resize(n);
  for (auto& h : ch.coefficients) h = {g(rng), g(rng)};
  return ch;
}

std::vector<Complex> disk_points(std::size_t n, std::uint64_t seed = 2) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Complex> pts(n);
  for (auto& p : pts) p = std::polar(std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng));
  return pts;
}

void BM_AngleSweep(benchmark::State& state) {
  const auto ch = gaussian(static_cast<std::size_t>(state.range(0)));
  const auto set = FeasibleSet::regular(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_angle_sweep(ch, set).gain);
  state.SetComplexityN(state.range(0) * state.range(1));
}
BENCHMARK(BM_AngleSweep)->ArgsProduct({{64, 512, 4096, 32768}, {2, 4, 16}})->Complexity(benchmark::oNLogN);

void BM_Minkowski(benchmark::State& state) {
  const auto ch = gaussian(static_cast<std::size_t>(state.range(0)));
  const auto set = FeasibleSet::regular(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_minkowski(ch, set).gain);
}
BENCHMARK(BM_Minkowski)->ArgsProduct({{16, 64, 256}, {4, 16}});

void BM_BruteForce(benchmark::State& state) {
  const auto ch = gaussian(static_cast<std::size_t>(state.range(0)));
  const auto set = FeasibleSet::regular(4);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force(ch, set).gain);
}
BENCHMARK(BM_BruteForce)->DenseRange(4, 10, 2);

void BM_Greedy(benchmark::State& state) {
  const auto ch = gaussian(static_cast<std::size_t>(state.range(0)));
  const auto set = FeasibleSet::regular(4);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_quantize(ch, set).gain);
}
BENCHMARK(BM_Greedy)->Arg(4096);

void BM_ConvexHull(benchmark::State& state) {
  const auto pts = disk_points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(pts).size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvexHull)->RangeMultiplier(8)->Range(64, 1 << 18)->Complexity(benchmark::oNLogN);

void BM_MinkowskiSum(benchmark::State& state) {
  const auto a = to_polygon(FeasibleSet::regular(static_cast<int>(state.range(0))));
  const auto b = scale_rotate(to_polygon(FeasibleSet::samples(disk_points(static_cast<std::size_t>(state.range(0))))),
                              Complex{0.3, 0.8});
  for (auto _ : state) benchmark::DoNotOptimize(minkowski_sum(a, b).size());
}
BENCHMARK(BM_MinkowskiSum)->RangeMultiplier(8)->Range(8, 1 << 15);

void BM_FadingTrial(benchmark::State& state) {
  FadingConfig cfg;
  cfg.n_list = {static_cast<int>(state.range(0))};
  cfg.trials = 8;
  for (auto _ : state) benchmark::DoNotOptimize(convergence_experiment(cfg, 1).records.size());
}
BENCHMARK(BM_FadingTrial)->Arg(4096)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
