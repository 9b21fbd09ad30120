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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "phasegain/bounds.hpp"
#include "phasegain/error.hpp"
#include "phasegain/geometry.hpp"

using namespace phasegain;
using std::numbers::pi;

namespace {

void check_error(auto&& fn, ErrorCode code) {
  try {
    fn();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == code);
  }
}

double closed_form(int M) { return M / pi * std::sin(pi / M); }

FeasibleSet heptagon_set() {
  return FeasibleSet::discrete_polar(
      {{0.9, 10}, {0.75, 60}, {0.9, 100}, {0.9, 140}, {0.5, 175}, {0.8, 220}, {0.7, 260}, {0.8, 315}});
}

}  // namespace

TEST_CASE("best constants of the uniform phase shifters") {
  CHECK(std::abs(best_constant(FeasibleSet::regular(2)) - 2.0 / pi) < 1e-12);
  CHECK(std::abs(best_constant(FeasibleSet::regular(2)) - 0.63662) < 5e-6);
  CHECK(std::abs(best_constant(FeasibleSet::regular(4)) - 0.90032) < 5e-6);
  CHECK(std::abs(best_constant(FeasibleSet::regular(8)) - 0.97450) < 5e-6);
  CHECK(std::abs(best_constant(FeasibleSet::onoff()) - 1.0 / pi) < 1e-12);
  CHECK(std::abs(best_constant(FeasibleSet::onoff()) - 0.31831) < 5e-6);
  for (int M = 2; M <= 300; ++M) CHECK(std::abs(best_constant(FeasibleSet::regular(M)) - closed_form(M)) <= 1e-12);
}

TEST_CASE("shortfall in dB") {
  CHECK(std::abs(shortfall_db(FeasibleSet::regular(2)) + 3.92) < 0.005);
  CHECK(std::abs(shortfall_db(FeasibleSet::regular(4)) + 0.912) < 0.0005);
  CHECK(std::abs(shortfall_db(FeasibleSet::regular(8)) + 0.224) < 0.0005);
  CHECK(std::abs(shortfall_db(heptagon_set()) + 2.0) < 0.05);
  CHECK(std::abs(shortfall_db(FeasibleSet::arc(-pi, pi), 1 << 16)) < 1e-6);
  check_error([] { shortfall_db(FeasibleSet::discrete({{0.3, 0.3}})); }, ErrorCode::DegenerateSet);
}

TEST_CASE("crude constants") {
  CHECK(crude_constant(FeasibleSet::regular(4)) == doctest::Approx(std::cos(pi / 4)).epsilon(1e-14));
  CHECK(std::abs(crude_constant(FeasibleSet::onoff())) < 1e-15);
  CHECK(crude_constant(FeasibleSet::regular(6)) == doctest::Approx(0.8660254037844387).epsilon(1e-14));
  for (int M = 3; M <= 64; ++M) CHECK(crude_constant(FeasibleSet::regular(M)) == doctest::Approx(std::cos(pi / M)).epsilon(1e-13));
}

TEST_CASE("crude <= best <= 1 on random sets") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> n(1, 25);
  for (int trial = 0; trial < 300; ++trial) {
    const auto set = FeasibleSet::discrete(oracle::random_disk_points(rng, n(rng)));
    const double b = best_constant(set);
    CHECK(crude_constant(set) <= b + 1e-12);
    CHECK(b <= 1.0 + 1e-12);
    CHECK(b >= 0.0);
  }
}

TEST_CASE("refined constants") {
  CHECK(refined_constant(FeasibleSet::regular(2), 2) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  const double gap = 20 * std::log10(refined_constant(FeasibleSet::regular(2), 2) / best_constant(FeasibleSet::regular(2)));
  CHECK(std::abs(gap - 0.91) < 0.005);
  CHECK(refined_constant(FeasibleSet::regular(4), 1) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(refined_constant(FeasibleSet::regular(8), 1) == doctest::Approx(1.0).epsilon(1e-14));
  for (int M : {2, 3, 4, 8}) {
    double prev = refined_constant(FeasibleSet::regular(M), 1);
    for (int N = 2; N <= 200; ++N) {
      const double r = refined_constant(FeasibleSet::regular(M), N);
      CHECK(r <= prev + 1e-15);
      CHECK(r >= best_constant(FeasibleSet::regular(M)) - 1e-12);
      prev = r;
    }
    CHECK(std::abs(refined_constant(FeasibleSet::regular(M), 1 << 20) - closed_form(M)) < 1e-9);
  }
  // A segment counts as a two-vertex polygon.
  CHECK(refined_constant(FeasibleSet::onoff(), 2) == doctest::Approx(2.0 / (8 * std::sin(pi / 4))).epsilon(1e-14));
  // Seven hull vertices.
  const auto hept = heptagon_set();
  CHECK(refined_constant(hept, 3) == doctest::Approx(best_constant(hept) * 2 * pi / (2 * 7 * 3 * std::sin(pi / 21))).epsilon(1e-13));

  check_error([] { refined_constant(FeasibleSet::arc(0, 1), 2); }, ErrorCode::NotPolygon);
  check_error([] { refined_constant(FeasibleSet::regular(4), 0); }, ErrorCode::BadParameter);
  check_error([] { refined_constant(FeasibleSet::regular(1), 3); }, ErrorCode::DegenerateSet);
}

TEST_CASE("asymptotic expansions") {
  const auto a = asymptotic_constants(64);
  CHECK(std::abs(a.best_expansion - closed_form(64)) < 1e-5);
  CHECK(std::abs(a.crude_expansion - std::cos(pi / 64)) < 1e-5);
  const auto big = asymptotic_constants(1 << 20);
  CHECK(big.best_expansion == doctest::Approx(1.0));
  CHECK(big.crude_expansion == doctest::Approx(1.0));
  CHECK(a.crude_expansion < a.best_expansion);

  const int M = 256;
  const double ratio = (1 - std::cos(pi / M)) / (1 - closed_form(M));
  CHECK(std::abs(ratio - 3.0) < 0.03);
  CHECK((1 - a.crude_expansion) / (1 - a.best_expansion) == doctest::Approx(3.0));
  check_error([] { asymptotic_constants(1); }, ErrorCode::BadParameter);
}

TEST_CASE("onoff small-N constants") {
  CHECK(onoff_small_n_constant(2) == 0.5);
  CHECK(onoff_small_n_constant(3) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  check_error([] { onoff_small_n_constant(4); }, ErrorCode::Unsupported);
  check_error([] { onoff_small_n_constant(1); }, ErrorCode::Unsupported);
}

TEST_CASE("analyze bundles the constants") {
  const auto r = analyze(FeasibleSet::regular(4), 1);
  CHECK(r.perimeter == doctest::Approx(4 * std::sqrt(2.0)));
  CHECK(std::abs(r.best_constant - r.perimeter / (2 * pi)) < 1e-12);
  REQUIRE(r.shortfall_db.has_value());
  CHECK(std::abs(*r.shortfall_db + 0.912) < 0.0005);
  CHECK(r.crude_constant <= r.best_constant);
  REQUIRE(r.refined_constant.has_value());
  CHECK(*r.refined_constant == doctest::Approx(1.0));
  CHECK(r.refined_n == 1);
  CHECK(r.hull_vertex_count == 4);
  CHECK(r.hull_vertices.size() == 4);

  const auto hept = analyze(heptagon_set());
  CHECK(hept.hull_vertex_count == 7);
  CHECK(std::abs(hept.perimeter - 5.01) <= 0.01);
  CHECK(std::abs(hept.best_constant - 0.80) < 0.005);
  CHECK_FALSE(hept.refined_constant.has_value());

  const auto point = analyze(FeasibleSet::discrete({{0.2, 0.1}}));
  CHECK_FALSE(point.shortfall_db.has_value());
  CHECK(point.best_constant == 0.0);

  // Continuous sets have no refined constant even when N is given.
  const auto arc = analyze(FeasibleSet::arc(-1, 1), 4);
  CHECK_FALSE(arc.refined_constant.has_value());
}
