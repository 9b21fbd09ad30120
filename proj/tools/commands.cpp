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

#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "phasegain/bounds.hpp"
#include "phasegain/error.hpp"
#include "phasegain/fading.hpp"
#include "phasegain/io.hpp"

namespace phasegain::cli {

namespace {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded:
    case ErrorCode::TooLarge:
      return kExitBudgetError;
    default:
      return kExitInputError;
  }
}

CommandResult failure(int exit_code, std::string_view kind, const std::string& message) {
  return {exit_code, json{{"error", std::string(kind)}, {"message", message}}, std::nullopt};
}

template <class F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return failure(exit_code_for(e.code()), to_string(e.code()), e.what());
  } catch (const json::exception& e) {
    return failure(kExitInputError, "ParseError", e.what());
  }
}

// A set spec is inline JSON when it starts with '{', otherwise a file path.
FeasibleSet load_set(const std::string& spec) {
  const auto first = spec.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && spec[first] == '{') return io::parse_set(spec);
  std::ifstream in(spec);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open set descriptor file '" + spec + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return io::parse_set(buf.str());
}

bool polygonal(const FeasibleSet& set) {
  return set.is_discrete() || std::holds_alternative<SampledSet>(set.variant());
}

}  // namespace

SolveOptions solver_limits_from_environment() {
  SolveOptions opts;
  if (const char* env = std::getenv("PHASEGAIN_BUDGET"); env != nullptr && *env != '\0') {
    std::size_t v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0) {
      throw Error(ErrorCode::BadParameter, "PHASEGAIN_BUDGET must be a positive integer");
    }
    opts.vertex_budget = v;
    opts.enumeration_budget = v;
  }
  return opts;
}

CommandResult cmd_analyze(const AnalyzeOptions& opts) {
  return guarded([&] {
    const FeasibleSet set = load_set(opts.set_spec);
    const BoundReport report = analyze(set, opts.n, opts.resolution);
    json payload = io::to_json(report);
    payload["set"] = io::to_json(set);
    return CommandResult{kExitOk, payload, std::nullopt};
  });
}

CommandResult cmd_solve(const SolveCommandOptions& opts) {
  return guarded([&]() -> CommandResult {
    const FeasibleSet set = load_set(opts.set_spec);
    const PhasorChannel ch = io::load_channel(opts.channel_file);
    SolveOptions limits = solver_limits_from_environment();
    if (!polygonal(set)) limits.resolution = opts.resolution;

    const bool has_direct = ch.direct.has_value();
    std::string method = opts.method;
    std::optional<std::string> warning;
    if (method == "auto") {
      if (has_direct) {
        method = "ris";
      } else if (polygonal(set)) {
        method = "sweep";
      } else {
        method = "greedy";
        warning = "continuous set: greedy per-antenna rounding, not the exact optimum";
      }
    }
    if (has_direct && method != "ris") {
      return failure(kExitInputError, "BadParameter", "channel has a direct path; use --method ris or auto");
    }

    BeamformingSolution sol;
    if (method == "greedy") {
      sol = greedy_quantize(ch, set, limits);
    } else if (method == "sweep") {
      sol = solve_angle_sweep(ch, set, limits);
    } else if (method == "minkowski") {
      sol = solve_minkowski(ch, set, limits);
    } else if (method == "oracle") {
      sol = brute_force(ch, set, limits);
    } else if (method == "ris") {
      sol = ris_solve(ch, set, limits);
    } else {
      return failure(kExitInputError, "BadParameter", "unknown method '" + method + "'");
    }

    const double c = best_constant(set, opts.resolution);
    json payload = io::to_json(sol);
    payload["set"] = io::to_json(set);
    payload["best_constant"] = c;
    payload["guaranteed_gain"] = c * sol.ideal_gain;
    if (warning) payload["warning"] = *warning;
    return CommandResult{kExitOk, payload, std::nullopt};
  });
}

CommandResult cmd_worst_case(const WorstCaseOptions& opts) {
  return guarded([&]() -> CommandResult {
    const FeasibleSet set = load_set(opts.set_spec);
    if (!set.is_discrete()) {
      return failure(kExitInputError, "ContinuousSetNotSupported",
                     "worst-case needs a discrete set, got " + set.describe());
    }
    const PhasorChannel ch = opts.tight ? tightness_channel(*opts.tight, opts.n) : worst_case_channel(opts.n);
    const BeamformingSolution sol = solve_angle_sweep(ch, set, solver_limits_from_environment());

    json payload{
        {"set", io::to_json(set)},
        {"n", opts.n},
        {"channel", opts.tight ? "tightness" : "worst_case"},
        {"solution", io::to_json(sol)},
        {"ratio", sol.ratio},
        {"best_constant", best_constant(set)},
    };
    if (opts.tight) payload["tight_m"] = *opts.tight;
    if (to_polygon(set).size() >= 2) payload["refined_constant"] = refined_constant(set, opts.n);
    return CommandResult{kExitOk, payload, std::nullopt};
  });
}

CommandResult cmd_fading(const FadingCommandOptions& opts) {
  return guarded([&]() -> CommandResult {
    FadingConfig cfg;
    cfg.set = load_set(opts.set_spec);
    if (opts.distribution == "gaussian") {
      cfg.distribution = FadingDistribution::ComplexGaussian;
    } else if (opts.distribution == "constant") {
      cfg.distribution = FadingDistribution::ConstantModulusUniformPhase;
    } else {
      return failure(kExitInputError, "BadParameter", "unknown distribution '" + opts.distribution + "'");
    }
    cfg.variance = opts.variance;
    cfg.n_list = opts.n_list;
    cfg.trials = opts.trials;
    cfg.seed = opts.seed;
    cfg.resolution = opts.resolution;

    const FadingResult result = convergence_experiment(cfg, opts.workers);

    json records = json::array();
    for (const FadingRecord& r : result.records) records.push_back(io::to_json(r));
    json payload{
        {"set", io::to_json(cfg.set)},
        {"distribution", opts.distribution},
        {"trials", opts.trials},
        {"seed", opts.seed},
        {"expected_modulus", expected_modulus(cfg)},
        {"best_constant", best_constant(cfg.set, cfg.resolution)},
        {"records", records},
    };

    if (!opts.rows_path.empty()) {
      std::ofstream out(opts.rows_path);
      if (!out) return failure(kExitInputError, "ParseError", "cannot write " + opts.rows_path);
      io::write_rows_csv(out, result.rows);
    }
    std::optional<std::string> text;
    if (opts.csv) {
      std::ostringstream os;
      io::write_rows_csv(os, result.rows);
      text = os.str();
    }
    return CommandResult{kExitOk, payload, text};
  });
}

CommandResult cmd_oracle_compare(const OracleCompareOptions& opts) {
  return guarded([&]() -> CommandResult {
    if (opts.instances < 1 || opts.max_n < 1 || opts.max_w < 1) {
      return failure(kExitInputError, "BadParameter", "instances, max-n and max-w must be positive");
    }
    const SolveOptions limits = solver_limits_from_environment();
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> pick_n(1, opts.max_n);
    std::uniform_int_distribution<int> pick_w(1, opts.max_w);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));

    double max_dev = 0.0;
    int violations = 0;
    for (int i = 0; i < opts.instances; ++i) {
      std::vector<Complex> pts(static_cast<std::size_t>(pick_w(rng)));
      for (Complex& p : pts) p = std::polar(std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
      const FeasibleSet set = FeasibleSet::discrete(pts);
      PhasorChannel ch;
      ch.coefficients.resize(static_cast<std::size_t>(pick_n(rng)));
      for (Complex& h : ch.coefficients) h = {normal(rng), normal(rng)};

      const double g_sweep = solve_angle_sweep(ch, set, limits).gain;
      const double g_mink = solve_minkowski(ch, set, limits).gain;
      const double g_brute = brute_force(ch, set, limits).gain;
      const double scale = std::max(g_brute, 1e-300);
      max_dev = std::max({max_dev, std::abs(g_sweep - g_brute) / scale, std::abs(g_mink - g_brute) / scale});
      if (g_brute < best_constant(set) * ideal_gain(ch) - 1e-9) ++violations;
    }
    json payload{
        {"instances", opts.instances},
        {"max_relative_deviation", max_dev},
        {"bound_violations", violations},
        {"pass", max_dev <= 1e-9 && violations == 0},
    };
    return CommandResult{kExitOk, payload, std::nullopt};
  });
}

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Beamforming gain with nonideal phase shifters", "phasegain"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opts;
  auto* analyze_cmd = app.add_subcommand("analyze", "Shortfall constants of a feasible set");
  analyze_cmd->add_option("--set", analyze_opts.set_spec, "Set descriptor (inline JSON or file)")->required();
  analyze_cmd->add_option("--n", analyze_opts.n, "Array size for the fixed-N constant");
  analyze_cmd->add_option("--resolution", analyze_opts.resolution, "Samples for continuous sets");

  SolveCommandOptions solve_opts;
  auto* solve_cmd = app.add_subcommand("solve", "Optimize the weights for one channel");
  solve_cmd->add_option("--set", solve_opts.set_spec, "Set descriptor (inline JSON or file)")->required();
  solve_cmd->add_option("--channel", solve_opts.channel_file, "Channel file (CSV or JSON)")->required();
  solve_cmd->add_option("--method", solve_opts.method, "auto|greedy|sweep|minkowski|oracle|ris")
      ->check(CLI::IsMember({"auto", "greedy", "sweep", "minkowski", "oracle", "ris"}));
  solve_cmd->add_option("--resolution", solve_opts.resolution, "Samples for continuous sets");

  WorstCaseOptions wc_opts;
  auto* wc_cmd = app.add_subcommand("worst-case", "Solve on the worst-case (or tightness) channel");
  wc_cmd->add_option("--set", wc_opts.set_spec, "Set descriptor (inline JSON or file)")->required();
  wc_cmd->add_option("--n", wc_opts.n, "Array size")->required()->check(CLI::PositiveNumber);
  wc_cmd->add_option("--tight", wc_opts.tight, "Use the fixed-N tightness channel for W_M with this M");

  FadingCommandOptions fading_opts;
  std::string n_list_text;
  auto* fading_cmd = app.add_subcommand("fading", "Monte Carlo hardening experiment");
  fading_cmd->add_option("--set", fading_opts.set_spec, "Set descriptor (inline JSON or file)")->required();
  fading_cmd->add_option("--dist", fading_opts.distribution, "gaussian|constant")
      ->check(CLI::IsMember({"gaussian", "constant"}));
  fading_cmd->add_option("--n-list", fading_opts.n_list, "Array sizes, e.g. 256,1024,4096")
      ->required()
      ->delimiter(',');
  fading_cmd->add_option("--trials", fading_opts.trials, "Channels per array size");
  fading_cmd->add_option("--seed", fading_opts.seed, "Random seed");
  fading_cmd->add_option("--workers", fading_opts.workers, "Worker threads");
  fading_cmd->add_option("--variance", fading_opts.variance, "E|h|^2 for the Gaussian model");
  fading_cmd->add_option("--resolution", fading_opts.resolution, "Samples for continuous sets");
  fading_cmd->add_flag("--csv", fading_opts.csv, "Print per-trial rows as CSV instead of JSON");
  fading_cmd->add_option("--rows", fading_opts.rows_path, "Also write per-trial rows to this CSV file");

  OracleCompareOptions oc_opts;
  auto* oc_cmd = app.add_subcommand("oracle-compare", "Sweep vs Minkowski vs brute force on random instances");
  oc_cmd->add_option("--instances", oc_opts.instances, "Number of random instances");
  oc_cmd->add_option("--max-n", oc_opts.max_n, "Largest array size");
  oc_cmd->add_option("--max-w", oc_opts.max_w, "Largest feasible-set size");
  oc_cmd->add_option("--seed", oc_opts.seed, "Random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {kExitOk, json::object(), app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {kExitOk, json::object(), app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    return failure(kExitInputError, "UsageError", e.what());
  }

  if (analyze_cmd->parsed()) return cmd_analyze(analyze_opts);
  if (solve_cmd->parsed()) return cmd_solve(solve_opts);
  if (wc_cmd->parsed()) return cmd_worst_case(wc_opts);
  if (fading_cmd->parsed()) return cmd_fading(fading_opts);
  return cmd_oracle_compare(oc_opts);
}

}  // namespace phasegain::cli
