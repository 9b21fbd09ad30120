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
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "phasegain/solver.hpp"

namespace phasegain::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitBudgetError = 2;

struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json payload;
  /// Tabular output, set when a command was asked for CSV instead of JSON.
  std::optional<std::string> text;
};

struct AnalyzeOptions {
  std::string set_spec;
  std::optional<int> n;
  int resolution = kDefaultResolution;
};

struct SolveCommandOptions {
  std::string set_spec;
  std::string channel_file;
  std::string method = "auto";
  int resolution = kDefaultResolution;
};

struct WorstCaseOptions {
  std::string set_spec;
  int n = 1;
  std::optional<int> tight;
};

struct FadingCommandOptions {
  std::string set_spec;
  std::string distribution = "gaussian";
  std::vector<int> n_list;
  int trials = 64;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  double variance = 1.0;
  int resolution = kDefaultResolution;
  bool csv = false;
  std::string rows_path;
};

struct OracleCompareOptions {
  int instances = 200;
  int max_n = 6;
  int max_w = 5;
  std::uint64_t seed = 1;
};

/// Solver caps, overridden by PHASEGAIN_BUDGET when it is set.
SolveOptions solver_limits_from_environment();

CommandResult cmd_analyze(const AnalyzeOptions& opts);
CommandResult cmd_solve(const SolveCommandOptions& opts);
CommandResult cmd_worst_case(const WorstCaseOptions& opts);
CommandResult cmd_fading(const FadingCommandOptions& opts);
CommandResult cmd_oracle_compare(const OracleCompareOptions& opts);

/// Parses `args` (without the program name) and dispatches to a subcommand.
/// Library errors never escape; they become exit code 1 or 2 with an
/// {"error": ..., "message": ...} payload.
CommandResult run(const std::vector<std::string>& args);

}  // namespace phasegain::cli
