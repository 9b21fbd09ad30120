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

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include <nlohmann/json.hpp>

#include "phasegain/bounds.hpp"
#include "phasegain/fading.hpp"
#include "phasegain/feasible_set.hpp"
#include "phasegain/solver.hpp"

namespace phasegain::io {

// Set descriptors:
//   {"type":"regular","M":4}
//   {"type":"onoff"}
//   {"type":"arc","phi_min":-1.0472,"phi_max":1.0472,"radius":1.0}
//   {"type":"circle","center":[0,0.5],"radius":0.5}
//   {"type":"ris","alpha":2.0,"beta":0.5}
//   {"type":"discrete","points":[[re,im],...]}
//   {"type":"polar","points":[[modulus,degrees],...]}   (read as discrete)
//   {"type":"samples","points":[[re,im],...]}
FeasibleSet set_from_json(const nlohmann::json& j);
FeasibleSet parse_set(std::string_view text);
nlohmann::json to_json(const FeasibleSet& set);

// Channel files. CSV: one "re,im" line per antenna, optionally preceded by
// "direct,re,im"; blank lines and lines starting with '#' are skipped.
// JSON: {"direct":[re,im], "h":[[re,im],...]} with "direct" optional.
PhasorChannel parse_channel_csv(std::istream& in);
PhasorChannel channel_from_json(const nlohmann::json& j);
PhasorChannel load_channel(const std::filesystem::path& path);
nlohmann::json to_json(const PhasorChannel& ch);

nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const BeamformingSolution& sol);
nlohmann::json to_json(const FadingRecord& rec);

/// Header "N,trial,gain,ideal_gain,ratio" followed by one line per row.
void write_rows_csv(std::ostream& out, std::span<const TrialRow> rows);

}  // namespace phasegain::io
