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

#include "phasegain/error.hpp"

namespace phasegain {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::EmptyPolygon: return "EmptyPolygon";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::DegenerateSet: return "DegenerateSet";
    case ErrorCode::NotPolygon: return "NotPolygon";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ContinuousSetNotSupported: return "ContinuousSetNotSupported";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace phasegain
