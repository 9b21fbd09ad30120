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

#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = phasegain::cli::run(args);
  if (result.text) {
    std::cout << *result.text;
  } else {
    std::cout << result.payload.dump(2) << '\n';
  }
  if (result.exit_code != phasegain::cli::kExitOk && result.payload.contains("message")) {
    std::cerr << "phasegain: " << result.payload["message"].get<std::string>() << '\n';
  }
  return result.exit_code;
}
