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

#include "phasegain/bounds.hpp"
#include "phasegain/complex.hpp"
#include "phasegain/error.hpp"
#include "phasegain/fading.hpp"
#include "phasegain/feasible_set.hpp"
#include "phasegain/geometry.hpp"
#include "phasegain/io.hpp"
#include "phasegain/solver.hpp"
