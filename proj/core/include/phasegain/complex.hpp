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

#include <cmath>
#include <complex>

namespace phasegain {

using Complex = std::complex<double>;

/// Real inner product of the complex plane viewed as R^2: Re(conj(z) * w).
inline double inner(Complex z, Complex w) noexcept {
  return z.real() * w.real() + z.imag() * w.imag();
}

/// z x w, the signed area of the parallelogram spanned by z and w.
inline double cross(Complex z, Complex w) noexcept {
  return z.real() * w.imag() - z.imag() * w.real();
}

inline Complex unit_phasor(double theta) noexcept {
  return {std::cos(theta), std::sin(theta)};
}

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace phasegain
