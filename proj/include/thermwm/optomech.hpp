// Copyright 2026 The thermwm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef THERMWM_OPTOMECH_HPP_
#define THERMWM_OPTOMECH_HPP_

#include <complex>
#include <cstddef>

#include "thermwm/fock.hpp"
#include "thermwm/thermal.hpp"

namespace thermwm {

/// Scheme 1 uses a phase shifter theta in the reference arm; scheme 2 starts
/// the mirror in a displaced thermal state with amplitude alpha.
enum class Scheme { kPhaseShifter = 1, kDisplacedMirror = 2 };

/// Single-photon optomechanics in units where the coupling is k = g / omega_m.
/// Times are in seconds; the dimensionless phase is omega_m t.
struct OptomechParams {
  double k = 0.005;
  double omega_m = 1.0;
  Thermal thermal;
  double theta = 0.0;
  Complex alpha{0.0, 0.0};
  double sigma = 1.0;

  /// Throws ConfigError unless k > 0, omega_m > 0 and sigma > 0.
  void validate() const;
};

struct SchemeKernel {
  /// k (1 - e^{-i omega_m t}).
  Complex xi;
  /// Kerr phase k^2 (omega_m t - sin omega_m t).
  double kerr;
  /// theta for scheme 1, 2 Im(alpha xi) for scheme 2.
  double omega;
  /// exp(-R |xi|^2 / 2 + i (kerr + omega)).
  Complex Phi;
  /// -ln|Phi| = R |xi|^2 / 2, kept to avoid recomputing 1 - |Phi|.
  double log_decay;
};

SchemeKernel kernel(double t, const OptomechParams& p, Scheme scheme);

struct DisplacementResult {
  double q_shift;
  double success_prob;
};

/// Exact postselected mirror displacement and success probability
/// (2 - Phi - Phi^*) / 4. For scheme 2 the shift is relative to the
/// freely rotating coherent displacement. Throws DegenerateError when
/// 2 - Phi - Phi^* underflows.
DisplacementResult mean_displacement(double t, const OptomechParams& p, Scheme scheme);

/// Scheme 2 shift measured from the initial mean position: the displaced-frame
/// shift plus 2 sigma (Re alpha(t) - Re alpha) with alpha(t) = alpha e^{-i omega_m t}.
double lab_frame_shift(double t, const OptomechParams& p);

/// Small-time rational forms. Scheme 1:
///   2 sigma theta k x R / (theta^2 + k^2 x^2 R),
/// scheme 2 with zeta = x^2 sin(beta) / 2 + x cos(beta):
///   4 sigma k^2 |alpha| zeta x R / (4 (k |alpha| zeta)^2 + k^2 x^2 R),
/// where x = omega_m t. Throws DegenerateError when the denominator vanishes.
double small_time_q(double t, const OptomechParams& p, Scheme scheme);

/// Scheme 1 small-time displacement of the n-th Fock component:
///   2 sigma theta k x (2n + 1) / (theta^2 + k^2 x^2 (2n + 1)).
double per_n_small_time_q(std::size_t n, double t, const OptomechParams& p);

/// Displacement without postselection, 2 k (1 - cos omega_m t) sigma.
double unamplified_displacement(double t, const OptomechParams& p);

enum class Frame { kDisplaced, kLab };

/// Mirror shift and success probability from an explicit Fock-space
/// construction of the postselected state. For scheme 2 in the lab frame the
/// coherent amplitude is evolved explicitly and the free rotation is removed
/// afterwards, so both frames report the same quantity.
DisplacementResult brute_force_moments(double t, const OptomechParams& p, Scheme scheme,
                                       const ModeSpace& space, Frame frame = Frame::kDisplaced);

/// Fock dimension adequate for brute_force_moments at any time.
std::size_t adequate_optomech_dimension(const OptomechParams& p, Scheme scheme, Frame frame);

}  // namespace thermwm

#endif  // THERMWM_OPTOMECH_HPP_
