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

#ifndef THERMWM_DISSIPATION_HPP_
#define THERMWM_DISSIPATION_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "thermwm/fock.hpp"
#include "thermwm/optomech.hpp"

namespace thermwm {

/// Mirror damping gamma = gamma_m / omega_m on top of the closed-system model.
struct DissipationParams {
  double gamma = 0.0;
  OptomechParams base;

  /// Throws ConfigError unless gamma >= 0, k >= 0, omega_m > 0, sigma > 0.
  void validate() const;
};

/// Density matrix on (photon path {|A>, |B>}) x (mirror Fock space), stored as
/// a 2N x 2N matrix with the photon index outermost.
class JointState {
 public:
  /// Throws ConfigError when the matrix is not 2N x 2N.
  JointState(ModeSpace mirror, Matrix rho);

  const ModeSpace& mirror() const { return mirror_; }
  const Matrix& matrix() const { return rho_; }
  /// Mirror block <i| rho |j> for photon paths i, j in {0 = A, 1 = B}.
  Matrix block(int i, int j) const;
  double trace() const { return rho_.trace().real(); }
  /// Smallest eigenvalue of the Hermitian part.
  double min_eigenvalue() const;

 private:
  ModeSpace mirror_;
  Matrix rho_;
};

/// Photon state (e^{i theta}|A> + |B>)/sqrt(2) times the mirror's thermal state
/// (scheme 1), or (|A> + |B>)/sqrt(2) times the displaced thermal state with
/// amplitude alpha (scheme 2).
JointState initial_joint_state(const DissipationParams& dp, Scheme scheme, const ModeSpace& mirror);

struct IntegratorOptions {
  double rtol = 1e-11;
  double atol = 1e-15;
  /// Smallest step, in units of 1/omega_m, before StiffnessError is raised.
  double min_step = 1e-13;
  std::size_t max_steps = 5'000'000;
};

struct Evolution {
  JointState state;
  /// state - rho0, integrated directly so small changes keep full precision.
  Matrix deviation;
  /// |Tr(state) - Tr(rho0)|.
  double trace_drift;
  std::size_t accepted_steps;
  std::size_t rejected_steps;
};

/// Integrates d rho / dt = -i [H, rho] + gamma_m/(1-z) D[c] rho + gamma_m z/(1-z) D[c^dag] rho
/// with H / omega_m = c^dag c - k |A><A| (c + c^dag), using adaptive
/// Dormand-Prince 5(4) steps that land exactly on t.
Evolution lindblad_step_integrate(const JointState& rho0, double t, const DissipationParams& dp,
                                  const IntegratorOptions& options = {});

/// One integration reporting the state at each of the increasing times.
std::vector<Evolution> lindblad_integrate(const JointState& rho0, std::span<const double> times,
                                          const DissipationParams& dp,
                                          const IntegratorOptions& options = {});

/// Second-order small-time solution for scheme 1 with damping, x = omega_m t:
///   sigma [2 R k x sin(theta) + k x^2 (1 - cos(theta)) - (gamma/2) R k x^2 sin(theta)]
///   / [2 - 2 cos(theta) + R k^2 x^2 cos(theta)].
double taylor_q_scheme1(double t, const DissipationParams& dp);

/// Third-order small-time solution for scheme 2 with a = |alpha| cos(beta):
///   sigma { [3 R a + 4 a^3 - (5/3) R gamma x a - 3 gamma x a^3]
///         / [R/2 + 2 a^2 - gamma x a^2 - R gamma x / 12] - 2 a },
/// measured from the initial mean position. Throws DegenerateError when a = 0
/// or t = 0.
double taylor_q_scheme2(double t, const DissipationParams& dp);

/// Integrates the master equation, projects the photon onto (|A> - |B>)/sqrt(2)
/// and returns the mirror shift from its initial mean position together with
/// the projection probability.
DisplacementResult postselected_q_from_master(double t, const DissipationParams& dp,
                                              Scheme scheme, const ModeSpace& mirror,
                                              const IntegratorOptions& options = {});

/// Same, for several increasing times in one integration.
std::vector<DisplacementResult> postselected_q_from_master(std::span<const double> times,
                                                           const DissipationParams& dp,
                                                           Scheme scheme, const ModeSpace& mirror,
                                                           const IntegratorOptions& options = {});

}  // namespace thermwm

#endif  // THERMWM_DISSIPATION_HPP_
