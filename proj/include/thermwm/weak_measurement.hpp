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

#ifndef THERMWM_WEAK_MEASUREMENT_HPP_
#define THERMWM_WEAK_MEASUREMENT_HPP_

#include <complex>
#include <optional>

#include "thermwm/fock.hpp"
#include "thermwm/thermal.hpp"

namespace thermwm {

/// Two-level system A with eigenvalues a1, a2 coupled to a pointer through
/// H = chi A q, pre-selected in cos(theta_i)|a1> + sin(theta_i)|a2> and
/// postselected on cos(theta_f)|a1> + e^{i phi} sin(theta_f)|a2>.
class WMSetup {
 public:
  /// Throws ConfigError on non-finite input or sigma <= 0.
  WMSetup(double a1, double a2, double chi, double sigma, double theta_i, double theta_f,
          double phi);

  /// Real offset: theta_i = pi/4, theta_f = -(pi/4 - eps). Requires |eps| < pi/2.
  static WMSetup real_offset(double a1, double a2, double chi, double sigma, double eps);
  /// Phase offset: theta_i = pi/4, theta_f = -pi/4, relative phase phi. Requires |phi| < pi/2.
  static WMSetup phase_offset(double a1, double a2, double chi, double sigma, double phi);

  double a1() const { return a1_; }
  double a2() const { return a2_; }
  double chi() const { return chi_; }
  double sigma() const { return sigma_; }
  double eta() const { return chi_ * sigma_; }
  double theta_i() const { return theta_i_; }
  double theta_f() const { return theta_f_; }
  double phi() const { return phi_; }

  /// Amplitudes of the two branches of the Kraus operator
  /// K = c1 D(-i a1 eta) + c2 D(-i a2 eta).
  Complex branch_amplitude_1() const;
  Complex branch_amplitude_2() const;

 private:
  double a1_, a2_, chi_, sigma_, theta_i_, theta_f_, phi_;
};

/// Pointer shifts (post minus initial expectation) and the postselection
/// probability. The probability is only filled in when it can be evaluated
/// exactly.
struct MomentResult {
  double q_shift = 0.0;
  double p_shift = 0.0;
  std::optional<double> success_prob;
};

struct WeakValue {
  Complex value;
};

/// K rho K^dag with K built from exact displacement operators. The trace is
/// the success probability.
DensityOperator conditioned_pointer_state(const WMSetup& setup, const PointerSpec& pointer,
                                          const ModeSpace& space);

/// Shifts of the conditioned state relative to the input pointer, evaluated
/// in the given space.
MomentResult brute_force_pointer_moments(const WMSetup& setup, const PointerSpec& pointer,
                                         const ModeSpace& space);

/// Exact success probability for a thermal pointer.
double thermal_success_probability(const WMSetup& setup, const Thermal& thermal);

/// Exact <q> of a thermal pointer under phase-offset postselection; valid for
/// any coupling. Throws DegenerateError when 2 - Phi - Phi^* < 1e-300.
double exact_q_thermal_imaginary(const Thermal& thermal, double eta, double phi, double a1,
                                 double a2, double sigma);

/// Small-phi, small-eta form
/// 2 sigma phi eta R (a2 - a1) / (phi^2 + R (a2 - a1)^2 eta^2), R = (1+z)/(1-z).
double asymptotic_q_thermal(const Thermal& thermal, double eta, double phi, double a1, double a2,
                            double sigma);

/// Exact <p> of a thermal pointer under real-offset postselection, including
/// the common kick -(a1 + a2) eta / (2 sigma).
double exact_p_thermal_real(const Thermal& thermal, double eta, double eps, double a1, double a2,
                            double sigma);

/// Small-eps, small-eta form
/// (1/2 sigma) 4 (a2 - a1) eps eta / (4 eps^2 + R (a2 - a1)^2 eta^2).
double asymptotic_p_thermal(const Thermal& thermal, double eta, double eps, double a1, double a2,
                            double sigma);

/// phi that maximizes asymptotic_q_thermal: sqrt(R) (a2 - a1) eta.
double optimal_phase_offset(const Thermal& thermal, double eta, double a1, double a2);
/// eps that maximizes asymptotic_p_thermal: sqrt(R) (a2 - a1) eta / 2.
double optimal_real_offset(const Thermal& thermal, double eta, double a1, double a2);

/// <psi_f|A|psi_i> / <psi_f|psi_i>. Throws OrthogonalError when the overlap
/// is below 1e-12.
WeakValue weak_value(const WMSetup& setup);

/// Linear-response shifts q = 2 chi Im(A_w) R sigma^2 and p = -chi Re(A_w).
/// The success probability is left empty.
MomentResult weak_value_regime_moments(const Thermal& thermal, double chi, Complex weak_value,
                                       double sigma);

/// Same shifts with A_w taken from the setup and the exact success
/// probability of a thermal pointer.
MomentResult weak_value_regime_moments(const WMSetup& setup, const Thermal& thermal);

/// Pointer expectation values needed by the general first-order formula.
struct PointerMoments {
  double q_mean = 0.0;
  double p_mean = 0.0;
  double q2_mean = 0.0;
  /// <{p, q}> = <pq + qp>.
  double pq_anticomm = 0.0;
  /// <q q q>.
  double q3_mean = 0.0;
  /// <q p q>.
  double qpq_mean = 0.0;
};

/// Moments of a phase-symmetric pointer with <q^2> = s2; everything else
/// vanishes.
PointerMoments symmetric_pointer_moments(double q2_mean);

/// Moments read off a (normalized or unnormalized) density operator.
PointerMoments pointer_moments(const DensityOperator& rho, double sigma);

/// Shifts of <q> and <p> from the second-order expansion in chi, eps and phi
/// for an arbitrary pointer, relative to the pointer's own means. Here eps is
/// the symmetric offset theta_i = pi/4 - eps, theta_f = -pi/4 + eps, so the
/// pre/post overlap is about 2 eps:
///   <M>_f = [(16 eps^2 + phi^2)<M> + 4i eps chi d <[M,q]> + phi chi d <{M,q}>
///            + chi^2 d^2 <q M q>] / A0,
///   A0 = 16 eps^2 + phi^2 + 2 phi chi d <q> + chi^2 d^2 <q^2>,  d = a2 - a1.
/// The success probability is left empty.
MomentResult general_pointer_moments(const PointerMoments& m, double chi, double a1, double a2,
                                     double eps, double phi);

}  // namespace thermwm

#endif  // THERMWM_WEAK_MEASUREMENT_HPP_
