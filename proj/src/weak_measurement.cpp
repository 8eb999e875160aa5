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

#include "thermwm/weak_measurement.hpp"

#include <cmath>
#include <numbers>

#include "thermwm/errors.hpp"

namespace thermwm {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw ConfigError(std::string(name) + " must be finite");
}

// 1 - E cos(angle) with E = exp(-a), written without cancellation.
double one_minus_damped_cos(double a, double angle) {
  const double s = std::sin(0.5 * angle);
  return -std::expm1(-a) + 2.0 * std::exp(-a) * s * s;
}

}  // namespace

WMSetup::WMSetup(double a1, double a2, double chi, double sigma, double theta_i, double theta_f,
                 double phi)
    : a1_(a1), a2_(a2), chi_(chi), sigma_(sigma), theta_i_(theta_i), theta_f_(theta_f), phi_(phi) {
  require_finite(a1, "a1");
  require_finite(a2, "a2");
  require_finite(chi, "chi");
  require_finite(theta_i, "theta_i");
  require_finite(theta_f, "theta_f");
  require_finite(phi, "phi");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw ConfigError("sigma must be positive");
}

WMSetup WMSetup::real_offset(double a1, double a2, double chi, double sigma, double eps) {
  if (!(std::abs(eps) < std::numbers::pi / 2.0)) throw ConfigError("|eps| must be below pi/2");
  return WMSetup(a1, a2, chi, sigma, kQuarterPi, -(kQuarterPi - eps), 0.0);
}

WMSetup WMSetup::phase_offset(double a1, double a2, double chi, double sigma, double phi) {
  if (!(std::abs(phi) < std::numbers::pi / 2.0)) throw ConfigError("|phi| must be below pi/2");
  return WMSetup(a1, a2, chi, sigma, kQuarterPi, -kQuarterPi, phi);
}

Complex WMSetup::branch_amplitude_1() const { return std::cos(theta_f_) * std::cos(theta_i_); }

Complex WMSetup::branch_amplitude_2() const {
  return std::polar(std::sin(theta_f_) * std::sin(theta_i_), -phi_);
}

DensityOperator conditioned_pointer_state(const WMSetup& setup, const PointerSpec& pointer,
                                          const ModeSpace& space) {
  const DensityOperator rho = realize_pointer(pointer, space);
  const double eta = setup.eta();
  const Matrix k = setup.branch_amplitude_1() *
                       displacement_op(Complex(0.0, -setup.a1() * eta), space).entries() +
                   setup.branch_amplitude_2() *
                       displacement_op(Complex(0.0, -setup.a2() * eta), space).entries();
  Matrix out = k * rho.matrix.entries() * k.adjoint();
  return {Operator(space, std::move(out)), false, rho.tail_weight};
}

MomentResult brute_force_pointer_moments(const WMSetup& setup, const PointerSpec& pointer,
                                         const ModeSpace& space) {
  const double sigma = setup.sigma();
  const QuadratureMoments before = quadrature_moments(realize_pointer(pointer, space), sigma);
  const DensityOperator cond = conditioned_pointer_state(setup, pointer, space);
  const double prob = cond.trace();
  if (!(prob > 0.0)) throw DegenerateError("postselection has zero success probability");
  const QuadratureMoments after = quadrature_moments(cond, sigma);
  return {after.q_mean - before.q_mean, after.p_mean - before.p_mean, prob};
}

double thermal_success_probability(const WMSetup& setup, const Thermal& thermal) {
  const Complex c1 = setup.branch_amplitude_1();
  const Complex c2 = setup.branch_amplitude_2();
  const double d = (setup.a1() - setup.a2()) * setup.eta();
  const double a = 0.5 * thermal.fluctuation_ratio() * d * d;
  return std::norm(c1 + c2) + 2.0 * std::real(c1 * std::conj(c2)) * std::expm1(-a);
}

double exact_q_thermal_imaginary(const Thermal& thermal, double eta, double phi, double a1,
                                 double a2, double sigma) {
  const Complex big_theta(0.0, -eta * (a1 - a2));
  const double a = 0.5 * thermal.fluctuation_ratio() * std::norm(big_theta);
  const double e = std::exp(-a);
  // The bracket e^{i phi} Theta + c.c. - z (e^{i phi} Theta^* + c.c.) is split as
  // -4 sin(phi) Im(Theta) + (1 - z) 2 Re(e^{i phi} Theta^*).
  const double bracket_over_1mz =
      -4.0 * std::sin(phi) * big_theta.imag() / thermal.one_minus_z() +
      2.0 * std::real(std::polar(1.0, phi) * std::conj(big_theta));
  const double numerator = 2.0 * big_theta.real() - e * bracket_over_1mz;
  const double denominator = 2.0 * one_minus_damped_cos(a, phi);
  if (!(denominator >= 1e-300)) {
    throw DegenerateError("phase-offset postselection is perfectly destructive");
  }
  return sigma * numerator / denominator;
}

double asymptotic_q_thermal(const Thermal& thermal, double eta, double phi, double a1, double a2,
                            double sigma) {
  const double r = thermal.fluctuation_ratio();
  const double d = a2 - a1;
  const double denominator = phi * phi + r * d * d * eta * eta;
  if (denominator == 0.0) throw DegenerateError("phi and eta (a2 - a1) both vanish");
  return 2.0 * sigma * phi * eta * r * d / denominator;
}

double exact_p_thermal_real(const Thermal& thermal, double eta, double eps, double a1, double a2,
                            double sigma) {
  const double d = a2 - a1;
  const double a = 0.5 * thermal.fluctuation_ratio() * d * d * eta * eta;
  const double denominator = one_minus_damped_cos(a, 2.0 * eps);
  if (!(denominator >= 1e-300)) {
    throw DegenerateError("real-offset postselection is perfectly destructive");
  }
  return (-0.5 * (a1 + a2) * eta + 0.5 * d * eta * std::sin(2.0 * eps) / denominator) / sigma;
}

double asymptotic_p_thermal(const Thermal& thermal, double eta, double eps, double a1, double a2,
                            double sigma) {
  const double r = thermal.fluctuation_ratio();
  const double d = a2 - a1;
  const double denominator = 4.0 * eps * eps + r * d * d * eta * eta;
  if (denominator == 0.0) throw DegenerateError("eps and eta (a2 - a1) both vanish");
  return 4.0 * d * eps * eta / (2.0 * sigma * denominator);
}

double optimal_phase_offset(const Thermal& thermal, double eta, double a1, double a2) {
  return std::sqrt(thermal.fluctuation_ratio()) * (a2 - a1) * eta;
}

double optimal_real_offset(const Thermal& thermal, double eta, double a1, double a2) {
  return 0.5 * std::sqrt(thermal.fluctuation_ratio()) * (a2 - a1) * eta;
}

WeakValue weak_value(const WMSetup& setup) {
  const Complex c1 = setup.branch_amplitude_1();
  const Complex c2 = setup.branch_amplitude_2();
  const Complex overlap = c1 + c2;
  if (std::abs(overlap) < 1e-12) {
    throw OrthogonalError("pre- and postselected states are orthogonal");
  }
  return {(setup.a1() * c1 + setup.a2() * c2) / overlap};
}

MomentResult weak_value_regime_moments(const Thermal& thermal, double chi, Complex weak_value,
                                       double sigma) {
  return {2.0 * chi * weak_value.imag() * thermal.fluctuation_ratio() * sigma * sigma,
          -chi * weak_value.real(), std::nullopt};
}

MomentResult weak_value_regime_moments(const WMSetup& setup, const Thermal& thermal) {
  MomentResult r =
      weak_value_regime_moments(thermal, setup.chi(), weak_value(setup).value, setup.sigma());
  r.success_prob = thermal_success_probability(setup, thermal);
  return r;
}

PointerMoments symmetric_pointer_moments(double q2_mean) {
  PointerMoments m;
  m.q2_mean = q2_mean;
  return m;
}

PointerMoments pointer_moments(const DensityOperator& rho, double sigma) {
  const ModeSpace& space = rho.matrix.space();
  const Operator q = position_op(space, sigma);
  const Operator p = momentum_op(space, sigma);
  const Operator q2 = position_squared_op(space, sigma);
  PointerMoments m;
  m.q_mean = expectation(rho, q);
  m.p_mean = expectation(rho, p);
  m.q2_mean = expectation(rho, q2);
  m.pq_anticomm = expectation(rho, p * q + q * p);
  m.q3_mean = expectation(rho, q * q2);
  m.qpq_mean = expectation(rho, q * p * q);
  return m;
}

MomentResult general_pointer_moments(const PointerMoments& m, double chi, double a1, double a2,
                                     double eps, double phi) {
  const double d = a2 - a1;
  const double base = 16.0 * eps * eps + phi * phi;
  const double cd = chi * d;
  const double a0 = base + 2.0 * phi * cd * m.q_mean + cd * cd * m.q2_mean;
  if (a0 == 0.0) throw DegenerateError("normalization of the expanded pointer state vanishes");
  // [q, q] = 0, {q, q} = 2 q^2, [p, q] = -i.
  const double q_f = (base * m.q_mean + phi * cd * 2.0 * m.q2_mean + cd * cd * m.q3_mean) / a0;
  const double p_f =
      (base * m.p_mean + 4.0 * eps * cd + phi * cd * m.pq_anticomm + cd * cd * m.qpq_mean) / a0;
  return {q_f - m.q_mean, p_f - m.p_mean, std::nullopt};
}

}  // namespace thermwm
