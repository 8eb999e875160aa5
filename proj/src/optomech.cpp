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

#include "thermwm/optomech.hpp"

#include <cmath>

#include "thermwm/errors.hpp"

namespace thermwm {

void OptomechParams::validate() const {
  if (!(k > 0.0) || !std::isfinite(k)) throw ConfigError("k must be positive");
  if (!(omega_m > 0.0) || !std::isfinite(omega_m)) throw ConfigError("omega_m must be positive");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw ConfigError("sigma must be positive");
  if (!std::isfinite(theta) || !std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw ConfigError("theta and alpha must be finite");
  }
}

namespace {

// x - sin(x) without cancellation for small x.
double x_minus_sin(double x) {
  if (std::abs(x) < 0.05) {
    const double x2 = x * x;
    return x * x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0)));
  }
  return x - std::sin(x);
}

Complex xi_of(double x, double k) {
  const double s = std::sin(0.5 * x);
  return {2.0 * k * s * s, k * std::sin(x)};
}

}  // namespace

SchemeKernel kernel(double t, const OptomechParams& p, Scheme scheme) {
  const double x = p.omega_m * t;
  SchemeKernel out;
  out.xi = xi_of(x, p.k);
  out.kerr = p.k * p.k * x_minus_sin(x);
  out.omega = scheme == Scheme::kPhaseShifter ? p.theta : 2.0 * std::imag(p.alpha * out.xi);
  out.log_decay = 0.5 * p.thermal.fluctuation_ratio() * std::norm(out.xi);
  out.Phi = std::exp(-out.log_decay) * std::polar(1.0, out.kerr + out.omega);
  return out;
}

DisplacementResult mean_displacement(double t, const OptomechParams& p, Scheme scheme) {
  const SchemeKernel kn = kernel(t, p, scheme);
  // 1 - Re(Phi) and the closed form regrouped as
  //   <q> = sigma [Re(xi) + R Im(Phi) Im(xi) / (1 - Re(Phi))].
  const double half_angle = std::sin(0.5 * (kn.kerr + kn.omega));
  const double one_minus_re =
      -std::expm1(-kn.log_decay) + 2.0 * std::exp(-kn.log_decay) * half_angle * half_angle;
  if (!(one_minus_re >= 0.5e-300)) {
    throw DegenerateError("postselection probability underflows");
  }
  const double q = p.sigma * (kn.xi.real() + p.thermal.fluctuation_ratio() * kn.Phi.imag() *
                                                  kn.xi.imag() / one_minus_re);
  return {q, 0.5 * one_minus_re};
}

double lab_frame_shift(double t, const OptomechParams& p) {
  const double x = p.omega_m * t;
  const Complex alpha_t = p.alpha * std::polar(1.0, -x);
  return mean_displacement(t, p, Scheme::kDisplacedMirror).q_shift +
         2.0 * p.sigma * (alpha_t.real() - p.alpha.real());
}

double small_time_q(double t, const OptomechParams& p, Scheme scheme) {
  const double x = p.omega_m * t;
  const double r = p.thermal.fluctuation_ratio();
  const double kx2r = p.k * p.k * x * x * r;
  if (scheme == Scheme::kPhaseShifter) {
    const double den = p.theta * p.theta + kx2r;
    if (den == 0.0) throw DegenerateError("theta and k omega_m t both vanish");
    return 2.0 * p.sigma * p.theta * p.k * x * r / den;
  }
  const double a = std::abs(p.alpha);
  const double beta = std::arg(p.alpha);
  const double zeta = 0.5 * x * x * std::sin(beta) + x * std::cos(beta);
  const double kaz = p.k * a * zeta;
  const double den = 4.0 * kaz * kaz + kx2r;
  if (den == 0.0) throw DegenerateError("k |alpha| zeta and k omega_m t both vanish");
  return 4.0 * p.sigma * p.k * kaz * x * r / den;
}

double per_n_small_time_q(std::size_t n, double t, const OptomechParams& p) {
  const double x = p.omega_m * t;
  const double w = 2.0 * static_cast<double>(n) + 1.0;
  const double den = p.theta * p.theta + p.k * p.k * x * x * w;
  if (den == 0.0) throw DegenerateError("theta and k omega_m t both vanish");
  return 2.0 * p.sigma * p.theta * p.k * x * w / den;
}

double unamplified_displacement(double t, const OptomechParams& p) {
  const double s = std::sin(0.5 * p.omega_m * t);
  return 4.0 * p.k * s * s * p.sigma;
}

std::size_t adequate_optomech_dimension(const OptomechParams& p, Scheme scheme, Frame frame) {
  double extra = 2.0 * p.k;
  if (scheme == Scheme::kDisplacedMirror && frame == Frame::kLab) extra += std::abs(p.alpha);
  return adequate_dimension(ThermalPointer{p.thermal}, extra);
}

DisplacementResult brute_force_moments(double t, const OptomechParams& p, Scheme scheme,
                                       const ModeSpace& space, Frame frame) {
  const SchemeKernel kn = kernel(t, p, scheme);
  const DensityOperator rho = realize_pointer(ThermalPointer{p.thermal}, space);
  const Matrix d_xi = displacement_op(kn.xi, space).entries();
  const auto n = space.size();

  Matrix k_op;
  double frame_offset = 0.0;
  if (scheme == Scheme::kDisplacedMirror && frame == Frame::kLab) {
    // The reference arm only rotates the coherent amplitude; the signal arm
    // additionally displaces by xi and picks up the Kerr phase.
    const Complex alpha_t = p.alpha * std::polar(1.0, -p.omega_m * t);
    const Matrix d_alpha = displacement_op(alpha_t, space).entries();
    k_op = 0.5 * (std::polar(1.0, kn.kerr) * (d_xi * d_alpha) - d_alpha);
    frame_offset = 2.0 * p.sigma * alpha_t.real();
  } else {
    k_op = 0.5 * (std::polar(1.0, kn.kerr + kn.omega) * d_xi - Matrix::Identity(n, n));
  }
  const DensityOperator cond{Operator(space, k_op * rho.matrix.entries() * k_op.adjoint()), false,
                             rho.tail_weight};
  const double prob = cond.trace();
  if (!(prob > 0.0)) throw DegenerateError("postselection has zero success probability");
  const double q = expectation(cond, position_op(space, p.sigma));
  return {q - frame_offset, prob};
}

}  // namespace thermwm
