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

#include "thermwm/dissipation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "thermwm/errors.hpp"

namespace thermwm {

void DissipationParams::validate() const {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw ConfigError("gamma must be >= 0");
  if (!(base.k >= 0.0) || !std::isfinite(base.k)) throw ConfigError("k must be >= 0");
  if (!(base.omega_m > 0.0)) throw ConfigError("omega_m must be positive");
  if (!(base.sigma > 0.0)) throw ConfigError("sigma must be positive");
}

JointState::JointState(ModeSpace mirror, Matrix rho) : mirror_(mirror), rho_(std::move(rho)) {
  if (rho_.rows() != 2 * mirror_.size() || rho_.cols() != 2 * mirror_.size()) {
    throw ConfigError("joint state must be 2N x 2N");
  }
}

Matrix JointState::block(int i, int j) const {
  const auto n = mirror_.size();
  return rho_.block(i * n, j * n, n, n);
}

double JointState::min_eigenvalue() const {
  const Matrix herm = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

JointState initial_joint_state(const DissipationParams& dp, Scheme scheme, const ModeSpace& mirror) {
  const auto n = mirror.size();
  Matrix mirror_rho;
  Complex amp_a(1.0, 0.0);
  if (scheme == Scheme::kPhaseShifter) {
    mirror_rho = realize_pointer(ThermalPointer{dp.base.thermal}, mirror).matrix.entries();
    amp_a = std::polar(1.0, dp.base.theta);
  } else {
    mirror_rho = realize_pointer(DisplacedThermalPointer{dp.base.thermal, dp.base.alpha}, mirror)
                     .matrix.entries();
  }
  const std::array<Complex, 2> photon{amp_a / std::sqrt(2.0), Complex(1.0 / std::sqrt(2.0), 0.0)};
  Matrix rho(2 * n, 2 * n);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      rho.block(i * n, j * n, n, n) = photon[i] * std::conj(photon[j]) * mirror_rho;
    }
  }
  return JointState(mirror, std::move(rho));
}

namespace {

// Right-hand side of the master equation in units of omega_m, applied block by
// block with the tridiagonal structure of every mirror operator.
class Lindbladian {
 public:
  Lindbladian(const DissipationParams& dp, Eigen::Index n)
      : n_(n),
        k_(dp.base.k),
        down_(dp.gamma / dp.base.thermal.one_minus_z()),
        up_(dp.gamma * dp.base.thermal.z() / dp.base.thermal.one_minus_z()),
        sq_(n + 1) {
    for (Eigen::Index a = 0; a <= n; ++a) sq_[a] = std::sqrt(static_cast<double>(a));
  }

  void apply(const Matrix& x, Matrix& out) const {
    out.resize(2 * n_, 2 * n_);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) apply_block(x, out, i, j);
    }
  }

 private:
  void apply_block(const Matrix& x, Matrix& out, int i, int j) const {
    const Eigen::Index ro = i * n_;
    const Eigen::Index co = j * n_;
    const double ki = i == 0 ? k_ : 0.0;
    const double kj = j == 0 ? k_ : 0.0;
    const Complex minus_i(0.0, -1.0);
    for (Eigen::Index b = 0; b < n_; ++b) {
      const double mb = b + 1 < n_ ? b + 1.0 : 0.0;
      for (Eigen::Index a = 0; a < n_; ++a) {
        const double ma = a + 1 < n_ ? a + 1.0 : 0.0;
        const Complex xab = x(ro + a, co + b);
        Complex hx = static_cast<double>(a) * xab;
        Complex xh = static_cast<double>(b) * xab;
        Complex jump(0.0, 0.0);
        if (a + 1 < n_) hx -= ki * sq_[a + 1] * x(ro + a + 1, co + b);
        if (a >= 1) hx -= ki * sq_[a] * x(ro + a - 1, co + b);
        if (b + 1 < n_) xh -= kj * sq_[b + 1] * x(ro + a, co + b + 1);
        if (b >= 1) xh -= kj * sq_[b] * x(ro + a, co + b - 1);
        if (a + 1 < n_ && b + 1 < n_) {
          jump += down_ * sq_[a + 1] * sq_[b + 1] * x(ro + a + 1, co + b + 1);
        }
        if (a >= 1 && b >= 1) jump += up_ * sq_[a] * sq_[b] * x(ro + a - 1, co + b - 1);
        const double loss = 0.5 * down_ * (a + b) + 0.5 * up_ * (ma + mb);
        out(ro + a, co + b) = minus_i * (hx - xh) + jump - loss * xab;
      }
    }
  }

  Eigen::Index n_;
  double k_;
  double down_;
  double up_;
  std::vector<double> sq_;
};

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

class DeviationIntegrator {
 public:
  DeviationIntegrator(const JointState& rho0, const DissipationParams& dp,
                      const IntegratorOptions& opt)
      : lindblad_(dp, rho0.mirror().size()),
        opt_(opt),
        dim_(rho0.matrix().rows()),
        delta_(Matrix::Zero(dim_, dim_)) {
    lindblad_.apply(rho0.matrix(), l0_);
    h_ = 1e-3 / (1.0 + static_cast<double>(rho0.mirror().dim()) *
                           (1.0 + dp.gamma / dp.base.thermal.one_minus_z()));
    rhs(delta_, k1_);
  }

  const Matrix& delta() const { return delta_; }
  std::size_t accepted() const { return accepted_; }
  std::size_t rejected() const { return rejected_; }

  void advance_to(double target) {
    while (x_ < target) {
      if (accepted_ + rejected_ >= opt_.max_steps) {
        throw StiffnessError("integrator exceeded " + std::to_string(opt_.max_steps) + " steps");
      }
      const double remaining = target - x_;
      const bool last = h_ >= remaining;
      const double h = last ? remaining : h_;
      const double err = try_step(h);
      const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      if (err <= 1.0) {
        x_ = last ? target : x_ + h;
        delta_.swap(y_new_);
        k1_.swap(k7_);
        ++accepted_;
        if (!last || factor < 1.0) h_ = h * factor;
      } else {
        ++rejected_;
        h_ = h * factor;
      }
      if (h_ < opt_.min_step) {
        throw StiffnessError("step size collapsed below " + std::to_string(opt_.min_step));
      }
    }
  }

 private:
  void rhs(const Matrix& d, Matrix& out) const {
    lindblad_.apply(d, out);
    out += l0_;
  }

  double try_step(double h) {
    const Matrix& y = delta_;
    rhs(y + h * (a21 * k1_), k2_);
    rhs(y + h * (a31 * k1_ + a32 * k2_), k3_);
    rhs(y + h * (a41 * k1_ + a42 * k2_ + a43 * k3_), k4_);
    rhs(y + h * (a51 * k1_ + a52 * k2_ + a53 * k3_ + a54 * k4_), k5_);
    rhs(y + h * (a61 * k1_ + a62 * k2_ + a63 * k3_ + a64 * k4_ + a65 * k5_), k6_);
    y_new_ = y + h * (b1 * k1_ + b3 * k3_ + b4 * k4_ + b5 * k5_ + b6 * k6_);
    rhs(y_new_, k7_);
    const Matrix err = h * (e1 * k1_ + e3 * k3_ + e4 * k4_ + e5 * k5_ + e6 * k6_ + e7 * k7_);
    double worst = 0.0;
    for (Eigen::Index c = 0; c < dim_; ++c) {
      for (Eigen::Index r = 0; r < dim_; ++r) {
        const double scale =
            opt_.atol + opt_.rtol * std::max(std::abs(y(r, c)), std::abs(y_new_(r, c)));
        worst = std::max(worst, std::abs(err(r, c)) / scale);
      }
    }
    return worst;
  }

  Lindbladian lindblad_;
  IntegratorOptions opt_;
  Eigen::Index dim_;
  Matrix l0_;
  Matrix delta_;
  Matrix y_new_;
  Matrix k1_, k2_, k3_, k4_, k5_, k6_, k7_;
  double x_ = 0.0;
  double h_;
  std::size_t accepted_ = 0;
  std::size_t rejected_ = 0;
};

}  // namespace

std::vector<Evolution> lindblad_integrate(const JointState& rho0, std::span<const double> times,
                                          const DissipationParams& dp,
                                          const IntegratorOptions& options) {
  dp.validate();
  DeviationIntegrator integrator(rho0, dp, options);
  std::vector<Evolution> out;
  out.reserve(times.size());
  double previous = 0.0;
  for (const double t : times) {
    if (!(t >= previous)) throw ConfigError("integration times must be non-negative and increasing");
    previous = t;
    integrator.advance_to(dp.base.omega_m * t);
    const Matrix& d = integrator.delta();
    out.push_back({JointState(rho0.mirror(), rho0.matrix() + d), d, std::abs(d.trace().real()),
                   integrator.accepted(), integrator.rejected()});
  }
  return out;
}

Evolution lindblad_step_integrate(const JointState& rho0, double t, const DissipationParams& dp,
                                  const IntegratorOptions& options) {
  const double times[] = {t};
  return std::move(lindblad_integrate(rho0, times, dp, options).front());
}

double taylor_q_scheme1(double t, const DissipationParams& dp) {
  const auto& p = dp.base;
  const double x = p.omega_m * t;
  const double r = p.thermal.fluctuation_ratio();
  const double st = std::sin(p.theta);
  const double half = std::sin(0.5 * p.theta);
  const double one_minus_cos = 2.0 * half * half;
  const double num = 2.0 * r * p.k * x * st + p.k * x * x * one_minus_cos -
                     0.5 * dp.gamma * r * p.k * x * x * st;
  const double den = 2.0 * one_minus_cos + r * p.k * p.k * x * x * std::cos(p.theta);
  if (den == 0.0) throw DegenerateError("theta and omega_m t both vanish");
  return p.sigma * num / den;
}

double taylor_q_scheme2(double t, const DissipationParams& dp) {
  const auto& p = dp.base;
  const double x = p.omega_m * t;
  const double r = p.thermal.fluctuation_ratio();
  const double a = std::abs(p.alpha) * std::cos(std::arg(p.alpha));
  if (a == 0.0) throw DegenerateError("|alpha| cos(beta) vanishes");
  if (x == 0.0 || p.k == 0.0) throw DegenerateError("k omega_m t vanishes");
  // Both printed numerator and denominator carry an overall k^2 x^2.
  const double g = dp.gamma;
  const double a3 = a * a * a;
  const double num = 3.0 * r * a + 4.0 * a3 - (5.0 / 3.0) * r * g * x * a - 3.0 * g * x * a3;
  const double den = 0.5 * r + 2.0 * a * a - g * x * a * a - r * g * x / 12.0;
  if (den == 0.0) throw DegenerateError("small-time denominator vanishes");
  return p.sigma * (num / den - 2.0 * a);
}

namespace {

// (|A> - |B>)/sqrt(2) projection of a joint matrix onto the mirror.
Matrix project_dark_port(const Matrix& m, Eigen::Index n) {
  return 0.5 * (m.block(0, 0, n, n) + m.block(n, n, n, n) - m.block(0, n, n, n) -
                m.block(n, 0, n, n));
}

}  // namespace

std::vector<DisplacementResult> postselected_q_from_master(std::span<const double> times,
                                                           const DissipationParams& dp,
                                                           Scheme scheme, const ModeSpace& mirror,
                                                           const IntegratorOptions& options) {
  const JointState rho0 = initial_joint_state(dp, scheme, mirror);
  const auto n = mirror.size();
  const Operator q = position_op(mirror, dp.base.sigma);
  auto trace_q = [&](const Matrix& m) {
    return m.cwiseProduct(q.entries().transpose()).sum().real();
  };
  const Matrix mirror0 = rho0.block(0, 0) + rho0.block(1, 1);
  const double q0 = trace_q(mirror0) / mirror0.trace().real();
  const Matrix post0 = project_dark_port(rho0.matrix(), n);

  std::vector<DisplacementResult> out;
  out.reserve(times.size());
  for (const Evolution& ev : lindblad_integrate(rho0, times, dp, options)) {
    const Matrix post_delta = project_dark_port(ev.deviation, n);
    const double prob = post0.trace().real() + post_delta.trace().real();
    if (!(prob > 0.0)) throw DegenerateError("postselection has zero success probability");
    const double q_num = trace_q(post0) + trace_q(post_delta);
    out.push_back({q_num / prob - q0, prob});
  }
  return out;
}

DisplacementResult postselected_q_from_master(double t, const DissipationParams& dp, Scheme scheme,
                                              const ModeSpace& mirror,
                                              const IntegratorOptions& options) {
  const double times[] = {t};
  return postselected_q_from_master(times, dp, scheme, mirror, options).front();
}

}  // namespace thermwm
