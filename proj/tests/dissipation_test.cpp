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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "thermwm/errors.hpp"

namespace thermwm {
namespace {

DissipationParams make_dp(double z, double k, double theta, double gamma,
                          Complex alpha = {0.0, 0.0}) {
  DissipationParams dp;
  dp.gamma = gamma;
  dp.base.thermal = Thermal::from_z(z);
  dp.base.k = k;
  dp.base.theta = theta;
  dp.base.alpha = alpha;
  return dp;
}

ModeSpace mirror_for(const DissipationParams& dp, Scheme scheme) {
  const Frame frame = scheme == Scheme::kDisplacedMirror ? Frame::kLab : Frame::kDisplaced;
  return ModeSpace(adequate_optomech_dimension(dp.base, scheme, frame));
}

// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

TEST(DissipationParams, Validation) {
  EXPECT_NO_THROW(make_dp(0.5, 0.0, 0.1, 0.0).validate());
  EXPECT_THROW(make_dp(0.5, 0.01, 0.1, -1.0).validate(), ConfigError);
  EXPECT_THROW(make_dp(0.5, -0.01, 0.1, 0.0).validate(), ConfigError);
}

TEST(JointState, ShapeIsChecked) {
  EXPECT_THROW(JointState(ModeSpace(4), Matrix::Zero(4, 4)), ConfigError);
  EXPECT_NO_THROW(JointState(ModeSpace(4), Matrix::Zero(8, 8)));
}

TEST(JointState, InitialStateIsPhotonSuperposition) {
  const DissipationParams dp = make_dp(0.5, 0.05, 0.3, 0.0);
  const ModeSpace mirror(40);
  const JointState rho = initial_joint_state(dp, Scheme::kPhaseShifter, mirror);
  const Matrix th = realize_pointer(ThermalPointer{dp.base.thermal}, mirror).matrix.entries();
  EXPECT_NEAR(rho.trace(), 1.0, 1e-11);
  EXPECT_LT((rho.block(0, 0) - 0.5 * th).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((rho.block(0, 1) - 0.5 * std::polar(1.0, 0.3) * th).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_GT(rho.min_eigenvalue(), -1e-12);
}

TEST(Lindblad, UnitaryLimitMatchesClosedForm) {
  const DissipationParams dp = make_dp(0.5, 0.05, 0.1, 0.0);
  const std::vector<double> ts{0.1, 0.25, 0.5};
  const auto res = postselected_q_from_master(ts, dp, Scheme::kPhaseShifter,
                                              mirror_for(dp, Scheme::kPhaseShifter));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const DisplacementResult exact = mean_displacement(ts[i], dp.base, Scheme::kPhaseShifter);
    EXPECT_NEAR(res[i].q_shift, exact.q_shift, 1e-7) << "t=" << ts[i];
    EXPECT_NEAR(res[i].success_prob, exact.success_prob, 1e-9) << "t=" << ts[i];
  }
}

TEST(Lindblad, UnitaryLimitSchemeTwoLabFrame) {
  const DissipationParams dp = make_dp(0.5, 0.05, 0.0, 0.0, std::polar(0.6, 0.4));
  const std::vector<double> ts{0.1, 0.25, 0.5};
  const auto res = postselected_q_from_master(ts, dp, Scheme::kDisplacedMirror,
                                              mirror_for(dp, Scheme::kDisplacedMirror));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    EXPECT_NEAR(res[i].q_shift, lab_frame_shift(ts[i], dp.base), 1e-7) << "t=" << ts[i];
  }
}

TEST(Lindblad, RelaxesToThermalOccupation) {
  const double z = 0.5;
  const DissipationParams dp = make_dp(z, 0.0, 0.0, 1.0);
  const ModeSpace mirror(40);
  const auto n = mirror.size();
  // Photon in arm A, mirror in its ground state: out of equilibrium with the bath.
  Matrix rho = Matrix::Zero(2 * n, 2 * n);
  rho(0, 0) = 1.0;
  const Evolution ev = lindblad_step_integrate(JointState(mirror, rho), 22.0, dp);
  const Matrix mirror_rho = ev.state.block(0, 0) + ev.state.block(1, 1);
  const double occupation = (mirror_rho * number_op(mirror).entries()).trace().real();
  EXPECT_NEAR(occupation, z / (1.0 - z), 1e-6);
  for (Eigen::Index i = 1; i < 10; ++i) {
    EXPECT_NEAR(mirror_rho(i, i).real() / mirror_rho(i - 1, i - 1).real(), z, 1e-6);
  }
}

TEST(Lindblad, TraceAndPositivityWithDamping) {
  const DissipationParams dp = make_dp(0.5, 0.05, 0.1, 0.1);
  const ModeSpace mirror = mirror_for(dp, Scheme::kPhaseShifter);
  const JointState rho0 = initial_joint_state(dp, Scheme::kPhaseShifter, mirror);
  const std::vector<double> ts{0.25, 0.5, 1.0};
  const auto evs = lindblad_integrate(rho0, ts, dp);
  ASSERT_EQ(evs.size(), ts.size());
  for (std::size_t i = 0; i < evs.size(); ++i) {
    EXPECT_LT(evs[i].trace_drift, 1e-9 * ts[i] + 1e-15);
    EXPECT_NEAR(evs[i].state.trace(), rho0.trace(), 1e-9);
    EXPECT_GT(evs[i].state.min_eigenvalue(), -1e-9);
    const Matrix& m = evs[i].state.matrix();
    EXPECT_LT((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Lindblad, DeviationIsStateMinusInitial) {
  const DissipationParams dp = make_dp(0.3, 0.05, 0.2, 0.05);
  const ModeSpace mirror = mirror_for(dp, Scheme::kPhaseShifter);
  const JointState rho0 = initial_joint_state(dp, Scheme::kPhaseShifter, mirror);
  const Evolution ev = lindblad_step_integrate(rho0, 0.4, dp);
  EXPECT_LT((ev.state.matrix() - rho0.matrix() - ev.deviation).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_GT(ev.accepted_steps, 0u);
}

TEST(Lindblad, StepBudgetRaisesStiffness) {
  const DissipationParams dp = make_dp(0.5, 0.05, 0.1, 0.1);
  const ModeSpace mirror = mirror_for(dp, Scheme::kPhaseShifter);
  IntegratorOptions opts;
  opts.max_steps = 3;
  EXPECT_THROW(lindblad_step_integrate(initial_joint_state(dp, Scheme::kPhaseShifter, mirror), 5.0,
                                       dp, opts),
               StiffnessError);
}

TEST(Lindblad, NegativeDampingRejected) {
  const DissipationParams dp = make_dp(0.5, 0.05, 0.1, 0.0);
  const ModeSpace mirror = mirror_for(dp, Scheme::kPhaseShifter);
  const JointState rho0 = initial_joint_state(dp, Scheme::kPhaseShifter, mirror);
  DissipationParams bad = dp;
  bad.gamma = -0.1;
  EXPECT_THROW(lindblad_step_integrate(rho0, 0.1, bad), ConfigError);
}

TEST(Master, TimeZeroHasNoShift) {
  const DissipationParams dp = make_dp(0.5, 0.05, 0.1, 0.1);
  const DisplacementResult r =
      postselected_q_from_master(0.0, dp, Scheme::kPhaseShifter, mirror_for(dp, Scheme::kPhaseShifter));
  EXPECT_NEAR(r.q_shift, 0.0, 1e-15);
  EXPECT_NEAR(r.success_prob, 0.5 * (1.0 - std::cos(0.1)), 1e-12);
}

TEST(Master, TaylorSeriesSlopeIsThird) {
  const DissipationParams dp = make_dp(0.5, 0.005, 0.005, 0.1);
  std::vector<double> ts;
  for (int i = 0; i < 5; ++i) ts.push_back(1e-3 * std::pow(10.0, i / 4.0));
  const auto res = postselected_q_from_master(ts, dp, Scheme::kPhaseShifter,
                                              mirror_for(dp, Scheme::kPhaseShifter));
  std::vector<double> err;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    err.push_back(std::abs(res[i].q_shift - taylor_q_scheme1(ts[i], dp)));
  }
  const double s = log_log_slope(ts, err);
  EXPECT_GE(s, 2.5);
  EXPECT_LE(s, 3.5);
}

TEST(Taylor, SchemeOneAtTimeZero) {
  EXPECT_EQ(taylor_q_scheme1(0.0, make_dp(0.5, 0.005, 0.005, 0.3)), 0.0);
}

TEST(Taylor, SchemeOneUndampedMatchesSmallTime) {
  for (double z : {0.0, 0.5, 0.999999999}) {
    const DissipationParams dp = make_dp(z, 0.005, 0.005, 0.0);
    const double x = 1e-3;
    const double small = small_time_q(x, dp.base, Scheme::kPhaseShifter);
    EXPECT_NEAR(taylor_q_scheme1(x, dp) / small, 1.0, 1e-4) << "z=" << z;
  }
}

TEST(Taylor, SchemeTwoUndampedMatchesSmallTime) {
  for (double z : {0.0, 0.5, 0.999999999}) {
    const double r = (1.0 + z) / (1.0 - z);
    const DissipationParams dp = make_dp(z, 0.005, 0.0, 0.0, Complex(0.5 * std::sqrt(r), 0.0));
    const double x = 1e-4;
    const double small = small_time_q(x, dp.base, Scheme::kDisplacedMirror);
    EXPECT_NEAR(taylor_q_scheme2(x, dp) / small, 1.0, 1e-3) << "z=" << z;
  }
}

TEST(Taylor, SchemeTwoZeroAmplitudeIsDegenerate) {
  EXPECT_THROW(taylor_q_scheme2(0.01, make_dp(0.5, 0.005, 0.0, 0.1)), DegenerateError);
}

TEST(Taylor, SchemeOneDampingReducesShift) {
  const double x = 1e-4;
  double prev = INFINITY;
  for (double gamma : {0.0, 0.005, 0.5, 50.0, 5e3}) {
    const double q = std::abs(taylor_q_scheme1(x, make_dp(0.999999999, 0.005, 0.005, gamma)));
    EXPECT_LT(q, prev) << "gamma=" << gamma;
    prev = q;
  }
}

TEST(Taylor, RoomTemperatureCurvesNearlyCoincide) {
  const double z = 0.999999999;
  double worst_small = 0.0, worst_large = 0.0;
  for (int i = 1; i <= 100; ++i) {
    const double x = 5e-6 * i;
    const double ref = taylor_q_scheme1(x, make_dp(z, 0.005, 0.005, 0.0));
    for (double gamma : {0.005, 50.0}) {
      const double q = taylor_q_scheme1(x, make_dp(z, 0.005, 0.005, gamma));
      worst_small = std::max(worst_small, std::abs(q - ref) / std::abs(ref));
    }
    const double q = taylor_q_scheme1(x, make_dp(z, 0.005, 0.005, 5e3));
    worst_large = std::max(worst_large, std::abs(q - ref) / std::abs(ref));
  }
  EXPECT_LT(worst_small, 0.05);
  EXPECT_GT(worst_large, 0.2);
}

}  // namespace
}  // namespace thermwm
