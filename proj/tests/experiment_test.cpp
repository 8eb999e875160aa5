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

#include "thermwm/experiment.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "thermwm/errors.hpp"

namespace thermwm {
namespace {

constexpr double kRoomZ = 0.999999999;

OptomechParams scheme1_params(double k = 0.005) {
  const Thermal th = Thermal::from_z(kRoomZ);
  OptomechParams p = device_optomech_params(phase_shifter_device(), k, &th);
  p.theta = 0.005;
  return p;
}

OptomechParams scheme2_params(double k = 0.005) {
  const Thermal th = Thermal::from_z(kRoomZ);
  OptomechParams p = device_optomech_params(displaced_mirror_device(), k, &th);
  p.alpha = Complex(0.5 * std::sqrt(th.fluctuation_ratio()), 0.0);
  return p;
}

// Trapezoid rule on [0, t_end] with n panels.
template <typename F>
double trapezoid(F f, double t_end, int n) {
  const double h = t_end / n;
  double s = 0.5 * (f(0.0) + f(t_end));
  for (int i = 1; i < n; ++i) s += f(i * h);
  return s * h;
}

TEST(DeviceParams, DefaultSigmaIsFourPointThreeTwoFemtometers) {
  const ThermalDerivation d = derive_thermal(phase_shifter_device());
  EXPECT_NEAR(d.sigma_m / 4.32e-15, 1.0, 0.01);
}

TEST(DeviceParams, RoomTemperatureComplementFromConstants) {
  const DeviceParams dev = phase_shifter_device();
  const ThermalDerivation d = derive_thermal(dev);
  // Oracle: 1 - exp(-x) ~ x - x^2/2 for the tiny energy ratio x.
  const double x = 1.054571817e-34 * 2.0 * std::numbers::pi * 4.5e3 / (1.380649e-23 * 300.0);
  EXPECT_NEAR(d.thermal.one_minus_z() / (x - 0.5 * x * x), 1.0, 1e-12);
  EXPECT_NEAR(d.thermal.one_minus_z() / 7.2e-10, 1.0, 0.05);
  EXPECT_NEAR(d.thermal.z(), kRoomZ, 1e-9);
}

TEST(DeviceParams, ZeroTemperatureIsGroundState) {
  DeviceParams dev = phase_shifter_device();
  dev.temperature_k = 0.0;
  const ThermalDerivation d = derive_thermal(dev);
  EXPECT_EQ(d.thermal.z(), 0.0);
  EXPECT_EQ(d.max_amp_m, d.sigma_m);
}

TEST(DeviceParams, MaxThermalAmplitudeNearQuarterNanometer) {
  const ThermalDerivation d = derive_thermal(phase_shifter_device());
  EXPECT_NEAR(d.max_amp_m / 0.26e-9, 1.0, 0.2);
  EXPECT_NEAR(d.max_amp_m, std::sqrt(d.thermal.fluctuation_ratio()) * d.sigma_m, 1e-24);
}

TEST(DeviceParams, JsonRoundTripAndUnknownKey) {
  DeviceParams dev = displaced_mirror_device();
  dev.temperature_k = 77.0;
  const DeviceParams back = DeviceParams::from_json(dev.to_json());
  EXPECT_EQ(back.temperature_k, 77.0);
  EXPECT_EQ(back.kappa_over_omega_m, dev.kappa_over_omega_m);
  EXPECT_EQ(back.to_json().dump(), dev.to_json().dump());
  EXPECT_THROW(DeviceParams::from_json({{"mass", 1.0}}), ConfigError);
  EXPECT_THROW(DeviceParams::from_json({{"mass_kg", "heavy"}}), ConfigError);
  const DeviceParams partial = DeviceParams::from_json({{"f_m_hz", 1e3}});
  EXPECT_EQ(partial.f_m_hz, 1e3);
  EXPECT_EQ(partial.mass_kg, DeviceParams{}.mass_kg);
}

TEST(DeviceParams, Validation) {
  DeviceParams dev;
  dev.mass_kg = 0.0;
  EXPECT_THROW(dev.validate(), ConfigError);
  dev = DeviceParams{};
  dev.temperature_k = -1.0;
  EXPECT_THROW(dev.validate(), ConfigError);
}

TEST(OverallProbability, ClosedFormMatchesQuadrature) {
  for (double kt : {1e2, 1e3, 1e4, 2e4}) {
    for (Scheme s : {Scheme::kPhaseShifter, Scheme::kDisplacedMirror}) {
      OptomechParams p = s == Scheme::kPhaseShifter ? scheme1_params() : scheme2_params();
      if (s == Scheme::kDisplacedMirror) p.alpha = std::polar(std::abs(p.alpha), 0.7);
      const double kappa = kt * p.omega_m;
      const double closed = overall_probability(p, kappa, s, ProbabilityMethod::kClosedForm);
      const double quad = overall_probability(p, kappa, s, ProbabilityMethod::kQuadrature);
      EXPECT_NEAR(quad / closed, 1.0, 1e-6) << "kappa/omega_m=" << kt;
    }
  }
}

TEST(OverallProbability, SchemeTwoNearFiveKSquared) {
  const OptomechParams p = scheme2_params();
  const double kappa = displaced_mirror_device().kappa();
  EXPECT_NEAR(overall_probability(p, kappa, Scheme::kDisplacedMirror) / (p.k * p.k) / 5.0, 1.0,
              0.02);
}

TEST(OverallProbability, SchemeOneThermalCoefficient) {
  const OptomechParams p = scheme1_params();
  const double kappa = phase_shifter_device().kappa();
  const FeasibilityReport f = feasibility_check(p, kappa, Scheme::kPhaseShifter, 2.0);
  EXPECT_NEAR(f.k2_coefficient / 6.94, 1.0, 0.02);
  EXPECT_NEAR(overall_probability(p, kappa, Scheme::kPhaseShifter),
              f.k2_coefficient * p.k * p.k + 0.25 * p.theta * p.theta, 1e-18);
}

TEST(OverallProbability, VanishesWithoutCouplingOrPhase) {
  OptomechParams p = scheme1_params();
  p.k = 0.0;
  p.theta = 0.0;
  EXPECT_EQ(overall_probability(p, 1e3 * p.omega_m, Scheme::kPhaseShifter), 0.0);
  EXPECT_THROW(arrival_density(0.0, p, 1e3 * p.omega_m, Scheme::kPhaseShifter), DegenerateError);
}

TEST(ArrivalDensity, TimeZeroValue) {
  const OptomechParams p = scheme1_params();
  const double kappa = phase_shifter_device().kappa();
  const double prob = overall_probability(p, kappa, Scheme::kPhaseShifter);
  EXPECT_NEAR(arrival_density(0.0, p, kappa, Scheme::kPhaseShifter) /
                  (kappa * p.theta * p.theta / (4.0 * prob)),
              1.0, 1e-14);
}

TEST(ArrivalDensity, IntegratesToOne) {
  for (double kt : {1.2e2, 1.2e3, 1.2e4, 2e2, 2e3, 2e4}) {
    for (Scheme s : {Scheme::kPhaseShifter, Scheme::kDisplacedMirror}) {
      const OptomechParams p = s == Scheme::kPhaseShifter ? scheme1_params() : scheme2_params();
      const QuadratureEstimate e = arrival_density_integral(p, kt * p.omega_m, s);
      EXPECT_NEAR(e.value, 1.0, 1e-8) << "kappa/omega_m=" << kt;
      EXPECT_LT(e.cutoff_bound, 1e-12);
    }
  }
}

TEST(ArrivalDensity, IndependentTrapezoidNormalization) {
  const OptomechParams p = scheme1_params();
  const double kappa = 1.2e2 * p.omega_m;
  const double total = trapezoid(
      [&](double t) { return arrival_density(t, p, kappa, Scheme::kPhaseShifter); }, 40.0 / kappa,
      200000);
  EXPECT_NEAR(total, 1.0, 1e-6);
}

TEST(ArrivalDensity, LargerKappaConcentratesNearZero) {
  const OptomechParams p = scheme1_params();
  const double window = 1e-3 / p.omega_m;
  double previous = 0.0;
  for (double kt : {1.2e2, 1.2e3, 1.2e4}) {
    const double kappa = kt * p.omega_m;
    const double early = trapezoid(
        [&](double t) { return arrival_density(t, p, kappa, Scheme::kPhaseShifter); }, window,
        20000);
    EXPECT_GT(early, previous) << "kappa/omega_m=" << kt;
    previous = early;
  }
  EXPECT_GT(previous, 0.99);
}

TEST(AveragedDisplacement, SchemeOneHeadline) {
  const OptomechParams p = scheme1_params();
  const AmplificationReport r =
      averaged_displacement(p, phase_shifter_device().kappa(), Scheme::kPhaseShifter);
  EXPECT_NEAR(r.q_bar / p.sigma / 11577.0, 1.0, 0.05);
  EXPECT_NEAR(r.Q / 578850.0, 1.0, 0.05);
}

TEST(AveragedDisplacement, SchemeTwoHeadline) {
  const OptomechParams p = scheme2_params();
  const AmplificationReport r =
      averaged_displacement(p, displaced_mirror_device().kappa(), Scheme::kDisplacedMirror);
  EXPECT_NEAR(r.q_bar / p.sigma / 44704.0, 1.0, 0.05);
  EXPECT_NEAR(r.Q / 2235200.0, 1.0, 0.05);
}

TEST(AveragedDisplacement, QIsDefinedByQBar) {
  for (Scheme s : {Scheme::kPhaseShifter, Scheme::kDisplacedMirror}) {
    const OptomechParams p = s == Scheme::kPhaseShifter ? scheme1_params() : scheme2_params();
    const AmplificationReport r = averaged_displacement(p, 1e3 * p.omega_m, s);
    EXPECT_DOUBLE_EQ(r.Q * 4.0 * p.k * p.sigma, r.q_bar);
    EXPECT_GE(r.P, 0.0);
    EXPECT_LE(r.P, 1.0);
  }
}

TEST(AveragedDisplacement, NeverExceedsThermalCeiling) {
  for (double z : {0.5, 0.9, kRoomZ}) {
    for (double theta : {1e-4, 5e-3, 0.1}) {
      const Thermal th = Thermal::from_z(z);
      OptomechParams p = device_optomech_params(phase_shifter_device(), 0.005, &th);
      p.theta = theta;
      const AmplificationReport r =
          averaged_displacement(p, 1.2e4 * p.omega_m, Scheme::kPhaseShifter);
      EXPECT_LE(std::abs(r.q_bar), r.max_thermal_amp * (1.0 + 1e-9));
    }
  }
}

TEST(AveragedDisplacement, LargePhaseWashesOut) {
  OptomechParams p = scheme1_params();
  const double kappa = phase_shifter_device().kappa();
  const double tuned = averaged_displacement(p, kappa, Scheme::kPhaseShifter).q_bar;
  double prev = INFINITY;
  for (double theta : {0.05, 0.5, 1.5, 3.1}) {
    p.theta = theta;
    const double q = averaged_displacement(p, kappa, Scheme::kPhaseShifter).q_bar;
    EXPECT_LT(q, prev) << "theta=" << theta;
    prev = q;
  }
  EXPECT_LT(std::abs(prev), 1e-2 * std::abs(tuned));
}

TEST(Feasibility, SchemeTwoMinimumCoupling) {
  const OptomechParams p = scheme2_params();
  const FeasibilityReport f =
      feasibility_check(p, displaced_mirror_device().kappa(), Scheme::kDisplacedMirror, 2.0);
  EXPECT_NEAR(f.k_min / 2.6e-5, 1.0, 0.05);
  EXPECT_TRUE(f.feasible);
  EXPECT_EQ(f.k_min, f.k_min_thermal_only);
}

TEST(Feasibility, NoDarkCountsIsAlwaysFeasible) {
  OptomechParams p = scheme2_params(1e-9);
  const FeasibilityReport f =
      feasibility_check(p, displaced_mirror_device().kappa(), Scheme::kDisplacedMirror, 0.0);
  EXPECT_TRUE(f.feasible);
  EXPECT_EQ(f.k_min, 0.0);
}

TEST(Feasibility, SchemeOneThermalOnlyBound) {
  const OptomechParams p = scheme1_params();
  const double kappa = phase_shifter_device().kappa();
  const FeasibilityReport f = feasibility_check(p, kappa, Scheme::kPhaseShifter, 2.0);
  EXPECT_NEAR(f.k_min_thermal_only, std::sqrt(2.0 / (f.k2_coefficient * kappa)), 1e-18);
  EXPECT_NEAR(f.k_min_thermal_only / std::sqrt(2.0 / (6.94 * kappa)), 1.0, 0.02);
  // The phase-shifter term alone already clears 2 Hz.
  EXPECT_EQ(f.k_min, 0.0);
  EXPECT_NEAR(f.count_rate_hz, f.P * kappa, 1e-9 * f.count_rate_hz);
}

TEST(Feasibility, NegativeDarkRateRejected) {
  EXPECT_THROW(feasibility_check(scheme1_params(), 1e6, Scheme::kPhaseShifter, -1.0), ConfigError);
}

}  // namespace
}  // namespace thermwm
