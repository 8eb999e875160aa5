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

#include "thermwm/app/headline.hpp"

#include <cmath>
#include <numbers>

#include "thermwm/optomech.hpp"

namespace thermwm::app {

namespace {

HeadlineCheck check(std::string name, double value, double expected, double rel_tolerance) {
  const bool pass = std::abs(value - expected) <= rel_tolerance * std::abs(expected);
  return {std::move(name), value, expected, rel_tolerance, pass};
}

}  // namespace

HeadlineReport compute_headline(const HeadlineOptions& options) {
  DeviceParams dev1 = options.phase_shifter;
  DeviceParams dev2 = options.displaced_mirror;
  if (options.temperature_k) {
    dev1.temperature_k = *options.temperature_k;
    dev2.temperature_k = *options.temperature_k;
  }
  const ThermalDerivation derived = derive_thermal(dev1);
  Thermal used = derived.thermal;
  if (options.z) {
    used = Thermal::from_z(*options.z);
  } else if (!options.temperature_k) {
    used = Thermal::from_z(kRoomTemperatureZ);
  }

  OptomechParams p1 = device_optomech_params(dev1, options.k, &used);
  p1.theta = options.theta;
  OptomechParams p2 = device_optomech_params(dev2, options.k, &used);
  p2.alpha = std::polar(0.5 * std::sqrt(used.fluctuation_ratio()), 0.0);

  const double kappa1 = dev1.kappa();
  const double kappa2 = dev2.kappa();
  const AmplificationReport r1 = averaged_displacement(p1, kappa1, Scheme::kPhaseShifter);
  const AmplificationReport r2 = averaged_displacement(p2, kappa2, Scheme::kDisplacedMirror);
  const double p1_quad = overall_probability(p1, kappa1, Scheme::kPhaseShifter,
                                             ProbabilityMethod::kQuadrature);
  const double p2_quad = overall_probability(p2, kappa2, Scheme::kDisplacedMirror,
                                             ProbabilityMethod::kQuadrature);
  const FeasibilityReport f1 =
      feasibility_check(p1, kappa1, Scheme::kPhaseShifter, options.dark_count_rate_hz);
  const FeasibilityReport f2 =
      feasibility_check(p2, kappa2, Scheme::kDisplacedMirror, options.dark_count_rate_hz);
  const double k2 = options.k * options.k;
  const double sigma = derived.sigma_m;
  const double baseline_max = unamplified_displacement(std::numbers::pi / p1.omega_m, p1);

  HeadlineReport report;
  report.values = {
      {"sigma_m", sigma},
      {"z_derived", derived.thermal.z()},
      {"one_minus_z_derived", derived.thermal.one_minus_z()},
      {"z_used", used.z()},
      {"one_minus_z_used", used.one_minus_z()},
      {"max_amp_m", derived.max_amp_m},
      {"unamplified_max_m", baseline_max},
      {"P1", r1.P},
      {"P1_quadrature", p1_quad},
      {"P1_over_k2", r1.P / k2},
      {"P1_k2_coefficient", f1.k2_coefficient},
      {"P2", r2.P},
      {"P2_quadrature", p2_quad},
      {"P2_over_k2", r2.P / k2},
      {"q_bar1_over_sigma", r1.q_bar / sigma},
      {"q_bar2_over_sigma", r2.q_bar / sigma},
      {"Q1", r1.Q},
      {"Q2", r2.Q},
      {"k_min1", f1.k_min},
      {"k_min1_thermal_only", f1.k_min_thermal_only},
      {"k_min2", f2.k_min},
      {"dark_count_rate_hz", options.dark_count_rate_hz},
  };
  report.checks = {
      check("sigma_fm", sigma * 1e15, 4.32, 0.01),
      check("one_minus_z_derived", derived.thermal.one_minus_z(), 7.2e-10, 0.05),
      check("max_amp_nm", derived.max_amp_m * 1e9, 0.26, 0.20),
      check("unamplified_max_am", baseline_max * 1e18, 86.4, 0.01),
      check("P1_over_k2", r1.P / k2, 6.94, 0.02),
      check("P2_over_k2", r2.P / k2, 5.0, 0.02),
      check("q_bar1_over_sigma", r1.q_bar / sigma, 11577.0, 0.05),
      check("q_bar2_over_sigma", r2.q_bar / sigma, 44704.0, 0.05),
      check("Q1", r1.Q, 578850.0, 0.05),
      check("Q2", r2.Q, 2235200.0, 0.05),
      check("k_min2", f2.k_min, 2.6e-5, 0.05),
  };
  report.all_pass = true;
  for (const auto& c : report.checks) report.all_pass = report.all_pass && c.pass;
  return report;
}

nlohmann::ordered_json to_json(const HeadlineReport& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"value", c.value},
                      {"expected", c.expected},
                      {"rel_tolerance", c.rel_tolerance},
                      {"pass", c.pass}});
  }
  nlohmann::ordered_json out;
  out["values"] = report.values;
  out["checks"] = std::move(checks);
  out["all_pass"] = report.all_pass;
  return out;
}

}  // namespace thermwm::app
