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

#include "thermwm/app/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <fmt/format.h>

#include "thermwm/dissipation.hpp"
#include "thermwm/errors.hpp"
#include "thermwm/optomech.hpp"
#include "thermwm/weak_measurement.hpp"

namespace thermwm::app {

namespace {

OracleCheck make_check(std::string name, double residual, double threshold) {
  return {std::move(name), residual, threshold, residual <= threshold};
}

std::vector<OracleCheck> wm_suite() {
  std::vector<OracleCheck> out;
  constexpr double a1 = -0.5, a2 = 0.5, sigma = 1.0;
  for (double z : {0.0, 0.3, 0.6, 0.9}) {
    const Thermal th = Thermal::from_z(z);
    const PointerSpec pointer = ThermalPointer{th};
    for (double eta : {0.005, 0.05, 0.2}) {
      const ModeSpace space(adequate_dimension(pointer, std::max(std::abs(a1), std::abs(a2)) * eta));
      for (double offset : {0.01, 0.1}) {
        const auto tag = fmt::format("z={} eta={} offset={}", z, eta, offset);

        const WMSetup ph = WMSetup::phase_offset(a1, a2, eta / sigma, sigma, offset);
        const MomentResult bq = brute_force_pointer_moments(ph, pointer, space);
        out.push_back(make_check(
            "exact q vs brute force, " + tag,
            std::abs(bq.q_shift - exact_q_thermal_imaginary(th, eta, offset, a1, a2, sigma)) / sigma,
            1e-7));

        const WMSetup re = WMSetup::real_offset(a1, a2, eta / sigma, sigma, offset);
        const MomentResult bp = brute_force_pointer_moments(re, pointer, space);
        out.push_back(make_check(
            "exact p vs brute force, " + tag,
            std::abs(bp.p_shift - exact_p_thermal_real(th, eta, offset, a1, a2, sigma)) * sigma,
            1e-7));

        out.push_back(make_check(
            "success probability vs brute force, " + tag,
            std::max(std::abs(*bq.success_prob - thermal_success_probability(ph, th)),
                     std::abs(*bp.success_prob - thermal_success_probability(re, th))),
            1e-10));
        out.push_back(make_check("phase offset leaves p unchanged, " + tag,
                                 std::abs(bq.p_shift) * sigma, 1e-9));
        out.push_back(make_check("real offset leaves q unchanged, " + tag,
                                 std::abs(bp.q_shift) / sigma, 1e-9));
      }
    }
  }
  return out;
}

std::vector<double> time_grid() {
  std::vector<double> ts;
  for (int i = 1; i <= 20; ++i) ts.push_back(0.25 * i);
  return ts;
}

std::vector<OracleCheck> optomech_suite() {
  std::vector<OracleCheck> out;
  OptomechParams p;
  p.k = 0.05;
  p.thermal = Thermal::from_z(0.5);
  p.theta = 0.1;
  OptomechParams p2 = p;
  p2.theta = 0.0;
  p2.alpha = std::polar(0.6, 0.4);

  for (const auto& [scheme, params, label] :
       {std::tuple{Scheme::kPhaseShifter, p, "scheme 1"},
        std::tuple{Scheme::kDisplacedMirror, p2, "scheme 2"}}) {
    const ModeSpace space(adequate_optomech_dimension(params, scheme, Frame::kDisplaced));
    double worst_q = 0.0, worst_prob = 0.0;
    for (double t : time_grid()) {
      const DisplacementResult exact = mean_displacement(t, params, scheme);
      const DisplacementResult brute = brute_force_moments(t, params, scheme, space);
      worst_q = std::max(worst_q, std::abs(exact.q_shift - brute.q_shift) / params.sigma);
      worst_prob = std::max(worst_prob, std::abs(exact.success_prob - brute.success_prob));
    }
    out.push_back(make_check(std::string(label) + ": closed-form shift vs brute force, 20 times",
                             worst_q, 1e-7));
    out.push_back(make_check(
        std::string(label) + ": success probability vs brute force, 20 times", worst_prob, 1e-8));
  }

  const ModeSpace displaced(adequate_optomech_dimension(p2, Scheme::kDisplacedMirror, Frame::kDisplaced));
  const ModeSpace lab(adequate_optomech_dimension(p2, Scheme::kDisplacedMirror, Frame::kLab));
  double worst_frame = 0.0;
  for (double t : time_grid()) {
    const double d = brute_force_moments(t, p2, Scheme::kDisplacedMirror, displaced).q_shift;
    const double l = brute_force_moments(t, p2, Scheme::kDisplacedMirror, lab, Frame::kLab).q_shift;
    worst_frame = std::max(worst_frame, std::abs(d - l) / p2.sigma);
  }
  out.push_back(make_check("scheme 2: lab frame vs displaced frame, 20 times", worst_frame, 1e-8));
  return out;
}

double slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double lx = std::log(xs[i]), ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<OracleCheck> dissipation_suite() {
  std::vector<OracleCheck> out;
  DissipationParams dp;
  dp.base.k = 0.05;
  dp.base.thermal = Thermal::from_z(0.5);
  dp.base.theta = 0.1;
  const std::vector<double> ts{0.1, 0.25, 0.5};

  {
    const ModeSpace mirror(adequate_optomech_dimension(dp.base, Scheme::kPhaseShifter, Frame::kDisplaced));
    const auto results = postselected_q_from_master(ts, dp, Scheme::kPhaseShifter, mirror);
    double worst = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const auto exact = mean_displacement(ts[i], dp.base, Scheme::kPhaseShifter);
      worst = std::max(worst, std::abs(results[i].q_shift - exact.q_shift));
    }
    out.push_back(make_check("scheme 1, gamma=0: master equation vs closed form", worst, 1e-7));
  }
  {
    DissipationParams d2 = dp;
    d2.base.theta = 0.0;
    d2.base.alpha = std::polar(0.6, 0.4);
    const ModeSpace mirror(adequate_optomech_dimension(d2.base, Scheme::kDisplacedMirror, Frame::kLab));
    const auto results = postselected_q_from_master(ts, d2, Scheme::kDisplacedMirror, mirror);
    double worst = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      worst = std::max(worst, std::abs(results[i].q_shift - lab_frame_shift(ts[i], d2.base)));
    }
    out.push_back(make_check("scheme 2, gamma=0: master equation vs closed form", worst, 1e-7));
  }
  {
    DissipationParams d = dp;
    d.gamma = 0.1;
    const ModeSpace mirror(adequate_optomech_dimension(d.base, Scheme::kPhaseShifter, Frame::kDisplaced));
    const JointState rho0 = initial_joint_state(d, Scheme::kPhaseShifter, mirror);
    const Evolution ev = lindblad_step_integrate(rho0, 1.0, d);
    out.push_back(make_check("gamma=0.1: trace drift over omega_m t = 1", ev.trace_drift, 1e-9));
    out.push_back(make_check("gamma=0.1: negative eigenvalue at omega_m t = 1",
                             std::max(0.0, -ev.state.min_eigenvalue()), 1e-9));
  }
  {
    DissipationParams d;
    d.gamma = 0.1;
    d.base.k = 0.005;
    d.base.theta = 0.005;
    d.base.thermal = Thermal::from_z(0.5);
    const ModeSpace mirror(adequate_optomech_dimension(d.base, Scheme::kPhaseShifter, Frame::kDisplaced));
    std::vector<double> xs;
    for (int i = 0; i <= 4; ++i) xs.push_back(1e-3 * std::pow(10.0, i / 4.0));
    const auto results = postselected_q_from_master(xs, d, Scheme::kPhaseShifter, mirror);
    std::vector<double> errs;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      errs.push_back(std::abs(results[i].q_shift - taylor_q_scheme1(xs[i], d)));
    }
    const double s = slope(xs, errs);
    out.push_back(make_check(fmt::format("master vs small-time series, log-log slope {:.4f} (target 3)", s),
                             std::abs(s - 3.0), 0.5));
  }
  return out;
}

const std::map<std::string, std::vector<OracleCheck> (*)()>& suites() {
  static const std::map<std::string, std::vector<OracleCheck> (*)()> table{
      {"wm", wm_suite}, {"optomech", optomech_suite}, {"dissipation", dissipation_suite}};
  return table;
}

}  // namespace

const std::vector<std::string>& oracle_suites() {
  static const std::vector<std::string> names{"wm", "optomech", "dissipation"};
  return names;
}

std::vector<OracleCheck> run_oracle_suite(std::string_view suite) {
  const auto it = suites().find(std::string(suite));
  if (it == suites().end()) throw ConfigError("unknown oracle suite '" + std::string(suite) + "'");
  return it->second();
}

std::string format_oracle_report(std::string_view suite, const std::vector<OracleCheck>& checks) {
  std::string out;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    if (!c.pass) ++failed;
    out += fmt::format("{} {}: residual={:.3e} threshold={:.1e}\n", c.pass ? "PASS" : "FAIL", c.name,
                       c.residual, c.threshold);
  }
  out += fmt::format("suite {}: {} checks, {} failed\n", suite, checks.size(), failed);
  return out;
}

}  // namespace thermwm::app
