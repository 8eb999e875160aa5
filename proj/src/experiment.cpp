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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "thermwm/errors.hpp"

namespace thermwm {

double DeviceParams::omega_m() const { return 2.0 * std::numbers::pi * f_m_hz; }

void DeviceParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string(name) + " must be positive");
  };
  positive(f_m_hz, "f_m_hz");
  positive(mass_kg, "mass_kg");
  positive(kappa_over_omega_m, "kappa_over_omega_m");
  positive(finesse, "finesse");
  positive(cavity_length_m, "cavity_length_m");
  if (!(temperature_k >= 0.0) || !std::isfinite(temperature_k)) {
    throw ConfigError("temperature_k must be >= 0");
  }
}

DeviceParams DeviceParams::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("device parameters must be a JSON object");
  static const std::set<std::string> known{"f_m_hz",  "mass_kg",        "temperature_k",
                                           "kappa_over_omega_m", "finesse", "cavity_length_m"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw ConfigError("unknown device parameter '" + key + "'");
    if (!value.is_number()) throw ConfigError("device parameter '" + key + "' must be a number");
  }
  DeviceParams d;
  auto read = [&](const char* key, double& field) {
    if (j.contains(key)) field = j.at(key).get<double>();
  };
  read("f_m_hz", d.f_m_hz);
  read("mass_kg", d.mass_kg);
  read("temperature_k", d.temperature_k);
  read("kappa_over_omega_m", d.kappa_over_omega_m);
  read("finesse", d.finesse);
  read("cavity_length_m", d.cavity_length_m);
  d.validate();
  return d;
}

nlohmann::json DeviceParams::to_json() const {
  return {{"f_m_hz", f_m_hz},
          {"mass_kg", mass_kg},
          {"temperature_k", temperature_k},
          {"kappa_over_omega_m", kappa_over_omega_m},
          {"finesse", finesse},
          {"cavity_length_m", cavity_length_m}};
}

DeviceParams phase_shifter_device() { return DeviceParams{}; }

DeviceParams displaced_mirror_device() {
  DeviceParams d;
  d.kappa_over_omega_m = 2e4;
  d.finesse = 3000.0;
  d.cavity_length_m = 0.3e-3;
  return d;
}

ThermalDerivation derive_thermal(const DeviceParams& dev) {
  dev.validate();
  const double omega = dev.omega_m();
  const double ratio = dev.temperature_k == 0.0
                           ? std::numeric_limits<double>::infinity()
                           : constants::kHbar * omega / (constants::kBoltzmann * dev.temperature_k);
  const Thermal thermal = Thermal::from_energy_ratio(ratio);
  const double sigma = std::sqrt(constants::kHbar / (2.0 * dev.mass_kg * omega));
  return {thermal, ratio, sigma, std::sqrt(thermal.fluctuation_ratio()) * sigma};
}

OptomechParams device_optomech_params(const DeviceParams& dev, double k, const Thermal* thermal) {
  const ThermalDerivation d = derive_thermal(dev);
  OptomechParams p;
  p.k = k;
  p.omega_m = dev.omega_m();
  p.thermal = thermal ? *thermal : d.thermal;
  p.sigma = d.sigma_m;
  return p;
}

namespace {

constexpr double kCutoff = 50.0;

// (R |xi|^2 + Omega^2) / 4 at dimensionless time x.
double click_weight(double x, const OptomechParams& p, Scheme scheme) {
  OptomechParams unit = p;
  unit.omega_m = 1.0;
  const SchemeKernel kn = kernel(x, unit, scheme);
  return 0.25 * (p.thermal.fluctuation_ratio() * std::norm(kn.xi) + kn.omega * kn.omega);
}

double click_weight_bound(const OptomechParams& p, Scheme scheme) {
  const double omega_max =
      scheme == Scheme::kPhaseShifter ? std::abs(p.theta) : 4.0 * std::abs(p.alpha) * p.k;
  return 0.25 * (p.thermal.fluctuation_ratio() * 4.0 * p.k * p.k + omega_max * omega_max);
}

// Integral of e^{-u} f(u) over [0, kCutoff].
template <class F>
QuadratureEstimate integrate_decaying(F f, double bound) {
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      [&](double u) { return std::exp(-u) * f(u); }, 0.0, kCutoff, 30, 1e-13, &error);
  return {value, error, std::exp(-kCutoff) * bound};
}

double closed_form_probability(const OptomechParams& p, double kappa_tilde, Scheme scheme) {
  const double kt2 = kappa_tilde * kappa_tilde;
  const double r = p.thermal.fluctuation_ratio();
  const double thermal_part = 0.5 * r * p.k * p.k / (kt2 + 1.0);
  if (scheme == Scheme::kPhaseShifter) return thermal_part + 0.25 * p.theta * p.theta;
  // Omega = 2 |alpha| k [sin(beta) (1 - cos x) + cos(beta) sin x]; Laplace means
  // of its square written without cancellation at large kappa.
  const double s = std::sin(std::arg(p.alpha));
  const double c = std::cos(std::arg(p.alpha));
  const double d = (kt2 + 1.0) * (kt2 + 4.0);
  const double mean_sq = s * s * 6.0 / d + 2.0 * s * c * 3.0 * kappa_tilde / d + c * c * 2.0 / (kt2 + 4.0);
  const double a = std::abs(p.alpha) * p.k;
  return thermal_part + 0.25 * 4.0 * a * a * mean_sq;
}

double kappa_tilde_of(const OptomechParams& p, double kappa) {
  if (!(kappa > 0.0)) throw ConfigError("kappa must be positive");
  return kappa / p.omega_m;
}

}  // namespace

double overall_probability(const OptomechParams& p, double kappa, Scheme scheme,
                           ProbabilityMethod method) {
  if (method == ProbabilityMethod::kQuadrature) {
    return overall_probability_quadrature(p, kappa, scheme).value;
  }
  return closed_form_probability(p, kappa_tilde_of(p, kappa), scheme);
}

QuadratureEstimate overall_probability_quadrature(const OptomechParams& p, double kappa,
                                                  Scheme scheme) {
  const double kt = kappa_tilde_of(p, kappa);
  return integrate_decaying([&](double u) { return click_weight(u / kt, p, scheme); },
                            click_weight_bound(p, scheme));
}

double arrival_density(double t, const OptomechParams& p, double kappa, Scheme scheme) {
  const double kt = kappa_tilde_of(p, kappa);
  const double prob = closed_form_probability(p, kt, scheme);
  if (!(prob > 0.0)) throw DegenerateError("overall probability vanishes");
  return kappa * std::exp(-kappa * t) * click_weight(p.omega_m * t, p, scheme) / prob;
}

QuadratureEstimate arrival_density_integral(const OptomechParams& p, double kappa, Scheme scheme) {
  const double kt = kappa_tilde_of(p, kappa);
  const double prob = closed_form_probability(p, kt, scheme);
  if (!(prob > 0.0)) throw DegenerateError("overall probability vanishes");
  QuadratureEstimate e = integrate_decaying(
      [&](double u) { return click_weight(u / kt, p, scheme) / prob; },
      click_weight_bound(p, scheme) / prob);
  return e;
}

AmplificationReport averaged_displacement(const OptomechParams& p, double kappa, Scheme scheme) {
  const double kt = kappa_tilde_of(p, kappa);
  const double prob = closed_form_probability(p, kt, scheme);
  if (!(prob > 0.0)) throw DegenerateError("overall probability vanishes");
  const double ceiling = std::sqrt(p.thermal.fluctuation_ratio()) * p.sigma;
  const QuadratureEstimate e = integrate_decaying(
      [&](double u) {
        const double x = u / kt;
        return click_weight(x, p, scheme) * mean_displacement(x / p.omega_m, p, scheme).q_shift;
      },
      click_weight_bound(p, scheme) * ceiling);
  const double q_bar = e.value / prob;
  return {prob, q_bar, q_bar / (4.0 * p.k * p.sigma), ceiling, e.error / prob};
}

FeasibilityReport feasibility_check(const OptomechParams& p, double kappa, Scheme scheme,
                                    double dark_count_rate_hz) {
  if (!(dark_count_rate_hz >= 0.0)) throw ConfigError("dark count rate must be >= 0");
  const double kt = kappa_tilde_of(p, kappa);
  OptomechParams unit = p;
  unit.k = 1.0;
  // P is affine in k^2: theta^2/4 survives at k = 0 in scheme 1, nothing in scheme 2.
  const double constant = scheme == Scheme::kPhaseShifter ? 0.25 * p.theta * p.theta : 0.0;
  const double coeff = closed_form_probability(unit, kt, scheme) - constant;
  const double prob = closed_form_probability(p, kt, scheme);
  FeasibilityReport r{};
  r.P = prob;
  r.count_rate_hz = prob * kappa;
  r.dark_count_rate_hz = dark_count_rate_hz;
  r.feasible = r.count_rate_hz >= dark_count_rate_hz;
  r.k2_coefficient = coeff;
  const double needed = dark_count_rate_hz / kappa;
  r.k_min = needed <= constant ? 0.0 : std::sqrt((needed - constant) / coeff);
  r.k_min_thermal_only = std::sqrt(needed / coeff);
  return r;
}

}  // namespace thermwm
