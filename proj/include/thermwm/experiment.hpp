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

#ifndef THERMWM_EXPERIMENT_HPP_
#define THERMWM_EXPERIMENT_HPP_

#include <string>

#include <json.hpp>

#include "thermwm/optomech.hpp"
#include "thermwm/thermal.hpp"

namespace thermwm {

namespace constants {
/// Reduced Planck constant, J s.
inline constexpr double kHbar = 1.054571817e-34;
/// Boltzmann constant, J / K.
inline constexpr double kBoltzmann = 1.380649e-23;
}  // namespace constants

/// Mechanical resonator and cavity, SI units.
struct DeviceParams {
  double f_m_hz = 4.5e3;
  double mass_kg = 100e-12;
  double temperature_k = 300.0;
  /// Cavity decay rate in units of the mechanical angular frequency.
  double kappa_over_omega_m = 1.2e4;
  /// Informational only.
  double finesse = 2800.0;
  /// Informational only.
  double cavity_length_m = 0.5e-3;

  /// Mechanical angular frequency 2 pi f_m.
  double omega_m() const;
  /// Cavity decay rate in rad/s.
  double kappa() const { return kappa_over_omega_m * omega_m(); }

  /// Throws ConfigError unless frequency, mass, kappa, finesse and cavity
  /// length are positive and the temperature is non-negative.
  void validate() const;

  /// Reads {"f_m_hz", "mass_kg", "temperature_k", "kappa_over_omega_m",
  /// "finesse", "cavity_length_m"}; missing keys keep their defaults and
  /// unknown keys are rejected with ConfigError.
  static DeviceParams from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// 4.5 kHz, 100 ng resonator at 300 K in a kappa = 1.2e4 omega_m cavity.
DeviceParams phase_shifter_device();
/// The same resonator in a kappa = 2e4 omega_m cavity.
DeviceParams displaced_mirror_device();

struct ThermalDerivation {
  Thermal thermal;
  /// hbar omega_m / (k_B T); +inf at T = 0.
  double energy_ratio;
  /// Zero-point fluctuation sqrt(hbar / (2 m omega_m)), m.
  double sigma_m;
  /// Thermal fluctuation sqrt((1+z)/(1-z)) sigma, m.
  double max_amp_m;
};

ThermalDerivation derive_thermal(const DeviceParams& dev);

/// Optomechanical parameters for a device; z and sigma come from
/// derive_thermal unless `thermal` overrides z.
OptomechParams device_optomech_params(const DeviceParams& dev, double k,
                                      const Thermal* thermal = nullptr);

/// Photon arrival density kappa e^{-kappa t} (R |xi|^2 + Omega^2) / (4 P) in 1/s,
/// with kappa in rad/s and P from the closed form. Throws DegenerateError when P = 0.
double arrival_density(double t, const OptomechParams& p, double kappa, Scheme scheme);

enum class ProbabilityMethod { kClosedForm, kQuadrature };

struct QuadratureEstimate {
  double value;
  /// Error estimate reported by the adaptive rule.
  double error;
  /// Bound on the integral beyond the cutoff t = 50 / kappa.
  double cutoff_bound;
};

/// Overall success probability, the arrival-weighted mean of
/// (R |xi|^2 + Omega^2) / 4.
double overall_probability(const OptomechParams& p, double kappa, Scheme scheme,
                           ProbabilityMethod method = ProbabilityMethod::kClosedForm);
QuadratureEstimate overall_probability_quadrature(const OptomechParams& p, double kappa,
                                                  Scheme scheme);

/// Integral of the arrival density over [0, 50 / kappa].
QuadratureEstimate arrival_density_integral(const OptomechParams& p, double kappa, Scheme scheme);

struct AmplificationReport {
  double P;
  /// Arrival-averaged postselected displacement, m (or units of sigma).
  double q_bar;
  /// q_bar / (4 k sigma).
  double Q;
  /// sqrt((1+z)/(1-z)) sigma.
  double max_thermal_amp;
  double quadrature_error;
};

AmplificationReport averaged_displacement(const OptomechParams& p, double kappa, Scheme scheme);

struct FeasibilityReport {
  double P;
  /// P kappa, Hz.
  double count_rate_hz;
  double dark_count_rate_hz;
  bool feasible;
  /// Smallest k with P(k) kappa >= dark counts, using the full P.
  double k_min;
  /// The same bound keeping only the part of P proportional to k^2.
  double k_min_thermal_only;
  /// Coefficient of k^2 in P.
  double k2_coefficient;
};

FeasibilityReport feasibility_check(const OptomechParams& p, double kappa, Scheme scheme,
                                    double dark_count_rate_hz);

}  // namespace thermwm

#endif  // THERMWM_EXPERIMENT_HPP_
