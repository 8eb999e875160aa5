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

#ifndef THERMWM_THERMAL_HPP_
#define THERMWM_THERMAL_HPP_

namespace thermwm {

/// Boltzmann factor z = exp(-hbar*omega/(k_B*T)) of a harmonic mode.
///
/// Near room temperature 1 - z is of order 1e-9, so the complement is stored
/// alongside z rather than recomputed by subtraction.
class Thermal {
 public:
  /// Ground state (z = 0).
  Thermal() = default;

  /// Throws ConfigError unless 0 <= z < 1.
  static Thermal from_z(double z);

  /// Builds z = exp(-x) from x = hbar*omega/(k_B*T) > 0; x = +inf gives z = 0.
  static Thermal from_energy_ratio(double x);

  double z() const { return z_; }
  double one_minus_z() const { return one_minus_z_; }

  /// (1 + z) / (1 - z), the squared ratio of thermal to zero-point spread.
  double fluctuation_ratio() const { return (1.0 + z_) / one_minus_z_; }

  /// Mean phonon number z / (1 - z).
  double mean_occupation() const { return z_ / one_minus_z_; }

 private:
  Thermal(double z, double one_minus_z) : z_(z), one_minus_z_(one_minus_z) {}

  double z_ = 0.0;
  double one_minus_z_ = 1.0;
};

}  // namespace thermwm

#endif  // THERMWM_THERMAL_HPP_
