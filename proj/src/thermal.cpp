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

#include "thermwm/thermal.hpp"

#include <cmath>
#include <string>

#include "thermwm/errors.hpp"

namespace thermwm {

Thermal Thermal::from_z(double z) {
  if (!(z >= 0.0 && z < 1.0)) {
    throw ConfigError("thermal parameter z must lie in [0, 1), got " +
                      std::to_string(z));
  }
  return Thermal(z, 1.0 - z);
}

Thermal Thermal::from_energy_ratio(double x) {
  if (!(x > 0.0)) {
    throw ConfigError("energy ratio hbar*omega/(k_B*T) must be positive");
  }
  if (std::isinf(x)) return Thermal(0.0, 1.0);
  return Thermal(std::exp(-x), -std::expm1(-x));
}

}  // namespace thermwm
