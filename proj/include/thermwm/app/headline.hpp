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

#ifndef THERMWM_APP_HEADLINE_HPP_
#define THERMWM_APP_HEADLINE_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thermwm/experiment.hpp"

namespace thermwm::app {

/// Boltzmann factor used for the room-temperature headline numbers unless a
/// temperature or z is given explicitly.
inline constexpr double kRoomTemperatureZ = 0.999999999;

struct HeadlineOptions {
  /// Overrides the device temperature; z is then derived from it.
  std::optional<double> temperature_k;
  /// Overrides z directly.
  std::optional<double> z;
  double k = 0.005;
  double theta = 0.005;
  double dark_count_rate_hz = 2.0;
  DeviceParams phase_shifter = phase_shifter_device();
  DeviceParams displaced_mirror = displaced_mirror_device();
};

struct HeadlineCheck {
  std::string name;
  double value;
  double expected;
  double rel_tolerance;
  bool pass;
};

struct HeadlineReport {
  nlohmann::ordered_json values;
  std::vector<HeadlineCheck> checks;
  bool all_pass;
};

HeadlineReport compute_headline(const HeadlineOptions& options);
nlohmann::ordered_json to_json(const HeadlineReport& report);

}  // namespace thermwm::app

#endif  // THERMWM_APP_HEADLINE_HPP_
