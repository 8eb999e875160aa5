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

#ifndef THERMWM_APP_FIGURES_HPP_
#define THERMWM_APP_FIGURES_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thermwm/app/run_config.hpp"

namespace thermwm::app {

/// Plot-ready data: named columns plus the full parameter set used.
struct Table {
  std::string name;
  std::vector<std::pair<std::string, double>> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  /// Derived diagnostics such as per-curve normalization integrals.
  std::vector<std::pair<std::string, double>> diagnostics;
};

const std::vector<std::string>& figure_names();

/// Builds a figure table. Unknown names or override keys raise ConfigError.
Table make_figure(std::string_view name, const std::map<std::string, double>& overrides,
                  std::optional<std::size_t> points = std::nullopt);

/// One comment line with parameters and diagnostics, one header line, then rows.
std::string to_csv(const Table& table);
std::string to_json(const Table& table);
std::string render(const Table& table, OutputFormat format);

}  // namespace thermwm::app

#endif  // THERMWM_APP_FIGURES_HPP_
