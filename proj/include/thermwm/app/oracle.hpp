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

#ifndef THERMWM_APP_ORACLE_HPP_
#define THERMWM_APP_ORACLE_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace thermwm::app {

struct OracleCheck {
  std::string name;
  double residual;
  double threshold;
  bool pass;
};

const std::vector<std::string>& oracle_suites();

/// Runs one suite (wm, optomech or dissipation). Unknown names raise
/// ConfigError.
std::vector<OracleCheck> run_oracle_suite(std::string_view suite);

/// One line per check followed by a summary line.
std::string format_oracle_report(std::string_view suite, const std::vector<OracleCheck>& checks);

}  // namespace thermwm::app

#endif  // THERMWM_APP_ORACLE_HPP_
