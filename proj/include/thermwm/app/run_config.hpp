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

#ifndef THERMWM_APP_RUN_CONFIG_HPP_
#define THERMWM_APP_RUN_CONFIG_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace thermwm::app {

enum class OutputFormat { kCsv, kJson };

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "THERMWM_OUT_DIR";

struct RunConfig {
  /// figure, headline or oracle.
  std::string command;
  /// Figure name or oracle suite.
  std::string target;
  std::map<std::string, double> overrides;
  std::optional<std::string> out_path;
  OutputFormat format = OutputFormat::kCsv;
  std::optional<std::size_t> points;
};

/// Splits "key=value" and parses the value as a finite double. Throws
/// ConfigError on malformed input.
std::pair<std::string, double> parse_override(std::string_view text);

OutputFormat parse_format(std::string_view text);
std::string_view format_extension(OutputFormat format);

/// Resolves the path a command writes to: --out if given, else
/// $THERMWM_OUT_DIR/<default_name> if the variable is set, else empty
/// (meaning standard output).
std::string resolve_output_path(const RunConfig& cfg, const std::string& default_name);

/// Writes to the resolved path, or to standard output when it is empty.
/// Throws ConfigError when the file cannot be written.
void write_output(const std::string& path, const std::string& content);

}  // namespace thermwm::app

#endif  // THERMWM_APP_RUN_CONFIG_HPP_
