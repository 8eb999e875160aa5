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

// Command-line front end: figure data, headline numbers and oracle suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thermwm/app/figures.hpp"
#include "thermwm/app/headline.hpp"
#include "thermwm/app/oracle.hpp"
#include "thermwm/app/run_config.hpp"
#include "thermwm/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOracleFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitNumericalError = 3;

thermwm::DeviceParams load_device(const std::string& path, thermwm::DeviceParams fallback) {
  if (path.empty()) return fallback;
  std::ifstream in(path);
  if (!in) throw thermwm::ConfigError("cannot read device file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw thermwm::ConfigError("device file '" + path + "' is not valid JSON: " + e.what());
  }
  return thermwm::DeviceParams::from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace thermwm::app;
  CLI::App app{"Thermal-pointer weak measurement and optomechanical amplification"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "csv";
  std::vector<std::string> sets;
  std::size_t points = 0;
  std::string out_path;

  auto* figure = app.add_subcommand("figure", "Write the data behind one figure");
  figure->add_option("name", cfg.target, "Figure name")->required();
  figure->add_option("--out", out_path, "Output file");
  figure->add_option("--format", format, "csv or json");
  figure->add_option("--points", points, "Grid resolution");
  figure->add_option("--set", sets, "Parameter override key=value")->take_all();

  std::optional<double> temperature;
  std::optional<double> z_override;
  double k = 0.005;
  double theta = 0.005;
  double dark = 2.0;
  std::string device1, device2;
  auto* headline = app.add_subcommand("headline", "Room-temperature amplification report");
  headline->add_option("--out", out_path, "Output file");
  headline->add_option("--temperature", temperature, "Temperature in K; z is derived from it");
  headline->add_option("--z", z_override, "Boltzmann factor z");
  headline->add_option("--k", k, "Optomechanical coupling g/omega_m");
  headline->add_option("--theta", theta, "Phase shifter angle (scheme 1)");
  headline->add_option("--dark-count-rate", dark, "Detector dark count rate in Hz");
  headline->add_option("--device1", device1, "Device JSON for scheme 1");
  headline->add_option("--device2", device2, "Device JSON for scheme 2");

  auto* oracle = app.add_subcommand("oracle", "Run closed-form vs brute-force cross-checks");
  oracle->add_option("suite", cfg.target, "wm, optomech or dissipation")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (figure->parsed()) {
      cfg.command = "figure";
      cfg.format = parse_format(format);
      for (const auto& s : sets) {
        const auto [key, value] = parse_override(s);
        cfg.overrides[key] = value;
      }
      if (points != 0) cfg.points = points;
      if (!out_path.empty()) cfg.out_path = out_path;
      const Table table = make_figure(cfg.target, cfg.overrides, cfg.points);
      const std::string name = cfg.target + "." + std::string(format_extension(cfg.format));
      write_output(resolve_output_path(cfg, name), render(table, cfg.format));
      return kExitOk;
    }
    if (headline->parsed()) {
      cfg.command = "headline";
      if (!out_path.empty()) cfg.out_path = out_path;
      HeadlineOptions options;
      options.temperature_k = temperature;
      options.z = z_override;
      options.k = k;
      options.theta = theta;
      options.dark_count_rate_hz = dark;
      options.phase_shifter = load_device(device1, options.phase_shifter);
      options.displaced_mirror = load_device(device2, options.displaced_mirror);
      const HeadlineReport report = compute_headline(options);
      write_output(resolve_output_path(cfg, "headline.json"), to_json(report).dump(2) + "\n");
      return kExitOk;
    }
    cfg.command = "oracle";
    const auto checks = run_oracle_suite(cfg.target);
    std::cout << format_oracle_report(cfg.target, checks);
    for (const auto& c : checks) {
      if (!c.pass) return kExitOracleFailure;
    }
    return kExitOk;
  } catch (const thermwm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const thermwm::Error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumericalError;
  }
}
