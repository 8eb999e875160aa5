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

#include "thermwm/app/figures.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <set>

#include <fmt/format.h>
#include <json.hpp>

#include "thermwm/app/headline.hpp"
#include "thermwm/dissipation.hpp"
#include "thermwm/errors.hpp"
#include "thermwm/experiment.hpp"
#include "thermwm/optomech.hpp"

namespace thermwm::app {

namespace {

constexpr std::size_t kDefaultCurvePoints = 2000;
constexpr std::size_t kDefaultGridPoints = 101;

// Records every parameter a figure reads so unknown overrides can be rejected
// and the full set, in key order, written next to the data.
class ParameterSet {
 public:
  explicit ParameterSet(const std::map<std::string, double>& overrides) : overrides_(overrides) {}

  double get(const std::string& key, double fallback) {
    used_.insert(key);
    const auto it = overrides_.find(key);
    const double v = it == overrides_.end() ? fallback : it->second;
    resolved_[key] = v;
    return v;
  }

  std::vector<std::pair<std::string, double>> finish() const {
    for (const auto& [key, value] : overrides_) {
      if (!used_.contains(key)) throw ConfigError("unknown parameter '" + key + "' for this figure");
    }
    return {resolved_.begin(), resolved_.end()};
  }

 private:
  const std::map<std::string, double>& overrides_;
  std::set<std::string> used_;
  std::map<std::string, double> resolved_;
};

std::size_t resolve_points(std::optional<std::size_t> points, std::size_t fallback) {
  const std::size_t n = points.value_or(fallback);
  if (n < 2) throw ConfigError("grid resolution must be at least 2 points");
  return n;
}

// x_max (i + 1) / n for i < n; skips x = 0 where some forms are 0/0.
std::vector<double> open_grid(double x_max, std::size_t n) {
  if (!(x_max > 0.0)) throw ConfigError("x_max must be positive");
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = x_max * static_cast<double>(i + 1) / n;
  return xs;
}

std::vector<double> closed_grid(double lo, double hi, std::size_t n) {
  if (!(hi > lo)) throw ConfigError("grid upper bound must exceed the lower bound");
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  return xs;
}

std::string curve_label(const char* prefix, double v) { return fmt::format("{}_{:g}", prefix, v); }

OptomechParams unit_params(double k, double z) {
  OptomechParams p;
  p.k = k;
  p.thermal = Thermal::from_z(z);
  p.validate();
  return p;
}

Table fig2a(ParameterSet& ps, std::optional<std::size_t> points) {
  OptomechParams p = unit_params(ps.get("k", 0.005), ps.get("z", 0.9));
  p.theta = ps.get("theta", 0.0005);
  const double x_max = ps.get("x_max", 0.1);
  Table t{"fig2a", ps.finish(), {"omega_m_t", "q_over_sigma", "q_small_time_over_sigma"}, {}, {}};
  for (double x : open_grid(x_max, resolve_points(points, kDefaultCurvePoints))) {
    t.rows.push_back({x, mean_displacement(x, p, Scheme::kPhaseShifter).q_shift,
                      small_time_q(x, p, Scheme::kPhaseShifter)});
  }
  return t;
}

Table fig2b(ParameterSet& ps, std::optional<std::size_t> points) {
  OptomechParams p = unit_params(ps.get("k", 0.005), ps.get("z", 0.9));
  p.theta = ps.get("theta", 0.0005);
  const double x = p.theta / (std::sqrt(p.thermal.fluctuation_ratio()) * p.k);
  Table t{"fig2b", ps.finish(), {"n", "q_over_sigma"}, {}, {{"omega_m_t", x}}};
  const std::size_t count = resolve_points(points, kDefaultGridPoints);
  for (std::size_t n = 0; n < count; ++n) {
    t.rows.push_back({static_cast<double>(n), per_n_small_time_q(n, x, p)});
  }
  return t;
}

Table fig3a(ParameterSet& ps, std::optional<std::size_t> points) {
  OptomechParams p = unit_params(ps.get("k", 0.005), ps.get("z", 0.9));
  const double root_r = std::sqrt(p.thermal.fluctuation_ratio());
  const double a1 = ps.get("alpha1_abs", 0.5 * root_r);
  const double b1 = ps.get("beta1", 0.0);
  const double a2 = ps.get("alpha2_abs", 10.0 * root_r);
  const double b2 = ps.get("beta2", std::numbers::pi / 2.0);
  const double x_max = ps.get("x_max", 0.1);
  Table t{"fig3a", ps.finish(), {"omega_m_t", "q_set1_over_sigma", "q_set2_over_sigma"}, {}, {}};
  OptomechParams p1 = p, p2 = p;
  p1.alpha = std::polar(a1, b1);
  p2.alpha = std::polar(a2, b2);
  for (double x : open_grid(x_max, resolve_points(points, kDefaultCurvePoints))) {
    t.rows.push_back({x, mean_displacement(x, p1, Scheme::kDisplacedMirror).q_shift,
                      mean_displacement(x, p2, Scheme::kDisplacedMirror).q_shift});
  }
  return t;
}

Table fig3b(ParameterSet& ps, std::optional<std::size_t> points) {
  OptomechParams p = unit_params(ps.get("k", 0.005), ps.get("z", 0.9));
  const double x = ps.get("omega_m_t", 0.001);
  const double alpha_max = ps.get("alpha_max", 50.0);
  Table t{"fig3b", ps.finish(), {"alpha_abs", "beta", "q_over_sigma"}, {}, {}};
  const std::size_t n = resolve_points(points, kDefaultGridPoints);
  for (double a : closed_grid(0.0, alpha_max, n)) {
    for (double b : closed_grid(-std::numbers::pi, std::numbers::pi, n)) {
      p.alpha = std::polar(a, b);
      t.rows.push_back({a, b, mean_displacement(x, p, Scheme::kDisplacedMirror).q_shift});
    }
  }
  return t;
}

template <class Q>
Table gamma_family(const char* name, ParameterSet& ps, std::optional<std::size_t> points,
                   const DissipationParams& base, double x_max, const std::vector<double>& gammas,
                   Q q_of) {
  Table t{name, ps.finish(), {"omega_m_t"}, {}, {}};
  for (double g : gammas) t.columns.push_back(curve_label("q_over_sigma_gamma", g));
  for (double x : open_grid(x_max, resolve_points(points, kDefaultCurvePoints))) {
    std::vector<double> row{x};
    for (double g : gammas) {
      DissipationParams dp = base;
      dp.gamma = g;
      row.push_back(q_of(x, dp));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table fig4a(ParameterSet& ps, std::optional<std::size_t> points) {
  DissipationParams dp;
  dp.base = unit_params(ps.get("k", 0.005), ps.get("z", kRoomTemperatureZ));
  dp.base.theta = ps.get("theta", 0.005);
  const double x_max = ps.get("x_max", 5e-4);
  return gamma_family("fig4a", ps, points, dp, x_max, {0.0, 0.005, 50.0, 5e3}, taylor_q_scheme1);
}

Table fig5a(ParameterSet& ps, std::optional<std::size_t> points) {
  DissipationParams dp;
  dp.base = unit_params(ps.get("k", 0.005), ps.get("z", kRoomTemperatureZ));
  const double root_r = std::sqrt(dp.base.thermal.fluctuation_ratio());
  const double alpha_abs = ps.get("alpha_abs", 0.5 * root_r);
  dp.base.alpha = std::polar(alpha_abs, ps.get("beta", 0.0));
  const double x_max = ps.get("x_max", 1e-3);
  return gamma_family("fig5a", ps, points, dp, x_max, {0.0, 0.005, 0.5, 50.0}, taylor_q_scheme2);
}

// Arrival densities per unit omega_m t for several cavity decay rates.
Table density_family(const char* name, ParameterSet& ps, std::optional<std::size_t> points,
                     const OptomechParams& p, Scheme scheme, double x_max,
                     const std::vector<double>& kappas) {
  Table t{name, ps.finish(), {"omega_m_t"}, {}, {}};
  for (double kt : kappas) {
    t.columns.push_back(curve_label("density_kappa_over_omega_m", kt));
    t.diagnostics.emplace_back(curve_label("integral_kappa_over_omega_m", kt),
                               arrival_density_integral(p, kt * p.omega_m, scheme).value);
  }
  for (double x : closed_grid(0.0, x_max, resolve_points(points, kDefaultCurvePoints))) {
    std::vector<double> row{x};
    for (double kt : kappas) row.push_back(arrival_density(x, p, kt * p.omega_m, scheme));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table fig4b(ParameterSet& ps, std::optional<std::size_t> points) {
  OptomechParams p = unit_params(ps.get("k", 0.005), ps.get("z", kRoomTemperatureZ));
  p.theta = ps.get("theta", 0.005);
  const double x_max = ps.get("x_max", 0.05);
  return density_family("fig4b", ps, points, p, Scheme::kPhaseShifter, x_max, {1.2e2, 1.2e3, 1.2e4});
}

Table fig5b(ParameterSet& ps, std::optional<std::size_t> points) {
  OptomechParams p = unit_params(ps.get("k", 0.005), ps.get("z", kRoomTemperatureZ));
  const double root_r = std::sqrt(p.thermal.fluctuation_ratio());
  const double alpha_abs = ps.get("alpha_abs", 0.5 * root_r);
  p.alpha = std::polar(alpha_abs, ps.get("beta", 0.0));
  const double x_max = ps.get("x_max", 0.03);
  return density_family("fig5b", ps, points, p, Scheme::kDisplacedMirror, x_max, {2e2, 2e3, 2e4});
}

using Builder = std::function<Table(ParameterSet&, std::optional<std::size_t>)>;

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> table{
      {"fig2a", fig2a}, {"fig2b", fig2b}, {"fig3a", fig3a}, {"fig3b", fig3b},
      {"fig4a", fig4a}, {"fig4b", fig4b}, {"fig5a", fig5a}, {"fig5b", fig5b}};
  return table;
}

std::string number(double v) { return fmt::format("{}", v); }

}  // namespace

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, builder] : builders()) out.push_back(name);
    return out;
  }();
  return names;
}

Table make_figure(std::string_view name, const std::map<std::string, double>& overrides,
                  std::optional<std::size_t> points) {
  const auto it = builders().find(std::string(name));
  if (it == builders().end()) throw ConfigError("unknown figure '" + std::string(name) + "'");
  ParameterSet ps(overrides);
  return it->second(ps, points);
}

std::string to_csv(const Table& table) {
  std::string out = "# figure=" + table.name;
  for (const auto& [key, value] : table.parameters) out += " " + key + "=" + number(value);
  for (const auto& [key, value] : table.diagnostics) out += " " + key + "=" + number(value);
  out += "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out += (i ? "," : "") + table.columns[i];
  }
  out += "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += number(row[i]);
    }
    out += "\n";
  }
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json j;
  j["figure"] = table.name;
  j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.parameters) j["parameters"][key] = value;
  j["diagnostics"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.diagnostics) j["diagnostics"][key] = value;
  j["columns"] = table.columns;
  j["rows"] = table.rows;
  return j.dump() + "\n";
}

std::string render(const Table& table, OutputFormat format) {
  return format == OutputFormat::kCsv ? to_csv(table) : to_json(table);
}

}  // namespace thermwm::app
