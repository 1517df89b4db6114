// Copyright 2026 The Quasimarket Project Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#include "quasimarket/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "quasimarket/errors.hpp"
#include "quasimarket/oracle.hpp"
#include "quasimarket/specfun.hpp"

namespace quasimarket::cli {

namespace {

using nlohmann::json;

void require_keys(const json& object, const char* name,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  for (const char* key : required)
    if (!object.contains(key))
      throw std::invalid_argument(std::string(name) + ": missing key '" +
                                  key + "'");
  for (const auto& item : object.items()) {
    bool known = false;
    for (const char* key : required) known = known || item.key() == key;
    for (const char* key : optional) known = known || item.key() == key;
    if (!known)
      throw std::invalid_argument(std::string(name) + ": unknown key '" +
                                  item.key() + "'");
  }
}

deposit::Kind parse_kind(const std::string& text) {
  if (text == "bose") return deposit::Kind::bose;
  if (text == "boltzmann") return deposit::Kind::boltzmann;
  throw std::invalid_argument("statistics must be 'bose' or 'boltzmann', got '" +
                              text + "'");
}

deposit::DepositScenario parse_scenario(const json& node) {
  if (!node.is_object())
    throw std::invalid_argument("scenario: expected an object");
  require_keys(node, "scenario", {"N", "G", "lambda1", "lambda2", "statistics"});
  if (!node["N"].is_number_integer() || !node["G"].is_number_integer())
    throw std::invalid_argument("scenario: N and G must be integers");
  if (!node["lambda1"].is_number() || !node["lambda2"].is_number())
    throw std::invalid_argument("scenario: lambda1 and lambda2 must be numbers");
  if (!node["statistics"].is_string())
    throw std::invalid_argument("scenario: statistics must be a string");
  return deposit::DepositScenario(
      node["N"].get<std::int64_t>(), node["G"].get<std::int64_t>(),
      node["lambda1"].get<double>(), node["lambda2"].get<double>(),
      parse_kind(node["statistics"].get<std::string>()));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::invalid_argument("cannot open scenario file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int report_input_error(const std::exception& e, std::ostream& err) {
  err << "quasimarket: input error: " << e.what() << '\n';
  return exit_input_error;
}

int report_numerical_error(const std::exception& e, std::ostream& err) {
  err << "quasimarket: numerical error: " << e.what() << '\n';
  return exit_numerical_error;
}

}  // namespace

std::string format_number(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

SweepSpec parse_sweep_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("scenario JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw std::invalid_argument("scenario JSON: expected a top-level object");
  require_keys(doc, "scenario file", {"scenario", "sweep"}, {"options"});

  SweepSpec spec{parse_scenario(doc["scenario"]), 0.0, 0.0, 2, {}};

  const json& sweep = doc["sweep"];
  if (!sweep.is_object())
    throw std::invalid_argument("sweep: expected an object");
  require_keys(sweep, "sweep", {"beta_min", "beta_max", "points"});
  if (!sweep["beta_min"].is_number() || !sweep["beta_max"].is_number())
    throw std::invalid_argument("sweep: beta_min and beta_max must be numbers");
  if (!sweep["points"].is_number_integer())
    throw std::invalid_argument("sweep: points must be an integer");
  spec.beta_min = sweep["beta_min"].get<double>();
  spec.beta_max = sweep["beta_max"].get<double>();
  spec.points = sweep["points"].get<int>();
  if (!(spec.beta_min > 0.0) || !std::isfinite(spec.beta_min) ||
      !std::isfinite(spec.beta_max))
    throw std::invalid_argument("sweep: beta_min must be positive and finite");
  if (!(spec.beta_min < spec.beta_max))
    throw std::invalid_argument("sweep: beta_min must be below beta_max");
  if (spec.points < 2)
    throw std::invalid_argument("sweep: points must be at least 2");

  if (doc.contains("options")) {
    const json& options = doc["options"];
    if (!options.is_object())
      throw std::invalid_argument("options: expected an object");
    require_keys(options, "options", {}, {"emit_oracle", "asymptotics"});
    if (options.contains("emit_oracle")) {
      if (!options["emit_oracle"].is_boolean())
        throw std::invalid_argument("options: emit_oracle must be a boolean");
      spec.options.emit_oracle = options["emit_oracle"].get<bool>();
    }
    if (options.contains("asymptotics")) {
      if (!options["asymptotics"].is_boolean())
        throw std::invalid_argument("options: asymptotics must be a boolean");
      spec.options.asymptotics = options["asymptotics"].get<bool>();
    }
  }
  return spec;
}

void write_sweep_csv(const SweepSpec& spec, std::ostream& out) {
  out << "beta,k_star,m_star,income,phase";
  if (spec.options.emit_oracle) out << ",oracle_k";
  out << '\n';
  for (int i = 0; i < spec.points; ++i) {
    const double fraction =
        static_cast<double>(i) / static_cast<double>(spec.points - 1);
    const double beta =
        spec.beta_min + (spec.beta_max - spec.beta_min) * fraction;
    const deposit::PhasePoint point = deposit::optimal_k(beta, spec.scenario);
    out << format_number(beta) << ',' << format_number(point.k_star) << ','
        << format_number(point.m_star) << ',' << format_number(point.income)
        << ',' << deposit::to_string(point.phase);
    if (spec.options.emit_oracle)
      out << ',' << oracle::brute_force_optimum(beta, spec.scenario).k;
    out << '\n';
  }
}

void write_limits_csv(const LimitsSpec& spec, std::ostream& out) {
  const deposit::AsymptoticLimits limits =
      deposit::asymptotic_limits(spec.kind, spec.g, spec.delta_lambda);
  out << "N,finite_value,limit_value,abs_error\n";
  for (std::int64_t n : spec.sizes) {
    const std::int64_t banks =
        std::llround(spec.g * static_cast<double>(n));
    const deposit::DepositScenario scenario(n, banks, spec.delta_lambda, 0.0,
                                            spec.kind);
    const deposit::CriticalBetas critical = deposit::critical_betas(scenario);
    double finite = 0.0;
    double limit = 0.0;
    if (limits.beta_c_limit) {
      if (!critical.beta_c)
        throw numerical_error(
            "limits: no finite lower critical value at N=" + std::to_string(n) +
            " although the limit exists; increase N");
      finite = *critical.beta_c;
      limit = *limits.beta_c_limit;
    } else {
      if (!critical.m_floor)
        throw numerical_error(
            "limits: finite lower critical value exists at N=" +
            std::to_string(n) + " although the limit does not; increase N");
      finite = *critical.m_floor;
      limit = *limits.m_floor_limit;
    }
    out << n << ',' << format_number(finite) << ',' << format_number(limit)
        << ',' << format_number(std::abs(finite - limit)) << '\n';
  }
}

void write_occupancy_csv(const OccupancySpec& spec, std::ostream& out) {
  const std::vector<double> ones(spec.x.size(), 1.0);
  const occupancy::LevelSpec levels(
      spec.x, spec.multiplicity.empty() ? ones : spec.multiplicity);
  const double sign =
      spec.orientation == occupancy::Orientation::market ? 1.0 : -1.0;

  std::vector<double> occupation(levels.size());
  std::vector<double> reference(levels.size());
  if (spec.kind == OccupancyKind::gibbs) {
    const occupancy::OccupancyVector solved =
        occupancy::gibbs_occupancy(levels, spec.beta, *spec.total,
                                   spec.orientation);
    occupation = solved.occupation;
    // Large-occupation reference: total split by the exponential weights,
    // shifted by the largest exponent so the weights stay representable.
    double top = sign * spec.beta * levels.x[0];
    for (std::size_t i = 1; i < levels.size(); ++i)
      top = std::max(top, sign * spec.beta * levels.x[i]);
    double weight_sum = 0.0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      reference[i] = std::exp(sign * spec.beta * levels.x[i] - top);
      weight_sum += reference[i];
    }
    for (double& w : reference) w *= *spec.total / weight_sum;
  } else {
    const occupancy::Kind kind = spec.kind == OccupancyKind::bose
                                     ? occupancy::Kind::bose
                                     : occupancy::Kind::fermi;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      occupation[i] = occupancy::level_occupancy(
          kind, levels.x[i], levels.multiplicity[i], spec.beta);
      reference[i] = occupancy::occupancy_asymptotic(
          kind, levels.x[i], levels.multiplicity[i], spec.beta);
    }
  }

  out << "x,G,P,asymptotic_P\n";
  for (std::size_t i = 0; i < levels.size(); ++i)
    out << format_number(levels.x[i]) << ','
        << format_number(levels.multiplicity[i]) << ','
        << format_number(occupation[i]) << ',' << format_number(reference[i])
        << '\n';
}

int run_sweep(const std::string& path, std::ostream& out, std::ostream& err) {
  SweepSpec spec{deposit::DepositScenario(1, 1, 1.0, 0.0, deposit::Kind::bose),
                 0.0, 0.0, 2, {}};
  try {
    spec = parse_sweep_spec(read_file(path));
  } catch (const std::exception& e) {
    return report_input_error(e, err);
  }
  try {
    std::ostringstream buffer;
    write_sweep_csv(spec, buffer);
    out << buffer.str();
  } catch (const std::exception& e) {
    return report_numerical_error(e, err);
  }
  return exit_ok;
}

int run_limits(const LimitsSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    if (!std::isfinite(spec.g) || spec.g <= 0.0)
      throw std::invalid_argument("limits: g must be positive");
    if (!std::isfinite(spec.delta_lambda) || spec.delta_lambda <= 0.0)
      throw std::invalid_argument("limits: delta_lambda must be positive");
    if (spec.sizes.empty())
      throw std::invalid_argument("limits: at least one N required");
    for (std::int64_t n : spec.sizes) {
      if (n < 10) throw std::invalid_argument("limits: every N must be >= 10");
      if (std::llround(spec.g * static_cast<double>(n)) < 1)
        throw std::invalid_argument("limits: g*N must round to at least 1");
    }
  } catch (const std::exception& e) {
    return report_input_error(e, err);
  }
  try {
    std::ostringstream buffer;
    write_limits_csv(spec, buffer);
    out << buffer.str();
  } catch (const std::exception& e) {
    return report_numerical_error(e, err);
  }
  return exit_ok;
}

int run_occupancy(const OccupancySpec& spec, std::ostream& out,
                  std::ostream& err) {
  try {
    const std::vector<double> ones(spec.x.size(), 1.0);
    const occupancy::LevelSpec levels(
        spec.x, spec.multiplicity.empty() ? ones : spec.multiplicity);
    if (spec.kind == OccupancyKind::gibbs) {
      if (!spec.total || !std::isfinite(*spec.total) || *spec.total <= 0.0)
        throw std::invalid_argument(
            "occupancy: gibbs requires a positive total (--M)");
      if (!std::isfinite(spec.beta) || spec.beta < 0.0)
        throw std::invalid_argument("occupancy: beta must be nonnegative");
    } else {
      if (!std::isfinite(spec.beta) || spec.beta <= 0.0)
        throw std::invalid_argument("occupancy: beta must be positive");
    }
    if (spec.kind == OccupancyKind::bose) {
      for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels.x[i] <= 0.0)
          throw std::invalid_argument(
              "occupancy: bose levels require x > 0 at every level");
        if (levels.multiplicity[i] <= 1.0)
          throw std::invalid_argument(
              "occupancy: bose levels require multiplicity > 1");
      }
    }
  } catch (const std::exception& e) {
    return report_input_error(e, err);
  }
  try {
    std::ostringstream buffer;
    write_occupancy_csv(spec, buffer);
    out << buffer.str();
  } catch (const std::exception& e) {
    return report_numerical_error(e, err);
  }
  return exit_ok;
}

}  // namespace quasimarket::cli
