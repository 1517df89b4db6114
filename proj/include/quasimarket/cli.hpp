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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "quasimarket/deposit.hpp"
#include "quasimarket/occupancy.hpp"

namespace quasimarket::cli {

inline constexpr const char* version = "1.0.0";

// Process exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_numerical_error = 3;

struct SweepOptions {
  bool emit_oracle = false;
  bool asymptotics = false;  // accepted and validated; reserved
};

/// One sweep experiment: a scenario plus an inclusive linear beta grid.
struct SweepSpec {
  deposit::DepositScenario scenario;
  double beta_min = 0.0;
  double beta_max = 0.0;
  int points = 2;
  SweepOptions options;
};

/// Parses and validates the scenario JSON document; throws
/// std::invalid_argument with a diagnostic on any schema violation.
SweepSpec parse_sweep_spec(const std::string& json_text);

/// Emits the sweep as CSV (header beta,k_star,m_star,income,phase with an
/// oracle_k column when requested), rows in ascending beta, LF endings,
/// numbers at 12 significant digits. Byte-identical for identical specs.
void write_sweep_csv(const SweepSpec& spec, std::ostream& out);

struct LimitsSpec {
  deposit::Kind kind = deposit::Kind::bose;
  double g = 1.0;
  double delta_lambda = 1.0;
  std::vector<std::int64_t> sizes;  // ascending N values, each >= 10
};

/// Finite-size critical values against their limits, CSV columns
/// N,finite_value,limit_value,abs_error. In the boltzmann regime without a
/// lower critical value the compared quantity is the pyramid floor.
void write_limits_csv(const LimitsSpec& spec, std::ostream& out);

enum class OccupancyKind { gibbs, bose, fermi };

struct OccupancySpec {
  OccupancyKind kind = OccupancyKind::bose;
  std::vector<double> x;
  std::vector<double> multiplicity;  // empty means all ones
  double beta = 1.0;
  std::optional<double> total;  // required for gibbs
  occupancy::Orientation orientation = occupancy::Orientation::market;
};

/// Per-level occupations, CSV columns x,G,P,asymptotic_P.
void write_occupancy_csv(const OccupancySpec& spec, std::ostream& out);

/// Subcommand drivers: validate, compute into a buffer, then emit. Returns
/// exit_input_error for file/schema/domain problems before computation and
/// exit_numerical_error for failures inside the numerics.
int run_sweep(const std::string& path, std::ostream& out, std::ostream& err);
int run_limits(const LimitsSpec& spec, std::ostream& out, std::ostream& err);
int run_occupancy(const OccupancySpec& spec, std::ostream& out,
                  std::ostream& err);

/// Locale-independent "%.12g" rendering used for every CSV number.
std::string format_number(double value);

}  // namespace quasimarket::cli
