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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quasimarket/cli.hpp"
#include "quasimarket/oracle.hpp"
#include "quasimarket/specfun.hpp"

using namespace quasimarket;

namespace {

const char* scenario_n2g2 = R"({
  "scenario": {"N": 2, "G": 2, "lambda1": 2.0, "lambda2": 1.0,
               "statistics": "bose"},
  "sweep": {"beta_min": 0.2, "beta_max": 1.5, "points": 3}
})";

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(current);
  return fields;
}

// Writes content to a temporary file and returns the path.
std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/quasimarket_test_" + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("format_number renders 12 significant digits with a point") {
  CHECK(cli::format_number(0.2) == "0.2");
  CHECK(cli::format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(cli::format_number(123456789012345.0) == "1.23456789012e+14");
}

TEST_CASE("sweep spec parsing validates the schema") {
  CHECK_NOTHROW(cli::parse_sweep_spec(scenario_n2g2));
  CHECK_THROWS_AS(cli::parse_sweep_spec("not json"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_sweep_spec("{}"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_sweep_spec(R"({
    "scenario": {"N": 2, "G": 2, "lambda1": 1.0, "lambda2": 2.0,
                 "statistics": "bose"},
    "sweep": {"beta_min": 0.2, "beta_max": 1.5, "points": 3}
  })"),
                  std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_sweep_spec(R"({
    "scenario": {"N": 2, "G": 2, "lambda1": 2.0, "lambda2": 1.0,
                 "statistics": "bose"},
    "sweep": {"beta_min": 1.5, "beta_max": 0.2, "points": 3}
  })"),
                  std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_sweep_spec(R"({
    "scenario": {"N": 2, "G": 2, "lambda1": 2.0, "lambda2": 1.0,
                 "statistics": "bose"},
    "sweep": {"beta_min": 0.2, "beta_max": 1.5, "points": 1}
  })"),
                  std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_sweep_spec(R"({
    "scenario": {"N": 2, "G": 2, "lambda1": 2.0, "lambda2": 1.0,
                 "statistics": "bose", "typo": 1},
    "sweep": {"beta_min": 0.2, "beta_max": 1.5, "points": 3}
  })"),
                  std::invalid_argument);
}

TEST_CASE("sweep output walks through the three phases") {
  const auto spec = cli::parse_sweep_spec(scenario_n2g2);
  std::ostringstream out;
  cli::write_sweep_csv(spec, out);
  const auto lines = split_lines(out.str());
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "beta,k_star,m_star,income,phase");
  CHECK(split_fields(lines[1])[4] == "saturated");
  CHECK(split_fields(lines[2])[4] == "mixed");
  CHECK(split_fields(lines[3])[4] == "condensed");
  CHECK(split_fields(lines[3])[1] == "0");
  // Ascending beta and LF-only line endings.
  CHECK(split_fields(lines[1])[0] == "0.2");
  CHECK(split_fields(lines[3])[0] == "1.5");
  CHECK(out.str().find('\r') == std::string::npos);
}

TEST_CASE("a sweep beyond the upper critical value stays condensed") {
  // For N = 2, G = 2, rate gap 1 the upper critical value is 1; a two-point
  // grid over [1, 2] keeps the whole deposit in the pyramid.
  const auto spec = cli::parse_sweep_spec(R"({
    "scenario": {"N": 2, "G": 2, "lambda1": 2.0, "lambda2": 1.0,
                 "statistics": "bose"},
    "sweep": {"beta_min": 1.0, "beta_max": 2.0, "points": 2}
  })");
  std::ostringstream out;
  cli::write_sweep_csv(spec, out);
  const auto lines = split_lines(out.str());
  REQUIRE(lines.size() == 3);
  for (int i = 1; i <= 2; ++i) {
    const auto fields = split_fields(lines[i]);
    CHECK(fields[1] == "0");
    CHECK(fields[4] == "condensed");
  }
}

TEST_CASE("sweep output is byte-deterministic") {
  const auto spec = cli::parse_sweep_spec(scenario_n2g2);
  std::ostringstream first;
  std::ostringstream second;
  cli::write_sweep_csv(spec, first);
  cli::write_sweep_csv(spec, second);
  CHECK(first.str() == second.str());
}

TEST_CASE("sweep rows re-validate against direct library calls") {
  const auto spec = cli::parse_sweep_spec(scenario_n2g2);
  std::ostringstream out;
  cli::write_sweep_csv(spec, out);
  const auto lines = split_lines(out.str());
  for (int i = 1; i < static_cast<int>(lines.size()); ++i) {
    const auto fields = split_fields(lines[i]);
    const double beta = spec.beta_min + (spec.beta_max - spec.beta_min) *
                                            (i - 1) / (spec.points - 1);
    const auto point = deposit::optimal_k(beta, spec.scenario);
    CHECK(fields[0] == cli::format_number(beta));
    CHECK(fields[1] == cli::format_number(point.k_star));
    CHECK(fields[2] == cli::format_number(point.m_star));
    CHECK(fields[3] == cli::format_number(point.income));
    CHECK(fields[4] == deposit::to_string(point.phase));
    CHECK(point.income ==
          doctest::Approx(deposit::total_income(point.k_star, beta,
                                                spec.scenario))
              .epsilon(1e-9));
  }
}

TEST_CASE("oracle column stays within one unit of the continuous optimum") {
  const std::string text = R"({
    "scenario": {"N": 500, "G": 800, "lambda1": 1.5, "lambda2": 0.5,
                 "statistics": "bose"},
    "sweep": {"beta_min": 0.1, "beta_max": 8.0, "points": 25},
    "options": {"emit_oracle": true}
  })";
  const auto spec = cli::parse_sweep_spec(text);
  std::ostringstream out;
  cli::write_sweep_csv(spec, out);
  const auto lines = split_lines(out.str());
  REQUIRE(lines.size() == 26);
  CHECK(lines[0] == "beta,k_star,m_star,income,phase,oracle_k");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_fields(lines[i]);
    REQUIRE(fields.size() == 6);
    const double k_star = std::stod(fields[1]);
    const double oracle_k = std::stod(fields[5]);
    CHECK(std::abs(k_star - oracle_k) <= 1.0);
  }
}

TEST_CASE("run_sweep exit codes") {
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cli::run_sweep("/nonexistent/path.json", out, err) ==
        cli::exit_input_error);
  CHECK(err.str().find("input error") != std::string::npos);

  const std::string bad = write_temp("bad.json", "{");
  err.str("");
  CHECK(cli::run_sweep(bad, out, err) == cli::exit_input_error);

  const std::string good = write_temp("good.json", scenario_n2g2);
  out.str("");
  err.str("");
  CHECK(cli::run_sweep(good, out, err) == cli::exit_ok);
  CHECK(err.str().empty());
  CHECK(split_lines(out.str()).size() == 4);
  std::remove(bad.c_str());
  std::remove(good.c_str());
}

TEST_CASE("limits report for the bose kind converges to ln 2") {
  cli::LimitsSpec spec;
  spec.kind = deposit::Kind::bose;
  spec.g = 1.0;
  spec.delta_lambda = 1.0;
  spec.sizes = {100, 1000, 10000};
  std::ostringstream out;
  std::ostringstream err;
  REQUIRE(cli::run_limits(spec, out, err) == cli::exit_ok);
  const auto lines = split_lines(out.str());
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "N,finite_value,limit_value,abs_error");
  double previous_error = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_fields(lines[i]);
    REQUIRE(fields.size() == 4);
    CHECK(std::stod(fields[2]) == doctest::Approx(std::log(2.0)));
    const double error = std::stod(fields[3]);
    CHECK(error < previous_error);
    previous_error = error;
  }
}

TEST_CASE("limits report in the boltzmann regimes") {
  cli::LimitsSpec above;
  above.kind = deposit::Kind::boltzmann;
  above.g = 3.0;
  above.delta_lambda = 1.0;
  above.sizes = {100, 1000};
  std::ostringstream out;
  std::ostringstream err;
  REQUIRE(cli::run_limits(above, out, err) == cli::exit_ok);
  auto lines = split_lines(out.str());
  CHECK(std::stod(split_fields(lines[1])[2]) ==
        doctest::Approx(std::log(3.0) - specfun::euler_gamma));

  cli::LimitsSpec below = above;
  below.g = 1.0;
  out.str("");
  REQUIRE(cli::run_limits(below, out, err) == cli::exit_ok);
  lines = split_lines(out.str());
  CHECK(std::stod(split_fields(lines[1])[2]) ==
        doctest::Approx(specfun::inv_digamma(0.0) - 1.0).epsilon(1e-6));
}

TEST_CASE("limits report input and numerical failures") {
  cli::LimitsSpec spec;
  spec.kind = deposit::Kind::bose;
  spec.g = 1.0;
  spec.delta_lambda = 1.0;
  spec.sizes = {5};
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cli::run_limits(spec, out, err) == cli::exit_input_error);

  // Just above the limit threshold the finite-size critical value does not
  // exist yet at small N: an honest numerical failure.
  cli::LimitsSpec marginal;
  marginal.kind = deposit::Kind::boltzmann;
  marginal.g = 1.8;
  marginal.delta_lambda = 1.0;
  marginal.sizes = {10};
  err.str("");
  CHECK(cli::run_limits(marginal, out, err) == cli::exit_numerical_error);
  CHECK(err.str().find("numerical error") != std::string::npos);
}

TEST_CASE("occupancy table matches the library") {
  cli::OccupancySpec spec;
  spec.kind = cli::OccupancyKind::fermi;
  spec.beta = 1.0;
  spec.x = {-0.5, 0.0, 0.8};
  spec.multiplicity = {8.0, 10.0, 8.0};
  std::ostringstream out;
  std::ostringstream err;
  REQUIRE(cli::run_occupancy(spec, out, err) == cli::exit_ok);
  const auto lines = split_lines(out.str());
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "x,G,P,asymptotic_P");
  const auto middle = split_fields(lines[2]);
  CHECK(std::stod(middle[2]) == doctest::Approx(5.0).epsilon(1e-9));
  CHECK(std::stod(middle[3]) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("occupancy validates its inputs per kind") {
  std::ostringstream out;
  std::ostringstream err;

  cli::OccupancySpec bose;
  bose.kind = cli::OccupancyKind::bose;
  bose.beta = 1.0;
  bose.x = {-1.0, 0.5};
  bose.multiplicity = {5.0, 5.0};
  CHECK(cli::run_occupancy(bose, out, err) == cli::exit_input_error);

  cli::OccupancySpec gibbs;
  gibbs.kind = cli::OccupancyKind::gibbs;
  gibbs.beta = 1.0;
  gibbs.x = {0.0, 1.0};
  CHECK(cli::run_occupancy(gibbs, out, err) == cli::exit_input_error);

  gibbs.total = 100.0;
  out.str("");
  err.str("");
  CHECK(cli::run_occupancy(gibbs, out, err) == cli::exit_ok);
  const auto lines = split_lines(out.str());
  REQUIRE(lines.size() == 3);
  const double p0 = std::stod(split_fields(lines[1])[2]);
  const double p1 = std::stod(split_fields(lines[2])[2]);
  CHECK(p0 + p1 == doctest::Approx(100.0).epsilon(1e-8));
  CHECK(p1 > p0);  // market orientation favors the higher level
}
