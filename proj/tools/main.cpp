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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "quasimarket/cli.hpp"

namespace qmc = quasimarket::cli;

int main(int argc, char** argv) {
  CLI::App app{"Entropy-regularized two-bank allocation toolkit"};
  app.set_version_flag("--version",
                       std::string("quasimarket ") + qmc::version);
  app.require_subcommand(0, 1);

  std::string scenario_path;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Run a beta sweep from a scenario JSON file, CSV on stdout");
  sweep->add_option("scenario", scenario_path, "scenario JSON file")
      ->required();

  std::string limits_kind = "bose";
  qmc::LimitsSpec limits_spec;
  CLI::App* limits = app.add_subcommand(
      "limits", "Compare finite-size critical values with their limits");
  limits->add_option("--kind", limits_kind, "bose or boltzmann")->required();
  limits->add_option("--g", limits_spec.g, "bank-to-unit ratio lim G/N")
      ->required();
  limits->add_option("--dl", limits_spec.delta_lambda, "rate gap")->required();
  limits
      ->add_option("--N", limits_spec.sizes,
                   "system sizes, ascending (comma separated)")
      ->required()
      ->delimiter(',');

  std::string occupancy_kind = "bose";
  std::string orientation = "market";
  qmc::OccupancySpec occupancy_spec;
  double gibbs_total = 0.0;
  CLI::App* occupancy = app.add_subcommand(
      "occupancy", "Solve per-level occupations, CSV on stdout");
  occupancy->add_option("--kind", occupancy_kind, "gibbs, bose or fermi")
      ->required();
  occupancy->add_option("--beta", occupancy_spec.beta, "sweep parameter beta")
      ->required();
  occupancy->add_option("--x", occupancy_spec.x, "level values (ascending)")
      ->required()
      ->delimiter(',');
  occupancy
      ->add_option("--g", occupancy_spec.multiplicity,
                   "level multiplicities (default all 1)")
      ->delimiter(',');
  CLI::Option* total_option = occupancy->add_option(
      "--M", gibbs_total, "total occupation (gibbs only)");
  occupancy->add_option("--orientation", orientation, "market or thermo");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qmc::exit_input_error;
  }

  if (*sweep) return qmc::run_sweep(scenario_path, std::cout, std::cerr);

  if (*limits) {
    if (limits_kind == "bose") {
      limits_spec.kind = quasimarket::deposit::Kind::bose;
    } else if (limits_kind == "boltzmann") {
      limits_spec.kind = quasimarket::deposit::Kind::boltzmann;
    } else {
      std::cerr << "quasimarket: input error: --kind must be bose or "
                   "boltzmann\n";
      return qmc::exit_input_error;
    }
    return qmc::run_limits(limits_spec, std::cout, std::cerr);
  }

  if (*occupancy) {
    if (occupancy_kind == "gibbs") {
      occupancy_spec.kind = qmc::OccupancyKind::gibbs;
    } else if (occupancy_kind == "bose") {
      occupancy_spec.kind = qmc::OccupancyKind::bose;
    } else if (occupancy_kind == "fermi") {
      occupancy_spec.kind = qmc::OccupancyKind::fermi;
    } else {
      std::cerr << "quasimarket: input error: --kind must be gibbs, bose or "
                   "fermi\n";
      return qmc::exit_input_error;
    }
    if (orientation == "market") {
      occupancy_spec.orientation = quasimarket::occupancy::Orientation::market;
    } else if (orientation == "thermo") {
      occupancy_spec.orientation = quasimarket::occupancy::Orientation::thermo;
    } else {
      std::cerr << "quasimarket: input error: --orientation must be market or "
                   "thermo\n";
      return qmc::exit_input_error;
    }
    if (*total_option) occupancy_spec.total = gibbs_total;
    return qmc::run_occupancy(occupancy_spec, std::cout, std::cerr);
  }

  std::cerr << app.help();
  return qmc::exit_input_error;
}
