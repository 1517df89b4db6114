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
#include <vector>

namespace quasimarket::occupancy {

/// Counting statistics of a level: indistinguishable units without (bose)
/// or with (fermi) the exclusion rule.
enum class Kind { bose, fermi };

/// Sign convention: market allocations maximize income toward high levels,
/// thermodynamic states minimize free energy toward low levels.
enum class Orientation { market, thermo };

/// Strictly increasing level values with their multiplicities (all >= 1).
struct LevelSpec {
  std::vector<double> x;             // level values, strictly increasing
  std::vector<double> multiplicity;  // G_i >= 1

  LevelSpec(std::vector<double> x, std::vector<double> multiplicity);
  std::size_t size() const { return x.size(); }
};

/// Per-level occupation numbers (generally non-integer) and their total.
struct OccupancyVector {
  std::vector<double> occupation;
  double total = 0.0;

  OccupancyVector() = default;
  explicit OccupancyVector(std::vector<double> occupation);
};

/// A (beta, theta) pair with beta * theta == 1, plus the sign orientation.
struct ThermoState {
  double beta = 1.0;
  double theta = 1.0;
  Orientation orientation = Orientation::market;

  static ThermoState from_beta(double beta,
                               Orientation o = Orientation::market);
  static ThermoState from_theta(double theta,
                                Orientation o = Orientation::thermo);
};

/// Occupation of a single level at parameter beta.
///
/// bose: the unique P >= 0 with beta*x = Psi(G+P) - Psi(P+1); the boundary
/// P = 0 is returned once beta*x reaches the gap at zero occupation.
/// fermi: the unique P in [0, G] with beta*x = Psi(G-P+1) - Psi(P+1),
/// clamped to the boundary outside the attainable range.
/// Solved by bisection with a Newton polish; residual <= 1e-10.
double level_occupancy(Kind kind, double x, double multiplicity, double beta);

/// Large-occupation closed forms G/(exp(beta*x) - 1) and
/// G/(exp(beta*x) + 1).
double occupancy_asymptotic(Kind kind, double x, double multiplicity,
                            double beta);

/// Occupations solving s*beta*x_i + nu = Psi(P_i + 1) - Psi(1) under the
/// constraint sum P_i == total, with the multiplier nu found by bisection
/// (s = +1 market, -1 thermo). Levels the multiplier cannot lift above zero
/// stay empty. For large occupations the ratios follow exp(s*beta*(x_i-x_j)).
OccupancyVector gibbs_occupancy(const LevelSpec& levels, double beta,
                                double total,
                                Orientation orientation = Orientation::market);

/// Statistics entropy sum over levels:
/// bose  sum ln[Gamma(G_i+P_i) / (Gamma(G_i) Gamma(P_i+1))],
/// fermi sum ln[Gamma(G_i+1) / (Gamma(G_i-P_i+1) Gamma(P_i+1))]
/// (fermi requires P_i <= G_i).
double statistics_entropy(Kind kind, const LevelSpec& levels,
                          const OccupancyVector& occ);

/// F = sum x_i P_i - theta * S(kind).
double free_energy(const LevelSpec& levels, const OccupancyVector& occ,
                   double theta, Kind kind);

struct NaiveAllocation {
  OccupancyVector allocation;
  double value = 0.0;
};

/// The information-free optimum: every unit placed at the top level,
/// value = units * x_max.
NaiveAllocation naive_max(const LevelSpec& levels, std::int64_t units);

}  // namespace quasimarket::occupancy
