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
#include <optional>

namespace quasimarket::deposit {

/// Counting statistics of the information term: indistinguishable units
/// (bose) or labeled units (boltzmann).
enum class Kind { bose, boltzmann };

/// The two-outcome market: `units` deposit units split between a single
/// pyramid at pyramid_rate and strong_banks identical banks at bank_rate.
struct DepositScenario {
  std::int64_t units = 1;         // N
  std::int64_t strong_banks = 1;  // G
  double pyramid_rate = 1.0;      // per-unit pyramid income rate
  double bank_rate = 0.0;         // per-unit strong-bank rate, strictly lower
  Kind statistics = Kind::bose;

  DepositScenario(std::int64_t units, std::int64_t strong_banks,
                  double pyramid_rate, double bank_rate, Kind statistics);

  double rate_gap() const { return pyramid_rate - bank_rate; }
};

/// Critical sweep thresholds of a scenario.
///
/// Below beta_c (when it exists) the whole deposit sits in the strong banks;
/// above beta_0 it sits in the pyramid. In the boltzmann regime where beta_c
/// does not exist, m_floor is the pyramid deposit the optimum approaches as
/// beta -> 0.
struct CriticalBetas {
  std::optional<double> beta_c;
  double beta_0 = 0.0;
  std::optional<double> m_floor;
};

enum class Phase { condensed, mixed, saturated };

const char* to_string(Phase phase);

/// One point of a beta sweep: the continuous optimizer split and its value.
struct PhasePoint {
  double beta = 0.0;
  double k_star = 0.0;  // strong-bank deposit
  double m_star = 0.0;  // pyramid deposit, units - k_star
  double income = 0.0;
  Phase phase = Phase::mixed;
};

/// Information-free income beta*l1*N - beta*(l1-l2)*k for k in [0, N].
double linear_income(double k, double beta, const DepositScenario& s);

/// linear_income plus the log-multiplicity of the strong-bank deposit,
/// with Gamma arguments extended to real k.
double total_income(double k, double beta, const DepositScenario& s);

/// Both critical values; the boltzmann m_floor is solved to residual 1e-10
/// when the lower critical value does not exist.
CriticalBetas critical_betas(const DepositScenario& s);

/// The continuous maximizer of total_income over [0, N] at the given beta:
/// the boundary below beta_c / above beta_0, otherwise the unique interior
/// stationary point (the objective is strictly concave in k).
PhasePoint optimal_k(double beta, const DepositScenario& s);

/// The beta at which pyramid deposit m is stationary. For boltzmann
/// statistics the returned value can be nonpositive; that signals that no
/// positive beta makes this m optimal (see CriticalBetas::m_floor).
double beta_of_m(double m, const DepositScenario& s);

/// Large-N limits at fixed bank-to-unit ratio g = lim G/N.
struct AsymptoticLimits {
  /// lim beta_c; for boltzmann present only when ln(g) >= euler_gamma.
  std::optional<double> beta_c_limit;
  /// Whether the lower critical value survives the limit (ln g > gamma);
  /// always true for bose.
  bool beta_c_exists = true;
  /// lim beta(m) when a pyramid deposit m was supplied.
  std::optional<double> beta_of_m_limit;
  /// Boltzmann beta -> 0 pyramid remainder, root of ln(g) + Psi(m+1) = 0;
  /// present when the lower critical value does not survive the limit.
  std::optional<double> m_floor_limit;
};

AsymptoticLimits asymptotic_limits(Kind kind, double g, double delta_lambda,
                                   std::optional<double> m = std::nullopt);

/// Limit strong-bank fraction k/N -> g / (exp(beta*delta_lambda) - 1) for
/// beta above the limiting beta_c.
double k_fraction_limit(double g, double delta_lambda, double beta);

/// condensed for beta >= beta_0, saturated for beta <= beta_c (when it
/// exists), mixed in between. Boundaries take the adjacent extreme label.
Phase classify_phase(double beta, const DepositScenario& s);

}  // namespace quasimarket::deposit
