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

#include "quasimarket/deposit.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "quasimarket/entropy.hpp"
#include "quasimarket/errors.hpp"
#include "quasimarket/specfun.hpp"

namespace quasimarket::deposit {

namespace {

using specfun::digamma;
using specfun::euler_gamma;

// Within 1e-12 of the exact boundary the limit regime is treated as the
// boundary itself, so that ln(g) == euler_gamma yields both a zero critical
// value and a zero floor.
constexpr double limit_boundary_tolerance = 1e-12;

// Marginal information gain d/dk of the log-multiplicity; strictly
// decreasing in k for both kinds, which makes total_income strictly concave.
double information_gain(double k, const DepositScenario& s) {
  const double n = static_cast<double>(s.units);
  const double g = static_cast<double>(s.strong_banks);
  if (s.statistics == Kind::bose) return digamma(g + k) - digamma(k + 1.0);
  return std::log(g) + digamma(n - k + 1.0) - digamma(k + 1.0);
}

void require_beta(double beta, const char* caller) {
  if (!std::isfinite(beta) || beta <= 0.0)
    throw std::domain_error(std::string(caller) + ": beta must be positive");
}

void require_k(double k, const DepositScenario& s, const char* caller) {
  if (!std::isfinite(k) || k < 0.0 || k > static_cast<double>(s.units))
    throw std::domain_error(std::string(caller) +
                            ": deposit k must lie in [0, N]");
}

// Root of the strictly increasing map m -> ln(G) + Psi(m+1) - Psi(N-m+1)
// on [0, N]; exists whenever the value at m = 0 is nonpositive.
double solve_pyramid_floor(const DepositScenario& s) {
  const double n = static_cast<double>(s.units);
  const double log_g = std::log(static_cast<double>(s.strong_banks));
  const auto value = [&](double m) {
    return log_g + digamma(m + 1.0) - digamma(n - m + 1.0);
  };
  double lo = 0.0;
  double hi = n;
  double m = 0.0;
  for (int iteration = 0; iteration < 200; ++iteration) {
    m = 0.5 * (lo + hi);
    const double v = value(m);
    if (std::abs(v) <= 1e-13) break;
    if (v < 0.0)
      lo = m;
    else
      hi = m;
    if (hi - lo <= std::numeric_limits<double>::epsilon() * std::max(1.0, hi))
      break;
  }
  if (std::abs(value(m)) > 1e-10)
    throw numerical_error("critical_betas: pyramid floor solve failed");
  return m;
}

}  // namespace

DepositScenario::DepositScenario(std::int64_t units_in,
                                 std::int64_t strong_banks_in,
                                 double pyramid_rate_in, double bank_rate_in,
                                 Kind statistics_in)
    : units(units_in),
      strong_banks(strong_banks_in),
      pyramid_rate(pyramid_rate_in),
      bank_rate(bank_rate_in),
      statistics(statistics_in) {
  if (units < 1)
    throw std::invalid_argument("DepositScenario: units must be >= 1");
  if (strong_banks < 1)
    throw std::invalid_argument("DepositScenario: strong_banks must be >= 1");
  if (!std::isfinite(pyramid_rate) || !std::isfinite(bank_rate))
    throw std::invalid_argument("DepositScenario: rates must be finite");
  if (!(pyramid_rate > bank_rate))
    throw std::invalid_argument(
        "DepositScenario: pyramid_rate must exceed bank_rate");
}

const char* to_string(Phase phase) {
  switch (phase) {
    case Phase::condensed:
      return "condensed";
    case Phase::mixed:
      return "mixed";
    case Phase::saturated:
      return "saturated";
  }
  return "unknown";
}

double linear_income(double k, double beta, const DepositScenario& s) {
  require_beta(beta, "linear_income");
  require_k(k, s, "linear_income");
  const double n = static_cast<double>(s.units);
  return beta * s.pyramid_rate * n - beta * s.rate_gap() * k;
}

double total_income(double k, double beta, const DepositScenario& s) {
  const double base = linear_income(k, beta, s);
  const double g = static_cast<double>(s.strong_banks);
  if (s.statistics == Kind::bose)
    return base + entropy::bose_multiplicity(k, g);
  return base +
         entropy::boltzmann_multiplicity(k, static_cast<double>(s.units), g);
}

CriticalBetas critical_betas(const DepositScenario& s) {
  const double n = static_cast<double>(s.units);
  const double g = static_cast<double>(s.strong_banks);
  const double gap = s.rate_gap();
  CriticalBetas out;
  if (s.statistics == Kind::bose) {
    out.beta_0 = (digamma(g) - digamma(1.0)) / gap;
    const double beta_c = (digamma(g + n) - digamma(n + 1.0)) / gap;
    if (beta_c > 0.0) out.beta_c = beta_c;
    return out;
  }
  out.beta_0 = (std::log(g) + digamma(n + 1.0) - digamma(1.0)) / gap;
  const double beta_c = (std::log(g) + digamma(1.0) - digamma(n + 1.0)) / gap;
  if (beta_c > 0.0)
    out.beta_c = beta_c;
  else
    out.m_floor = solve_pyramid_floor(s);
  return out;
}

PhasePoint optimal_k(double beta, const DepositScenario& s) {
  require_beta(beta, "optimal_k");
  const CriticalBetas critical = critical_betas(s);
  const double n = static_cast<double>(s.units);

  double k = 0.0;
  if (beta >= critical.beta_0) {
    k = 0.0;
  } else if (critical.beta_c && beta <= *critical.beta_c) {
    k = n;
  } else {
    const double target = beta * s.rate_gap();
    double lo = 0.0;
    double hi = n;
    for (int iteration = 0; iteration < 200; ++iteration) {
      k = 0.5 * (lo + hi);
      const double r = information_gain(k, s) - target;
      if (std::abs(r) <= 1e-13) break;
      if (r > 0.0)
        lo = k;
      else
        hi = k;
      if (hi - lo <=
          std::numeric_limits<double>::epsilon() * std::max(1.0, hi))
        break;
    }
    if (std::abs(information_gain(k, s) - target) > 1e-10)
      throw numerical_error("optimal_k: stationary point solve failed");
  }

  PhasePoint point;
  point.beta = beta;
  point.k_star = k;
  point.m_star = n - k;
  point.income = total_income(k, beta, s);
  point.phase = classify_phase(beta, s);
  return point;
}

double beta_of_m(double m, const DepositScenario& s) {
  const double n = static_cast<double>(s.units);
  const double g = static_cast<double>(s.strong_banks);
  if (!std::isfinite(m) || m < 0.0 || m > n)
    throw std::domain_error("beta_of_m: pyramid deposit must lie in [0, N]");
  if (s.statistics == Kind::bose)
    return (digamma(g + n - m) - digamma(n - m + 1.0)) / s.rate_gap();
  // A nonpositive value signals that no positive beta makes this pyramid
  // deposit optimal; the optimum never drops below m_floor.
  return (std::log(g) + digamma(m + 1.0) - digamma(n - m + 1.0)) /
         s.rate_gap();
}

AsymptoticLimits asymptotic_limits(Kind kind, double g, double delta_lambda,
                                   std::optional<double> m) {
  if (!std::isfinite(g) || g <= 0.0)
    throw std::domain_error("asymptotic_limits: g must be positive");
  if (!std::isfinite(delta_lambda) || delta_lambda <= 0.0)
    throw std::domain_error(
        "asymptotic_limits: delta_lambda must be positive");
  if (m && (!std::isfinite(*m) || *m < 0.0))
    throw std::domain_error("asymptotic_limits: m must be nonnegative");

  AsymptoticLimits out;
  if (kind == Kind::bose) {
    out.beta_c_exists = true;
    out.beta_c_limit = std::log1p(g) / delta_lambda;
    if (m) out.beta_of_m_limit = std::log1p(g) / delta_lambda;
    return out;
  }
  const double excess = std::log(g) - euler_gamma;
  out.beta_c_exists = excess > 0.0;
  if (excess >= -limit_boundary_tolerance)
    out.beta_c_limit = std::max(excess, 0.0) / delta_lambda;
  if (excess <= limit_boundary_tolerance)
    out.m_floor_limit =
        std::max(0.0, specfun::inv_digamma(-std::log(g)) - 1.0);
  if (m)
    out.beta_of_m_limit =
        (std::log(g) + digamma(*m + 1.0)) / delta_lambda;
  return out;
}

double k_fraction_limit(double g, double delta_lambda, double beta) {
  if (!std::isfinite(g) || g <= 0.0)
    throw std::domain_error("k_fraction_limit: g must be positive");
  if (!std::isfinite(delta_lambda) || delta_lambda <= 0.0)
    throw std::domain_error("k_fraction_limit: delta_lambda must be positive");
  if (!std::isfinite(beta) || beta * delta_lambda <= 0.0)
    throw std::domain_error(
        "k_fraction_limit: beta * delta_lambda must be positive");
  return g / std::expm1(beta * delta_lambda);
}

Phase classify_phase(double beta, const DepositScenario& s) {
  require_beta(beta, "classify_phase");
  const CriticalBetas critical = critical_betas(s);
  if (beta >= critical.beta_0) return Phase::condensed;
  if (critical.beta_c && beta <= *critical.beta_c) return Phase::saturated;
  return Phase::mixed;
}

}  // namespace quasimarket::deposit
