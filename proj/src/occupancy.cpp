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

#include "quasimarket/occupancy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "quasimarket/errors.hpp"
#include "quasimarket/specfun.hpp"
#include "polygamma_internal.hpp"

namespace quasimarket::occupancy {

namespace {

using specfun::digamma;
using specfun::euler_gamma;
using specfun::inv_digamma;
using specfun::internal::trigamma;

constexpr double residual_tolerance = 1e-10;

// Bisection on a strictly decreasing residual with a terminal Newton polish.
// residual(lo) > 0 > residual(hi) on entry.
template <typename F, typename DF>
double solve_decreasing(const F& residual, const DF& derivative, double lo,
                        double hi, const char* caller) {
  double x = 0.5 * (lo + hi);
  for (int iteration = 0; iteration < 200; ++iteration) {
    x = 0.5 * (lo + hi);
    const double r = residual(x);
    if (std::abs(r) <= 1e-13) break;
    if (r > 0.0)
      lo = x;
    else
      hi = x;
    if (hi - lo <= std::numeric_limits<double>::epsilon() *
                       std::max(1.0, std::abs(hi)))
      break;
  }
  for (int polish = 0; polish < 3; ++polish) {
    const double r = residual(x);
    const double d = derivative(x);
    if (d == 0.0) break;
    const double next = x - r / d;
    if (next > lo && next < hi && std::abs(residual(next)) < std::abs(r))
      x = next;
    else
      break;
  }
  if (std::abs(residual(x)) > residual_tolerance)
    throw numerical_error(std::string(caller) +
                          ": solver failed to reach residual tolerance");
  return x;
}

}  // namespace

LevelSpec::LevelSpec(std::vector<double> x_in,
                     std::vector<double> multiplicity_in)
    : x(std::move(x_in)), multiplicity(std::move(multiplicity_in)) {
  if (x.empty() || x.size() != multiplicity.size())
    throw std::invalid_argument(
        "LevelSpec: levels and multiplicities must be nonempty and match");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]))
      throw std::invalid_argument("LevelSpec: level values must be finite");
    if (i > 0 && x[i] <= x[i - 1])
      throw std::invalid_argument(
          "LevelSpec: level values must be strictly increasing");
    if (!std::isfinite(multiplicity[i]) || multiplicity[i] < 1.0)
      throw std::invalid_argument("LevelSpec: multiplicities must be >= 1");
  }
}

OccupancyVector::OccupancyVector(std::vector<double> occupation_in)
    : occupation(std::move(occupation_in)) {
  for (double p : occupation) {
    if (!std::isfinite(p) || p < 0.0)
      throw std::invalid_argument(
          "OccupancyVector: occupations must be nonnegative");
    total += p;
  }
}

ThermoState ThermoState::from_beta(double beta, Orientation o) {
  if (!std::isfinite(beta) || beta <= 0.0)
    throw std::invalid_argument("ThermoState: beta must be positive");
  return ThermoState{beta, 1.0 / beta, o};
}

ThermoState ThermoState::from_theta(double theta, Orientation o) {
  if (!std::isfinite(theta) || theta <= 0.0)
    throw std::invalid_argument("ThermoState: theta must be positive");
  return ThermoState{1.0 / theta, theta, o};
}

double level_occupancy(Kind kind, double x, double multiplicity, double beta) {
  if (!std::isfinite(beta) || beta <= 0.0)
    throw std::domain_error("level_occupancy: beta must be positive");
  if (!std::isfinite(multiplicity) || multiplicity <= 0.0)
    throw std::domain_error("level_occupancy: multiplicity must be positive");
  if (!std::isfinite(x))
    throw std::domain_error("level_occupancy: level value must be finite");
  const double g = multiplicity;
  const double bx = beta * x;

  if (kind == Kind::bose) {
    if (g == 1.0)
      throw std::domain_error(
          "level_occupancy: bose level with multiplicity 1 has identically "
          "zero gap; no finite occupation solves it");
    if (bx <= 0.0)
      throw std::domain_error(
          "level_occupancy: bose occupation diverges for beta*x <= 0");
    if (bx >= specfun::digamma_gap(g, 0.0)) return 0.0;

    const auto residual = [&](double p) {
      return digamma(g + p) - digamma(p + 1.0) - bx;
    };
    const auto derivative = [&](double p) {
      return trigamma(g + p) - trigamma(p + 1.0);
    };
    double hi = std::max(1.0, 10.0 * g / std::expm1(bx));
    int expansions = 0;
    while (residual(hi) > 0.0) {
      hi *= 2.0;
      if (++expansions > 200)
        throw numerical_error("level_occupancy: failed to bracket solution");
    }
    return solve_decreasing(residual, derivative, 0.0, hi, "level_occupancy");
  }

  // fermi: bounded between the empty and the fully occupied level.
  const double gap_at_zero = digamma(g + 1.0) - digamma(1.0);
  if (bx >= gap_at_zero) return 0.0;
  if (bx <= -gap_at_zero) return g;
  const auto residual = [&](double p) {
    return digamma(g - p + 1.0) - digamma(p + 1.0) - bx;
  };
  const auto derivative = [&](double p) {
    return -trigamma(g - p + 1.0) - trigamma(p + 1.0);
  };
  return solve_decreasing(residual, derivative, 0.0, g, "level_occupancy");
}

double occupancy_asymptotic(Kind kind, double x, double multiplicity,
                            double beta) {
  if (!std::isfinite(beta) || beta <= 0.0)
    throw std::domain_error("occupancy_asymptotic: beta must be positive");
  if (!std::isfinite(multiplicity) || multiplicity <= 0.0)
    throw std::domain_error(
        "occupancy_asymptotic: multiplicity must be positive");
  const double bx = beta * x;
  if (kind == Kind::bose) {
    if (bx <= 0.0)
      throw std::domain_error(
          "occupancy_asymptotic: bose form requires beta*x > 0");
    return multiplicity / std::expm1(bx);
  }
  return multiplicity / (std::exp(bx) + 1.0);
}

OccupancyVector gibbs_occupancy(const LevelSpec& levels, double beta,
                                double total, Orientation orientation) {
  if (!std::isfinite(beta) || beta < 0.0)
    throw std::domain_error("gibbs_occupancy: beta must be nonnegative");
  if (!std::isfinite(total) || total <= 0.0)
    throw std::domain_error("gibbs_occupancy: total must be positive");
  const double sign = orientation == Orientation::market ? 1.0 : -1.0;
  const std::size_t n = levels.size();

  // Occupation of level i at multiplier nu; levels the multiplier cannot
  // lift above Psi(1) stay empty.
  const auto occupation_at = [&](double nu, std::size_t i) {
    const double y = sign * beta * levels.x[i] + nu - euler_gamma;
    if (y <= -euler_gamma) return 0.0;
    return inv_digamma(y) - 1.0;
  };
  const auto occupancy_sum = [&](double nu) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += occupation_at(nu, i);
    return sum;
  };

  double nu = digamma(total / static_cast<double>(n) + 1.0) + euler_gamma -
              sign * beta * levels.x[0];
  double lo = nu;
  double hi = nu;
  double step = std::max(1.0, std::abs(nu));
  int expansions = 0;
  while (occupancy_sum(lo) > total) {
    lo -= step;
    step *= 2.0;
    if (++expansions > 200)
      throw numerical_error("gibbs_occupancy: no multiplier bracket found");
  }
  step = std::max(1.0, std::abs(nu));
  while (occupancy_sum(hi) < total) {
    hi += step;
    step *= 2.0;
    if (++expansions > 200)
      throw numerical_error("gibbs_occupancy: no multiplier bracket found");
  }

  const double tolerance = 1e-9 * std::max(1.0, total);
  for (int iteration = 0; iteration < 300; ++iteration) {
    nu = 0.5 * (lo + hi);
    const double excess = occupancy_sum(nu) - total;
    if (std::abs(excess) <= tolerance) break;
    if (excess < 0.0)
      lo = nu;
    else
      hi = nu;
    if (hi - lo <= std::numeric_limits<double>::epsilon() *
                       std::max(1.0, std::abs(hi)))
      break;
  }

  std::vector<double> occupation(n);
  for (std::size_t i = 0; i < n; ++i) occupation[i] = occupation_at(nu, i);
  OccupancyVector result(std::move(occupation));
  if (std::abs(result.total - total) > 1e-8 * std::max(1.0, total))
    throw numerical_error(
        "gibbs_occupancy: multiplier search failed to meet the total");
  return result;
}

double statistics_entropy(Kind kind, const LevelSpec& levels,
                          const OccupancyVector& occ) {
  if (occ.occupation.size() != levels.size())
    throw std::invalid_argument(
        "statistics_entropy: occupancy and level counts differ");
  double sum = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const double g = levels.multiplicity[i];
    const double p = occ.occupation[i];
    if (kind == Kind::bose) {
      sum += specfun::log_gamma(g + p) - specfun::log_gamma(g) -
             specfun::log_gamma(p + 1.0);
    } else {
      if (p > g)
        throw std::domain_error(
            "statistics_entropy: fermi occupation exceeds multiplicity");
      sum += specfun::log_gamma(g + 1.0) - specfun::log_gamma(g - p + 1.0) -
             specfun::log_gamma(p + 1.0);
    }
  }
  return sum;
}

double free_energy(const LevelSpec& levels, const OccupancyVector& occ,
                   double theta, Kind kind) {
  if (!std::isfinite(theta) || theta <= 0.0)
    throw std::domain_error("free_energy: theta must be positive");
  if (occ.occupation.size() != levels.size())
    throw std::invalid_argument(
        "free_energy: occupancy and level counts differ");
  double energy = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i)
    energy += levels.x[i] * occ.occupation[i];
  return energy - theta * statistics_entropy(kind, levels, occ);
}

NaiveAllocation naive_max(const LevelSpec& levels, std::int64_t units) {
  if (units < 1)
    throw std::domain_error("naive_max: units must be at least 1");
  std::vector<double> occupation(levels.size(), 0.0);
  occupation.back() = static_cast<double>(units);
  NaiveAllocation result;
  result.allocation = OccupancyVector(std::move(occupation));
  result.value = static_cast<double>(units) * levels.x.back();
  return result;
}

}  // namespace quasimarket::occupancy
