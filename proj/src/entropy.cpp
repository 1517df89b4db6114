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

#include "quasimarket/entropy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "quasimarket/specfun.hpp"

namespace quasimarket::entropy {

namespace {

using specfun::log_gamma;

double checked_sum(const std::vector<double>& v) {
  double sum = 0.0;
  for (double value : v) {
    if (!std::isfinite(value))
      throw std::domain_error("measure entries must be finite");
    sum += value;
  }
  return sum;
}

}  // namespace

CountVector::CountVector(std::vector<double> counts_in)
    : counts(std::move(counts_in)) {
  if (counts.empty())
    throw std::invalid_argument("CountVector: at least one count required");
  for (double c : counts)
    if (!std::isfinite(c) || c <= 0.0)
      throw std::invalid_argument("CountVector: counts must be positive");
  total = checked_sum(counts);
}

DiscreteMeasureTriple::DiscreteMeasureTriple(std::vector<double> p_in,
                                             std::vector<double> q_in,
                                             std::vector<double> mu_in)
    : p(std::move(p_in)), q(std::move(q_in)), mu(std::move(mu_in)) {
  if (p.empty() || p.size() != q.size() || p.size() != mu.size())
    throw std::invalid_argument(
        "DiscreteMeasureTriple: p, q, mu must be nonempty and equally sized");
  for (double value : p)
    if (!std::isfinite(value) || value <= 0.0)
      throw std::invalid_argument(
          "DiscreteMeasureTriple: probability atoms must be positive");
  for (double value : q)
    if (!std::isfinite(value) || value < 0.0)
      throw std::invalid_argument(
          "DiscreteMeasureTriple: q entries must be nonnegative");
  for (double value : mu)
    if (!std::isfinite(value) || value < 0.0)
      throw std::invalid_argument(
          "DiscreteMeasureTriple: mu entries must be nonnegative");
  const double p_total = checked_sum(p);
  if (std::abs(p_total - 1.0) > 1e-12)
    throw std::invalid_argument(
        "DiscreteMeasureTriple: probability atoms must sum to 1");
  q_total = checked_sum(q);
  mu_total = checked_sum(mu);
}

double bose_multiplicity(double deposits, double banks) {
  if (!std::isfinite(deposits) || deposits < 0.0)
    throw std::domain_error(
        "bose_multiplicity: deposits must be nonnegative and finite");
  if (!std::isfinite(banks) || banks < 1.0)
    throw std::domain_error("bose_multiplicity: banks must be at least 1");
  return log_gamma(deposits + banks) - log_gamma(deposits + 1.0) -
         log_gamma(banks);
}

double boltzmann_multiplicity(double deposits, double total_units,
                              double banks) {
  if (!std::isfinite(deposits) || deposits < 0.0)
    throw std::domain_error(
        "boltzmann_multiplicity: deposits must be nonnegative and finite");
  if (!std::isfinite(total_units) || total_units < 1.0)
    throw std::domain_error(
        "boltzmann_multiplicity: total_units must be at least 1");
  if (deposits > total_units)
    throw std::domain_error(
        "boltzmann_multiplicity: deposits cannot exceed total_units");
  if (!std::isfinite(banks) || banks < 1.0)
    throw std::domain_error("boltzmann_multiplicity: banks must be at least 1");
  return log_gamma(total_units + 1.0) - log_gamma(deposits + 1.0) -
         log_gamma(total_units - deposits + 1.0) + deposits * std::log(banks);
}

double entropy_symbol(const CountVector& counts, Mode mode) {
  double sum = 0.0;
  for (double c : counts.counts) sum += log_gamma(c);
  const double raw = sum / counts.total;
  if (mode == Mode::raw) return raw;
  // ln Gamma(Mp) ~ Mp ln(Mp) - Mp, so the raw symbol carries an extra
  // ln M - 1 relative to the plain sum p ln p.
  return raw - std::log(counts.total) + 1.0;
}

double relative_entropy_symbol(const DiscreteMeasureTriple& t, Mode mode) {
  double sum = 0.0;
  for (std::size_t i = 0; i < t.p.size(); ++i) {
    if (t.q[i] <= 0.0)
      throw std::domain_error(
          "relative_entropy_symbol: q must be positive at every atom");
    sum += t.p[i] * log_gamma(t.q[i] / t.p[i]);
  }
  const double raw = sum / t.q_total;
  if (mode == Mode::raw) return raw;
  return raw - std::log(t.q_total) + 1.0;
}

double bose_relative_entropy(const DiscreteMeasureTriple& t) {
  if (t.q_total <= 0.0 || t.mu_total <= 0.0)
    throw std::domain_error(
        "bose_relative_entropy: q and mu must have positive totals");
  const double m = t.q_total;
  const double k = t.mu_total;
  double sum = 0.0;
  for (std::size_t i = 0; i < t.p.size(); ++i) {
    const double dq = t.q[i] / t.p[i];
    const double dmu = t.mu[i] / t.p[i];
    sum += t.p[i] * (log_gamma(dq + dmu) / (m + k) -
                     log_gamma(dq + 1.0) / m - log_gamma(dmu) / k);
  }
  return sum;
}

double fermi_relative_entropy(const DiscreteMeasureTriple& t) {
  if (t.q_total <= 0.0 || t.mu_total <= 0.0)
    throw std::domain_error(
        "fermi_relative_entropy: q and mu must have positive totals");
  const double m = t.q_total;
  const double k = t.mu_total;
  double sum = 0.0;
  for (std::size_t i = 0; i < t.p.size(); ++i) {
    const double dq = t.q[i] / t.p[i];
    const double dmu = t.mu[i] / t.p[i];
    if (dmu - dq + 1.0 <= 0.0)
      throw std::domain_error(
          "fermi_relative_entropy: exclusion violated (q over-occupies mu)");
    sum += t.p[i] * (log_gamma(dmu + 1.0) / k - log_gamma(dq + 1.0) / m -
                     log_gamma(dmu - dq + 1.0) / (k + m));
  }
  return sum;
}

double version_count(std::int64_t bonds, std::int64_t banks,
                     VersionCountMode mode) {
  if (bonds < 1) throw std::domain_error("version_count: bonds must be >= 1");
  if (banks < 1) throw std::domain_error("version_count: banks must be >= 1");

  if (mode == VersionCountMode::product_of_partials) {
    double log_product = 0.0;
    for (std::int64_t j = 1; j <= bonds; ++j)
      log_product += bose_multiplicity(static_cast<double>(j),
                                       static_cast<double>(banks));
    return log_product;
  }

  // Log-sum-exp over the splits: the pyramid takes bonds - j, the banks j.
  double max_term = -std::numeric_limits<double>::infinity();
  std::vector<double> terms(static_cast<std::size_t>(bonds) + 1);
  for (std::int64_t j = 0; j <= bonds; ++j) {
    const double term = bose_multiplicity(static_cast<double>(j),
                                          static_cast<double>(banks));
    terms[static_cast<std::size_t>(j)] = term;
    max_term = std::max(max_term, term);
  }
  double sum = 0.0;
  for (double term : terms) sum += std::exp(term - max_term);
  return max_term + std::log(sum);
}

}  // namespace quasimarket::entropy
