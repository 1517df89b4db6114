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

namespace quasimarket::entropy {

/// Raw gamma-function value, or the Stirling-shifted value whose large-count
/// limit is the plain / relative entropy sum.
enum class Mode { raw, normalized };

/// Per-outcome test counts P_i = M * p_i with their total M.
struct CountVector {
  std::vector<double> counts;  // all strictly positive
  double total = 0.0;          // sum of counts

  explicit CountVector(std::vector<double> counts);
};

/// Finite atomic measure triple (P, Q, mu) on a common sample space: p is a
/// probability vector with all atoms positive, q and mu are nonnegative
/// measures with totals q_total and mu_total. Absolute continuity against p
/// is automatic.
struct DiscreteMeasureTriple {
  std::vector<double> p;
  std::vector<double> q;
  std::vector<double> mu;
  double q_total = 0.0;   // integral of q
  double mu_total = 0.0;  // integral of mu

  DiscreteMeasureTriple(std::vector<double> p, std::vector<double> q,
                        std::vector<double> mu);
};

/// ln of the number of ways to place `deposits` indistinguishable units into
/// `banks` slots: ln[Gamma(k+G) / (Gamma(k+1) Gamma(G))]. Real arguments are
/// accepted; at integers this is ln C(G+k-1, k).
double bose_multiplicity(double deposits, double banks);

/// ln of the labeled count ln[Gamma(N+1) G^k / (Gamma(k+1) Gamma(N-k+1))]
/// = ln C(N, k) + k ln G at integers. Requires deposits <= total_units.
double boltzmann_multiplicity(double deposits, double total_units,
                              double banks);

/// The entropy symbol (1/M) sum_i ln Gamma(P_i). In normalized mode the
/// shift -(ln M - 1) is applied, so the value tends to sum_i p_i ln p_i as
/// M grows with the shape of p fixed.
double entropy_symbol(const CountVector& counts, Mode mode);

/// Measure form (1/M) sum_i p_i ln Gamma(q_i / p_i). The normalized shift
/// -(ln M - 1) makes the value tend to (1/M) sum_i q_i ln(q_i / (M p_i)),
/// the Kullback-Leibler form, as the ratios q_i / p_i grow.
double relative_entropy_symbol(const DiscreteMeasureTriple& t, Mode mode);

/// Two-test relative entropy for indistinguishable units:
/// sum_i p_i [ lnG(q_i/p_i + mu_i/p_i)/(M+K) - lnG(q_i/p_i + 1)/M
///             - lnG(mu_i/p_i)/K ].
double bose_relative_entropy(const DiscreteMeasureTriple& t);

/// Two-test relative entropy under the exclusion ("queue") rule:
/// sum_i p_i [ lnG(mu_i/p_i + 1)/K - lnG(q_i/p_i + 1)/M
///             - lnG(mu_i/p_i - q_i/p_i + 1)/(K+M) ].
/// Requires mu_i/p_i - q_i/p_i + 1 > 0 at every atom.
double fermi_relative_entropy(const DiscreteMeasureTriple& t);

/// How version_count aggregates the per-split counts.
enum class VersionCountMode { sum_over_splits, product_of_partials };

/// ln of the number of ways to split `bonds` units between one pyramid slot
/// and `banks` identical slots. sum_over_splits sums the stars-and-bars
/// count over every split (equals ln C(banks + bonds, bonds));
/// product_of_partials multiplies the per-split counts instead.
double version_count(std::int64_t bonds, std::int64_t banks,
                     VersionCountMode mode);

}  // namespace quasimarket::entropy
