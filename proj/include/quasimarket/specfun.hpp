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

namespace quasimarket::specfun {

/// Euler-Mascheroni constant; digamma(1) == -euler_gamma.
inline constexpr double euler_gamma = 0.5772156649015328606;

/// Evaluation route for digamma_gap.
enum class GapMethod { closed_form, quadrature };

/// ln Gamma(x) for x > 0.
///
/// The argument is shifted upward with ln Gamma(x+1) = ln Gamma(x) + ln x
/// until the Stirling series applies; relative accuracy ~1e-12 over
/// [1e-3, 1e15]. Throws std::domain_error for nonpositive or non-finite x.
double log_gamma(double x);

/// Digamma Psi(x) = d/dx ln Gamma(x) for x > 0, strictly increasing.
///
/// Same shift-then-series scheme as log_gamma; absolute accuracy ~1e-12.
/// Throws std::domain_error for nonpositive or non-finite x.
double digamma(double x);

/// Inverse of digamma: the unique x > 0 with digamma(x) == y.
///
/// Safeguarded Newton iteration from the usual two-branch initial guess;
/// the residual |digamma(x) - y| is at most 1e-10 (typically ~1e-13).
/// Throws std::domain_error for non-finite y and numerical_error when the
/// result would overflow.
double inv_digamma(double y);

/// The gap Psi(degeneracy + occupation) - Psi(occupation + 1), i.e. the
/// marginal log-multiplicity of one more unit in a Bose count.
///
/// GapMethod::closed_form evaluates the digamma difference directly.
/// GapMethod::quadrature integrates (t^k - t^(G+k-1))/(1-t) over [0,1]
/// (k = occupation, G = degeneracy) with composite Gauss-Legendre panels
/// graded toward the t = 1 endpoint, where the integrand has the finite
/// limit G - 1. The two routes agree to ~1e-8 for degeneracy up to 1e4 and
/// occupation up to 1e6.
double digamma_gap(double degeneracy, double occupation,
                   GapMethod method = GapMethod::closed_form);

}  // namespace quasimarket::specfun
