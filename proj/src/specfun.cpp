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

#include "quasimarket/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "quasimarket/errors.hpp"
#include "polygamma_internal.hpp"

namespace quasimarket::specfun {

namespace {

// The asymptotic series are applied only above this argument; smaller
// arguments are shifted up by the recurrences. At x = 12 the truncation
// error of the tails below is ~1e-18.
constexpr double shift_threshold = 12.0;

// Stirling tail for ln Gamma: sum of B_{2n} / (2n(2n-1) x^{2n-1}).
constexpr std::array<double, 7> log_gamma_tail = {
    1.0 / 12.0,   -1.0 / 360.0,       1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0, -691.0 / 360360.0,  1.0 / 156.0};

// Tail for Psi: sum of B_{2n} / (2n x^{2n}).
constexpr std::array<double, 7> digamma_tail = {
    1.0 / 12.0,  -1.0 / 120.0,       1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0,   1.0 / 12.0};

// Tail for Psi': sum of B_{2n} / x^{2n+1}.
constexpr std::array<double, 7> trigamma_tail = {
    1.0 / 6.0,  -1.0 / 30.0,       1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0,   7.0 / 6.0};

void require_positive(double x, const char* caller) {
  if (!std::isfinite(x) || x <= 0.0)
    throw std::domain_error(std::string(caller) +
                            ": argument must be positive and finite");
}

double log_gamma_series(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double tail = 0.0;
  double power = inv;
  for (double c : log_gamma_tail) {
    tail += c * power;
    power *= inv2;
  }
  constexpr double half_log_two_pi = 0.91893853320467274178;
  return (x - 0.5) * std::log(x) - x + half_log_two_pi + tail;
}

double digamma_series(double x) {
  const double inv2 = 1.0 / (x * x);
  double tail = 0.0;
  double power = inv2;
  for (double c : digamma_tail) {
    tail += c * power;
    power *= inv2;
  }
  return std::log(x) - 0.5 / x - tail;
}

double trigamma_series(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double tail = 0.0;
  double power = inv * inv2;
  for (double c : trigamma_tail) {
    tail += c * power;
    power *= inv2;
  }
  return inv + 0.5 * inv2 + tail;
}

// Fixed-order Gauss-Legendre rule on [-1, 1], nodes by Newton iteration on
// the Legendre recurrence.
struct QuadratureRule {
  static constexpr int order = 64;
  std::array<double, 64> node{};
  std::array<double, 64> weight{};
};

const QuadratureRule& gauss_legendre_64() {
  static const QuadratureRule rule = [] {
    QuadratureRule r;
    const int n = QuadratureRule::order;
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double derivative = 0.0;
      for (int iteration = 0; iteration < 64; ++iteration) {
        double p0 = 1.0;
        double p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
        }
        derivative = n * (x * p0 - p1) / (x * x - 1.0);
        const double dx = p0 / derivative;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      r.node[i] = -x;
      r.node[n - 1 - i] = x;
      r.weight[i] = r.weight[n - 1 - i] =
          2.0 / ((1.0 - x * x) * derivative * derivative);
    }
    return r;
  }();
  return rule;
}

template <typename F>
double integrate_panel(const F& f, double lo, double hi) {
  const auto& rule = gauss_legendre_64();
  const double center = 0.5 * (hi + lo);
  const double half = 0.5 * (hi - lo);
  double sum = 0.0;
  for (int i = 0; i < QuadratureRule::order; ++i)
    sum += rule.weight[i] * f(center + half * rule.node[i]);
  return half * sum;
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  double shift = 0.0;
  while (x < shift_threshold) {
    shift -= std::log(x);
    x += 1.0;
  }
  return log_gamma_series(x) + shift;
}

double digamma(double x) {
  require_positive(x, "digamma");
  double shift = 0.0;
  while (x < shift_threshold) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  return digamma_series(x) + shift;
}

namespace internal {
double trigamma(double x) {
  require_positive(x, "trigamma");
  double shift = 0.0;
  while (x < shift_threshold) {
    shift += 1.0 / (x * x);
    x += 1.0;
  }
  return trigamma_series(x) + shift;
}
}  // namespace internal

double inv_digamma(double y) {
  if (!std::isfinite(y))
    throw std::domain_error("inv_digamma: argument must be finite");
  // For large y the leading correction exp(y) + 1/2 is already below any
  // useful residual; Psi(exp(y) + 1/2) - y ~ -exp(-2y)/8.
  if (y >= 30.0) {
    const double x = std::exp(y) + 0.5;
    if (!std::isfinite(x))
      throw numerical_error("inv_digamma: result overflows double range");
    return x;
  }
  double x = (y >= -2.22) ? std::exp(y) + 0.5 : -1.0 / (y + euler_gamma);

  // Bracket the root, then run Newton with bisection fallback.
  double lo = x;
  double hi = x;
  if (digamma(x) < y) {
    while (digamma(hi) < y) {
      lo = hi;
      hi *= 2.0;
      if (!std::isfinite(hi))
        throw numerical_error("inv_digamma: bracket expansion overflowed");
    }
  } else {
    while (digamma(lo) > y) {
      hi = lo;
      lo *= 0.5;
      if (lo < 1e-300)
        throw numerical_error("inv_digamma: bracket expansion underflowed");
    }
  }

  double residual = digamma(x) - y;
  for (int iteration = 0; iteration < 100 && std::abs(residual) > 1e-13;
       ++iteration) {
    if (residual > 0.0)
      hi = x;
    else
      lo = x;
    double next = x - residual / internal::trigamma(x);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
    residual = digamma(x) - y;
  }
  if (std::abs(residual) > 1e-10)
    throw numerical_error("inv_digamma: Newton iteration failed to converge");
  return x;
}

double digamma_gap(double degeneracy, double occupation, GapMethod method) {
  require_positive(degeneracy, "digamma_gap");
  if (!std::isfinite(occupation) || occupation < 0.0)
    throw std::domain_error(
        "digamma_gap: occupation must be nonnegative and finite");

  if (method == GapMethod::closed_form)
    return digamma(degeneracy + occupation) - digamma(occupation + 1.0);

  // The integrand (t^k - t^(G+k-1))/(1-t) is awkward at both endpoints: at
  // t = 0 the powers have a branch point for non-integer exponents, and at
  // t = 1 the factor t^k concentrates on the scale 1 - t ~ 1/(G+k) (the
  // value there tends to G - 1).  Both are handled by splitting at t = 1/2
  // and halving the panels geometrically toward each endpoint, which keeps
  // the fixed-order rule spectrally accurate on every panel.
  const double k = occupation;
  const double g = degeneracy;

  // t in (0, 1/2]: direct form, t^k - t^(G+k-1) = -t^k expm1((G-1) ln t).
  const auto lower_integrand = [k, g](double t) {
    const double l = std::log(t);
    return -std::exp(k * l) * std::expm1((g - 1.0) * l) / (1.0 - t);
  };
  // t in [1/2, 1) via u = 1 - t, stable against cancellation in 1 - t.
  const auto upper_integrand = [k, g](double u) {
    const double l = std::log1p(-u);
    return -std::exp(k * l) * std::expm1((g - 1.0) * l) / u;
  };

  double total = 0.0;
  double edge = 0.5;
  for (int j = 0; j < 40; ++j) {
    total += integrate_panel(lower_integrand, 0.5 * edge, edge);
    edge *= 0.5;
  }
  total += integrate_panel(lower_integrand, 0.0, edge);

  const int upper_levels = std::clamp(
      static_cast<int>(std::ceil(std::log2(g + k + 2.0))) + 4, 4, 52);
  edge = 0.5;
  for (int j = 0; j < upper_levels; ++j) {
    total += integrate_panel(upper_integrand, 0.5 * edge, edge);
    edge *= 0.5;
  }
  total += integrate_panel(upper_integrand, 0.0, edge);

  if (!std::isfinite(total))
    throw numerical_error("digamma_gap: quadrature did not converge");
  return total;
}

}  // namespace quasimarket::specfun
