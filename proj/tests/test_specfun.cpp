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
#include <numbers>
#include <random>
#include <stdexcept>

#include "quasimarket/errors.hpp"
#include "quasimarket/specfun.hpp"
#include "test_support.hpp"

using namespace quasimarket;
using test_support::uniform;

namespace {

// Independent inversion route: plain bisection of digamma on a bracket.
double bisect_digamma(double y, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (specfun::digamma(mid) < y ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("log_gamma at factorial and half-integer points") {
  CHECK(std::abs(specfun::log_gamma(1.0)) <= 1e-12);
  CHECK(std::abs(specfun::log_gamma(2.0)) <= 1e-12);
  CHECK(std::abs(specfun::log_gamma(5.0) - std::log(24.0)) <= 1e-12);
  // Gamma(1/2) = sqrt(pi).
  CHECK(std::abs(specfun::log_gamma(0.5) - 0.5 * std::log(std::numbers::pi)) <=
        1e-12);
}

TEST_CASE("log_gamma agrees with the C library over a wide range") {
  std::mt19937_64 rng(20260809);
  for (int i = 0; i < 2000; ++i) {
    const double x = std::exp(uniform(rng, std::log(1e-3), std::log(1e15)));
    const double mine = specfun::log_gamma(x);
    const double reference = std::lgamma(x);
    CHECK(std::abs(mine - reference) <=
          1e-12 * std::max(1.0, std::abs(reference)));
  }
}

TEST_CASE("log_gamma recurrence") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 10000; ++i) {
    const double x = std::exp(uniform(rng, std::log(1e-3), std::log(1e6)));
    const double lhs = specfun::log_gamma(x + 1.0);
    const double rhs = specfun::log_gamma(x) + std::log(x);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("log_gamma rejects nonpositive and non-finite arguments") {
  CHECK_THROWS_AS(specfun::log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(specfun::log_gamma(-3.5), std::domain_error);
  CHECK_THROWS_AS(specfun::log_gamma(std::nan("")), std::domain_error);
}

TEST_CASE("digamma special values") {
  CHECK(std::abs(specfun::digamma(1.0) + specfun::euler_gamma) <= 1e-12);
  CHECK(std::abs(specfun::digamma(2.0) - (1.0 - specfun::euler_gamma)) <=
        1e-12);
  // Psi(11) = H_10 - gamma with H_10 = 7381/2520.
  const double h10 = 7381.0 / 2520.0;
  CHECK(std::abs(specfun::digamma(11.0) - (h10 - specfun::euler_gamma)) <=
        1e-12);
}

TEST_CASE("digamma recurrence on random arguments") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 10000; ++i) {
    const double x = uniform(rng, 0.01, 1e6);
    const double defect =
        specfun::digamma(x + 1.0) - specfun::digamma(x) - 1.0 / x;
    CHECK(std::abs(defect) <= 1e-11);
  }
}

TEST_CASE("digamma is strictly increasing") {
  double previous = specfun::digamma(1e-3);
  for (double x : {1e-2, 0.1, 0.5, 1.0, 1.4616, 2.0, 10.0, 1e3, 1e6, 1e12}) {
    const double value = specfun::digamma(x);
    CHECK(value > previous);
    previous = value;
  }
}

TEST_CASE("digamma matches the log_gamma derivative") {
  for (double x : {0.5, 1.0, 2.0, 5.0, 10.0, 100.0, 1e3, 1e5}) {
    const double h = 1e-5 * x;
    const double finite_difference =
        (specfun::log_gamma(x + h) - specfun::log_gamma(x - h)) / (2.0 * h);
    CHECK(std::abs(finite_difference - specfun::digamma(x)) <=
          1e-9 * std::max(1.0, std::abs(specfun::digamma(x))));
  }
}

TEST_CASE("inv_digamma recovers known points") {
  CHECK(std::abs(specfun::inv_digamma(-specfun::euler_gamma) - 1.0) <= 1e-10);
  CHECK(std::abs(specfun::inv_digamma(1.0 - specfun::euler_gamma) - 2.0) <=
        1e-10);
  // The positive zero of digamma, located independently by bisection.
  const double root = bisect_digamma(0.0, 1.0, 2.0);
  CHECK(std::abs(specfun::inv_digamma(0.0) - root) <= 1e-9);
  CHECK(specfun::inv_digamma(0.0) == doctest::Approx(1.4616321).epsilon(1e-6));
}

TEST_CASE("inv_digamma residual and monotonicity over a wide range") {
  double previous = 0.0;
  bool first = true;
  for (double y = -30.0; y <= 30.0; y += 0.25) {
    const double x = specfun::inv_digamma(y);
    CHECK(x > 0.0);
    CHECK(std::abs(specfun::digamma(x) - y) <= 1e-10);
    if (!first) CHECK(x > previous);
    previous = x;
    first = false;
  }
}

TEST_CASE("inv_digamma handles large arguments and overflow") {
  const double x = specfun::inv_digamma(50.0);
  CHECK(std::abs(specfun::digamma(x) - 50.0) <= 1e-10);
  CHECK(std::isfinite(specfun::inv_digamma(700.0)));
  CHECK_THROWS_AS(specfun::inv_digamma(1000.0), numerical_error);
}

TEST_CASE("inv_digamma rejects non-finite input") {
  CHECK_THROWS_AS(
      specfun::inv_digamma(std::numeric_limits<double>::infinity()),
      std::domain_error);
  CHECK_THROWS_AS(specfun::inv_digamma(std::nan("")), std::domain_error);
}

TEST_CASE("digamma_gap closed form at recurrence points") {
  // One slot: the gap vanishes identically.
  for (double k : {0.0, 1.0, 7.0, 1000.0})
    CHECK(std::abs(specfun::digamma_gap(1.0, k)) <= 1e-12);
  // Psi(3) - Psi(2) = 1/2 and Psi(5) - Psi(3) = 1/3 + 1/4.
  CHECK(std::abs(specfun::digamma_gap(2.0, 1.0) - 0.5) <= 1e-12);
  CHECK(std::abs(specfun::digamma_gap(3.0, 2.0) - 7.0 / 12.0) <= 1e-12);
}

TEST_CASE("digamma_gap quadrature matches the closed form") {
  using specfun::GapMethod;
  CHECK(std::abs(specfun::digamma_gap(3.0, 2.0, GapMethod::quadrature) -
                 7.0 / 12.0) <= 1e-8);
  CHECK(std::abs(specfun::digamma_gap(1.0, 7.0, GapMethod::quadrature)) <=
        1e-10);
  // Zero occupation: the integrand loses its t^k factor entirely.
  CHECK(std::abs(specfun::digamma_gap(250.0, 0.0, GapMethod::quadrature) -
                 specfun::digamma_gap(250.0, 0.0)) <= 1e-8);

  std::mt19937_64 rng(777);
  for (int i = 0; i < 100; ++i) {
    const double g = std::exp(uniform(rng, 0.0, std::log(1e4)));
    const double k = std::exp(uniform(rng, std::log(1e-2), std::log(1e6)));
    const double closed = specfun::digamma_gap(g, k, GapMethod::closed_form);
    const double quad = specfun::digamma_gap(g, k, GapMethod::quadrature);
    CHECK(std::abs(closed - quad) <= 1e-8);
  }
}

TEST_CASE("digamma_gap decreases in the occupation for degeneracy above 1") {
  for (double g : {1.5, 2.0, 10.0, 500.0}) {
    double previous = specfun::digamma_gap(g, 0.0);
    for (double k : {0.5, 1.0, 2.0, 8.0, 50.0, 1e3, 1e5}) {
      const double value = specfun::digamma_gap(g, k);
      CHECK(value < previous);
      previous = value;
    }
  }
}

TEST_CASE("digamma_gap rejects bad arguments") {
  CHECK_THROWS_AS(specfun::digamma_gap(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(specfun::digamma_gap(2.0, -1.0), std::domain_error);
}
