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

#include "quasimarket/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "quasimarket/errors.hpp"

namespace quasimarket::oracle {

namespace {

constexpr std::uint64_t state_space_bound = 100'000'000;

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t result = 0;
  if (__builtin_add_overflow(a, b, &result))
    throw capacity_error("enumerate_allocations: count overflows 64 bits");
  return result;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t result = 0;
  if (__builtin_mul_overflow(a, b, &result))
    throw capacity_error("enumerate_allocations: count overflows 64 bits");
  return result;
}

// Ways to place k indistinguishable units into `banks` distinct slots, by the
// stars-and-bars recursion ways(k, b) = sum_j ways(k - j, b - 1), memoized.
class GroupCounter {
 public:
  GroupCounter(std::uint64_t max_units, std::uint64_t max_banks)
      : width_(max_units + 1),
        table_((max_units + 1) * max_banks, unset_) {}

  std::uint64_t ways(std::uint64_t units, std::uint64_t banks) {
    if (banks == 1) return 1;
    std::uint64_t& slot = table_[(banks - 1) * width_ + units];
    if (slot != unset_) return slot;
    std::uint64_t total = 0;
    for (std::uint64_t j = 0; j <= units; ++j)
      total = checked_add(total, ways(units - j, banks - 1));
    slot = total;
    return total;
  }

 private:
  static constexpr std::uint64_t unset_ = ~std::uint64_t{0};
  std::uint64_t width_;
  std::vector<std::uint64_t> table_;
};

}  // namespace

BruteForceResult brute_force_optimum(double beta,
                                     const deposit::DepositScenario& s) {
  BruteForceResult best;
  best.k = 0;
  best.income = deposit::total_income(0.0, beta, s);
  for (std::int64_t k = 1; k <= s.units; ++k) {
    const double income =
        deposit::total_income(static_cast<double>(k), beta, s);
    if (income > best.income) {
      best.k = k;
      best.income = income;
    }
  }
  return best;
}

AllocationEnumeration enumerate_allocations(
    std::uint64_t bonds, std::vector<std::uint64_t> bank_multiplicities) {
  if (bonds < 1)
    throw std::domain_error("enumerate_allocations: bonds must be >= 1");
  if (bank_multiplicities.empty())
    throw std::domain_error(
        "enumerate_allocations: at least one bank group required");
  std::uint64_t max_banks = 0;
  for (std::uint64_t g : bank_multiplicities) {
    if (g < 1)
      throw std::domain_error(
          "enumerate_allocations: bank multiplicities must be >= 1");
    max_banks = std::max(max_banks, g);
  }
  if (bonds >= state_space_bound ||
      (bonds + 1) > state_space_bound / max_banks)
    throw capacity_error(
        "enumerate_allocations: state space exceeds the practical bound");

  GroupCounter counter(bonds, max_banks);

  // Recurse over the group loads: each group takes j units, the remaining
  // groups the rest.
  const auto over_groups = [&](const auto& self, std::size_t group,
                               std::uint64_t remaining) -> std::uint64_t {
    if (group + 1 == bank_multiplicities.size())
      return counter.ways(remaining, bank_multiplicities[group]);
    std::uint64_t total = 0;
    for (std::uint64_t j = 0; j <= remaining; ++j) {
      const std::uint64_t here = counter.ways(j, bank_multiplicities[group]);
      total = checked_add(total,
                          checked_mul(here, self(self, group + 1,
                                                 remaining - j)));
    }
    return total;
  };

  AllocationEnumeration result;
  result.bonds = bonds;
  result.count = over_groups(over_groups, 0, bonds);
  result.bank_multiplicities = std::move(bank_multiplicities);
  return result;
}

CoinTurnover coin_turnover(std::uint64_t players, std::uint64_t seed) {
  if (players < 1)
    throw std::domain_error("coin_turnover: at least one player required");
  // The engine output sequence is pinned by the standard, so runs are
  // reproducible bit-for-bit across platforms; the low bit of each draw is
  // the coin.
  std::mt19937_64 engine(seed);
  std::uint64_t heads = 0;
  for (std::uint64_t i = 0; i < players; ++i) heads += engine() & 1u;
  CoinTurnover result;
  result.initial_heads = heads;
  result.final_heads = players;
  result.generator = "mt19937_64/low-bit";
  return result;
}

}  // namespace quasimarket::oracle
