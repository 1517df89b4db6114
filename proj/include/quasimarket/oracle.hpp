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
#include <string>
#include <vector>

#include "quasimarket/deposit.hpp"

namespace quasimarket::oracle {

struct BruteForceResult {
  std::int64_t k = 0;
  double income = 0.0;
};

/// Exhaustive integer maximizer of deposit::total_income over k = 0..N.
/// Deterministic; ties break toward smaller k.
BruteForceResult brute_force_optimum(double beta,
                                     const deposit::DepositScenario& s);

/// Count of distinct ways to place `bonds` indistinguishable units into the
/// listed bank groups, with the inputs echoed back.
struct AllocationEnumeration {
  std::uint64_t bonds = 0;
  std::vector<std::uint64_t> bank_multiplicities;
  std::uint64_t count = 0;
};

/// Counts allocations by recursive stars-and-bars enumeration per group; no
/// closed form is used. Throws capacity_error when the memo table would
/// exceed 1e8 states or the count overflows 64 bits.
AllocationEnumeration enumerate_allocations(
    std::uint64_t bonds, std::vector<std::uint64_t> bank_multiplicities);

struct CoinTurnover {
  std::uint64_t initial_heads = 0;
  std::uint64_t final_heads = 0;
  std::string generator;  // algorithm identifier for reproducibility
};

/// Simulates `players` fair coin draws from a seeded deterministic engine,
/// then applies the turnover rule (every tail flipped to head), so
/// final_heads == players always.
CoinTurnover coin_turnover(std::uint64_t players, std::uint64_t seed);

}  // namespace quasimarket::oracle
