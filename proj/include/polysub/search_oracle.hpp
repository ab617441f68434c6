// Copyright 2026 The polysub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "polysub/polynomial.hpp"

namespace polysub {

/*
 * Brute-force ground truth over small prime fields.
 *
 * For every monic irreducible f of degree d over F_p, every substitution h
 * with 1 <= deg h <= d-1 is tried and f(h) is tested for irreducibility. The
 * constructed h must appear among the "good" ones whenever d >= 3.
 */

constexpr std::uint64_t kDefaultMaxSweepSize = 10'000'000;

struct GoodSubstitutionCount {
    std::uint64_t total = 0;  ///< number of h with 1 <= deg h <= d-1, i.e. p^d - p
    std::uint64_t good = 0;   ///< those with f(h) not irreducible
    /// Whether the constructed h is good; empty when d < 3.
    std::optional<bool> constructed_found;
};

struct SweepRecord {
    Polynomial f;
    GoodSubstitutionCount count;
};

struct SweepReport {
    std::uint64_t p = 0;
    std::size_t d = 0;
    std::vector<SweepRecord> records;
    /// Not serialized, so reports stay byte-identical across runs.
    std::chrono::duration<double> elapsed{};

    /// Every record has at least one good h and, for d >= 3, finds the constructed h.
    bool all_pass() const noexcept;
    std::uint64_t num_with_good_h() const noexcept;
    std::uint64_t num_constructed_found() const noexcept;
};

struct SweepOptions {
    std::uint64_t max_size = kDefaultMaxSweepSize;
    unsigned workers = 1;
};

/// All monic irreducibles of degree d over F_p, lexicographic in the ascending
/// coefficient tuple. Throws SweepTooLarge when p^d > max_size.
std::vector<Polynomial> enumerate_monic_irreducibles(std::uint64_t p, std::size_t d,
                                                     std::uint64_t max_size = kDefaultMaxSweepSize);

/// Exhaustive count over all h of degree 1..d-1. Throws DegreeTooSmall when d < 2.
GoodSubstitutionCount count_good_h(const Polynomial& f);

/// True iff no monic irreducible quadratic over F_p has a good h of degree <= 1.
bool negative_check_d2(std::uint64_t p, std::uint64_t max_size = kDefaultMaxSweepSize);

/// Throws SweepTooLarge when p^(2d) > max_size.
SweepReport run_sweep(std::uint64_t p, std::size_t d, const SweepOptions& options = {});

nlohmann::json to_json(const SweepReport& report);
/// One row per f: f,num_h_total,num_h_reducible,constructed_h_found.
std::string to_csv(const SweepReport& report);

}  // namespace polysub
