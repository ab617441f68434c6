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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "polysub/polynomial.hpp"

namespace polysub {

enum class IrreducibilityStatus { Irreducible, Reducible, Unknown };

std::string_view to_string(IrreducibilityStatus status) noexcept;

/*
 * Outcome of an irreducibility test.
 *
 * `test` names the test that decided the verdict ("rabin", "degree-one",
 * "rational-root", "eisenstein", "mod-p", "squarefree"); for Unknown it lists
 * the tests that were tried. A Reducible verdict always carries a proper
 * factor w of f (1 <= deg w < deg f). Over Q an Irreducible verdict from
 * Eisenstein or a mod-p reduction carries the certifying prime.
 */
struct IrreducibilityVerdict {
    IrreducibilityStatus status = IrreducibilityStatus::Unknown;
    std::string test;
    std::optional<Polynomial> factor;
    std::optional<std::uint64_t> prime;
};

constexpr unsigned kDefaultPrimeBudget = 25;

/// Exact Rabin test over F_p. Throws ConstantPolynomial, WrongField.
IrreducibilityVerdict rabin_irreducible_fp(const Polynomial& f);

/// gcd(f, f') is constant. Over F_p a vanishing derivative means f is a p-th power.
bool squarefree_check(const Polynomial& f);

/// Sound but incomplete certification over Q. Throws ConstantPolynomial, WrongField.
IrreducibilityVerdict q_irreducibility_certificate(const Polynomial& f, unsigned prime_budget = kDefaultPrimeBudget);

/// Dispatches on the field of f.
IrreducibilityVerdict check_irreducible(const Polynomial& f, unsigned prime_budget = kDefaultPrimeBudget);

/// A proper monic factor of a reducible polynomial over F_p (squarefree
/// split, distinct-degree, then equal-degree splitting with a fixed seed).
/// Returns nullopt when f is irreducible.
std::optional<Polynomial> find_proper_factor_fp(const Polynomial& f);

}  // namespace polysub
