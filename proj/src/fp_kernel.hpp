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

// Dense polynomial kernel over F_p on raw residues. Internal to the library;
// irreducibility testing and factor search run here instead of on the generic
// FieldElement representation.

#pragma once

#include <cstdint>
#include <vector>

#include "polysub/polynomial.hpp"

namespace polysub::detail::fp {

/// Ascending residues, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) noexcept;
Poly from_polynomial(const Polynomial& f);
Polynomial to_polynomial(const Poly& a, const FieldSpec& field);

Poly sub(Poly a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
/// Remainder of a modulo a nonzero m.
Poly rem(Poly a, const Poly& m, std::uint64_t p);
/// Exact quotient a / m (m nonzero).
Poly quo(const Poly& a, const Poly& m, std::uint64_t p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p);
Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p);
Poly make_monic(Poly a, std::uint64_t p);
/// Monic gcd (empty when both are zero).
Poly gcd(Poly a, Poly b, std::uint64_t p);
Poly derivative(const Poly& a, std::uint64_t p);

inline std::size_t degree(const Poly& a) noexcept { return a.size() - 1; }

}  // namespace polysub::detail::fp
