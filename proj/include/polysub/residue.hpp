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

#include "polysub/polynomial.hpp"

namespace polysub {

/*
 * An element of the quotient ring K[X]/(modulus).
 *
 * The modulus is monic of degree >= 1 and the representative is always the
 * canonical remainder, so two classes are equal iff their representatives are.
 * With modulus g irreducible the class of X is a root of g.
 */
class ResidueClass {
   public:
    /// Throws ConstantPolynomial if deg(modulus) < 1 and NotMonic if it is not monic.
    ResidueClass(Polynomial modulus, const Polynomial& value);

    /// The class of X.
    static ResidueClass generator(const Polynomial& modulus);

    const Polynomial& modulus() const noexcept { return modulus_; }
    const Polynomial& rep() const noexcept { return rep_; }
    bool is_zero() const noexcept { return rep_.is_zero(); }

    ResidueClass& operator+=(const ResidueClass& rhs);
    ResidueClass& operator-=(const ResidueClass& rhs);
    ResidueClass& operator*=(const ResidueClass& rhs);

    friend ResidueClass operator+(ResidueClass lhs, const ResidueClass& rhs) { return lhs += rhs; }
    friend ResidueClass operator-(ResidueClass lhs, const ResidueClass& rhs) { return lhs -= rhs; }
    friend ResidueClass operator*(ResidueClass lhs, const ResidueClass& rhs) { return lhs *= rhs; }

    friend bool operator==(const ResidueClass&, const ResidueClass&) noexcept = default;

   private:
    void require_same_modulus(const ResidueClass& rhs) const;

    Polynomial modulus_;
    Polynomial rep_;
};

/// Multiplicative inverse via xgcd; throws NotCoprime when none exists.
ResidueClass inverse(const ResidueClass& a);

/// f evaluated at a class, by Horner's scheme inside the quotient ring.
ResidueClass evaluate(const Polynomial& f, const ResidueClass& at);

}  // namespace polysub
