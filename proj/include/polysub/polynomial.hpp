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
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polysub/field.hpp"

namespace polysub {

/*
 * Dense univariate polynomial over a FieldSpec.
 *
 * Coefficients are stored ascending by degree (coeffs()[i] multiplies X^i) and
 * kept in normal form: no trailing zero coefficients, so the zero polynomial
 * has an empty coefficient sequence and no degree.
 */
class Polynomial {
   public:
    explicit Polynomial(const FieldSpec& field) : field_(field) {}
    /// Normalizes; every coefficient must belong to `field`.
    Polynomial(const FieldSpec& field, std::vector<FieldElement> coeffs);

    /// Integer coefficients, ascending, reduced into the field.
    static Polynomial from_integers(const FieldSpec& field, std::initializer_list<std::int64_t> coeffs);
    static Polynomial from_integers(const FieldSpec& field, std::span<const std::int64_t> coeffs);
    static Polynomial constant(const FieldElement& c);
    /// c * X^k.
    static Polynomial monomial(const FieldElement& c, std::size_t k);
    /// The indeterminate X.
    static Polynomial x(const FieldSpec& field);

    const FieldSpec& field() const noexcept { return field_; }
    std::span<const FieldElement> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Empty for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;
    /// True for zero and nonzero constants.
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }

    /// Coefficient of X^i; zero past the degree.
    FieldElement coeff(std::size_t i) const;
    /// Throws ZeroPolynomial for zero.
    const FieldElement& leading() const;

    /// Bracketed ascending list, e.g. "[-2, 0, 0, 1]".
    std::string to_string() const;
    /// Human form, e.g. "x^3 - 2".
    std::string to_pretty_string() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const FieldElement& c);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(Polynomial lhs, const FieldElement& c) { return lhs *= c; }
    friend Polynomial operator*(const FieldElement& c, Polynomial rhs) { return rhs *= c; }

    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) noexcept {
        return lhs.field_ == rhs.field_ && lhs.coeffs_ == rhs.coeffs_;
    }

   private:
    void normalize() noexcept;
    void require_same_field(const FieldSpec& other) const;

    FieldSpec field_;
    std::vector<FieldElement> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

struct DivRem {
    Polynomial quotient;
    Polynomial remainder;
};

/// a == b * quotient + remainder with deg(remainder) < deg(b). Throws DivisionByZero when b == 0.
DivRem divrem(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

/// f(h(X)) by Horner's scheme.
Polynomial compose(const Polynomial& f, const Polynomial& h);

/// X^deg(f) * f(1/X): the coefficient sequence reversed, then normalized.
Polynomial reverse(const Polynomial& f);

/// f scaled so that its leading coefficient is 1.
Polynomial monic(const Polynomial& f);

FieldElement eval(const Polynomial& f, const FieldElement& x);

/// Formal derivative.
Polynomial derivative(const Polynomial& f);

struct Xgcd {
    Polynomial gcd;  ///< monic
    Polynomial u;
    Polynomial v;
};

/// u * a + v * b == gcd, with the minimal Bezout degrees of the Euclidean algorithm.
/// Throws BothZero when a == b == 0.
Xgcd xgcd(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) is the zero polynomial.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace polysub
