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

#include <cstddef>
#include <optional>

#include "polysub/irreducibility.hpp"
#include "polysub/polynomial.hpp"

namespace polysub {

/*
 * Reducible substitutions for irreducible polynomials.
 *
 * For f irreducible of degree d >= 3 with root a, let g be the monic minimal
 * polynomial of 1/a (the reciprocal of f, made monic). Since K(1/a) = K(a)
 * there is h of degree d-1 with h(1/a) = a, namely h == X^-1 (mod g). Then
 * f(h(1/a)) = 0, so g divides f(h(X)), and deg f(h(X)) = d(d-1) >= 2d makes
 * f(h(X)) = g * cofactor a product of two nonconstant factors.
 */

enum class HypothesisMode {
    Strict,  ///< f must be certified irreducible by the irreducibility module
    Assume,  ///< irreducibility of f is asserted by the caller
};

struct CertificateChecks {
    bool divides = false;              ///< f(h) mod g == 0
    bool deg_h_eq_dm1 = false;         ///< deg h == d-1
    bool deg_h_ge2 = false;            ///< deg h >= 2
    bool deg_fh_eq_d_dm1 = false;      ///< deg f(h) == d(d-1)
    bool deg_fh_ge_2d = false;         ///< deg f(h) >= 2d
    bool cofactor_nontrivial = false;  ///< deg cofactor == d(d-2) >= 1

    bool all() const noexcept {
        return divides && deg_h_eq_dm1 && deg_h_ge2 && deg_fh_eq_d_dm1 && deg_fh_ge_2d && cofactor_nontrivial;
    }

    friend bool operator==(const CertificateChecks&, const CertificateChecks&) noexcept = default;
};

struct SubstitutionCertificate {
    FieldSpec field;
    Polynomial f;
    Polynomial f_monic;
    Polynomial g;
    Polynomial h;
    Polynomial fh;
    Polynomial cofactor;
    std::size_t d = 0;
    CertificateChecks checks;
    HypothesisMode mode = HypothesisMode::Strict;
    /// Verdict that established the hypothesis; empty in Assume mode.
    std::optional<IrreducibilityVerdict> irreducibility;
};

/// Raised by certify_reducible in Strict mode when f is shown reducible.
class NotIrreducibleError : public Error {
   public:
    NotIrreducibleError(const std::string& what, IrreducibilityVerdict verdict)
        : Error(ErrorCode::NotIrreducible, what), verdict_(std::move(verdict)) {}

    const IrreducibilityVerdict& verdict() const noexcept { return verdict_; }

   private:
    IrreducibilityVerdict verdict_;
};

/// monic(reverse(f)). Throws ZeroPolynomial, ZeroConstantTerm.
Polynomial reciprocal_g(const Polynomial& f);

/// h = (1 - X^d f(1/X)) / X for monic f. Throws NotMonic, DegreeTooSmall.
Polynomial build_h_explicit(const Polynomial& f);

/// The h with deg h < d and X*h == 1 (mod reciprocal_g(f)). Throws DegreeTooSmall, NotCoprime.
Polynomial build_h_modular_inverse(const Polynomial& f);

/// Builds and self-checks the full certificate. Throws DegreeTooSmall,
/// NotIrreducibleError, UnknownIrreducibility (Strict over Q).
SubstitutionCertificate certify_reducible(const Polynomial& f, HypothesisMode mode = HypothesisMode::Strict,
                                          unsigned prime_budget = kDefaultPrimeBudget);

/// The six named checks recomputed from (f, g, h, cofactor, d).
CertificateChecks compute_checks(const Polynomial& f, const Polynomial& g, const Polynomial& h, const Polynomial& cofactor,
                                 std::size_t d);

}  // namespace polysub
