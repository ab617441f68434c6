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

#include "polysub/construction.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace polysub {

namespace {

void require_degree_at_least_3(const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "the zero polynomial has no substitution certificate");
    if (*f.degree() < 3) {
        throw Error(ErrorCode::DegreeTooSmall, "f has degree " + std::to_string(*f.degree()) +
                                                   "; the construction requires an irreducible f of degree d >= 3");
    }
}

}  // namespace

Polynomial reciprocal_g(const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "reciprocal of the zero polynomial");
    if (f.coeff(0).is_zero()) {
        throw Error(ErrorCode::ZeroConstantTerm, "f(0) = 0, so X divides f and f is not irreducible of degree >= 2");
    }
    return monic(reverse(f));
}

Polynomial build_h_explicit(const Polynomial& f) {
    require_degree_at_least_3(f);
    if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "explicit construction expects a monic f; apply monic() first");
    if (f.coeff(0).is_zero()) throw Error(ErrorCode::ZeroConstantTerm, "f(0) = 0, so X divides f");
    // g_raw(0) = lc(f) = 1, hence 1 - g_raw is divisible by X.
    const Polynomial one_minus_g = Polynomial::constant(FieldElement::one(f.field())) - reverse(f);
    std::vector<FieldElement> c(one_minus_g.coeffs().begin() + 1, one_minus_g.coeffs().end());
    return Polynomial(f.field(), std::move(c));
}

Polynomial build_h_modular_inverse(const Polynomial& f) {
    require_degree_at_least_3(f);
    const Polynomial g = reciprocal_g(f);
    const Polynomial x = Polynomial::x(f.field());
    auto [d, u, v] = xgcd(x, g);
    if (!d.is_constant()) throw Error(ErrorCode::NotCoprime, "X and g share a factor; f was not irreducible");
    Polynomial h = u % g;
    if ((x * h) % g != Polynomial::constant(FieldElement::one(f.field()))) {
        throw std::logic_error("X * h is not congruent to 1 modulo g");
    }
    return h;
}

CertificateChecks compute_checks(const Polynomial& f, const Polynomial& g, const Polynomial& h, const Polynomial& cofactor,
                                 std::size_t d) {
    CertificateChecks checks;
    const Polynomial fh = compose(f, h);
    checks.divides = !g.is_zero() && (fh % g).is_zero();
    const auto deg_h = h.degree();
    checks.deg_h_eq_dm1 = deg_h && d >= 1 && *deg_h == d - 1;
    checks.deg_h_ge2 = deg_h && *deg_h >= 2;
    const auto deg_fh = fh.degree();
    checks.deg_fh_eq_d_dm1 = deg_fh && d >= 1 && *deg_fh == d * (d - 1);
    checks.deg_fh_ge_2d = deg_fh && *deg_fh >= 2 * d;
    const auto deg_cofactor = cofactor.degree();
    checks.cofactor_nontrivial = deg_cofactor && d >= 2 && *deg_cofactor == d * (d - 2) && *deg_cofactor >= 1;
    return checks;
}

SubstitutionCertificate certify_reducible(const Polynomial& f, HypothesisMode mode, unsigned prime_budget) {
    require_degree_at_least_3(f);
    const std::size_t d = *f.degree();

    std::optional<IrreducibilityVerdict> verdict;
    if (mode == HypothesisMode::Strict) {
        verdict = check_irreducible(f, prime_budget);
        if (verdict->status == IrreducibilityStatus::Reducible) {
            throw NotIrreducibleError("f is reducible over " + f.field().to_string() + ": factor " + verdict->factor->to_string() +
                                          " (" + verdict->test + ")",
                                      *verdict);
        }
        if (verdict->status == IrreducibilityStatus::Unknown) {
            throw Error(ErrorCode::UnknownIrreducibility,
                        "irreducibility of f over Q could not be certified (tried " + verdict->test + ")");
        }
    }

    Polynomial f_monic = monic(f);
    Polynomial g = reciprocal_g(f);
    Polynomial h = build_h_explicit(f_monic);
    if (h != build_h_modular_inverse(f)) throw std::logic_error("explicit and modular-inverse constructions of h disagree");

    Polynomial fh = compose(f, h);
    auto [cofactor, remainder] = divrem(fh, g);
    CertificateChecks checks = compute_checks(f, g, h, cofactor, d);
    if (!remainder.is_zero() || g * cofactor != fh || !checks.all()) {
        throw std::logic_error("certificate self-check failed for f = " + f.to_string());
    }
    return SubstitutionCertificate{f.field(), f,      std::move(f_monic), std::move(g), std::move(h), std::move(fh),
                                   std::move(cofactor), d, checks,        mode,         std::move(verdict)};
}

}  // namespace polysub
