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

#include "polysub/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

namespace polysub {

Polynomial::Polynomial(const FieldSpec& field, std::vector<FieldElement> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) require_same_field(c.field());
    normalize();
}

Polynomial Polynomial::from_integers(const FieldSpec& field, std::initializer_list<std::int64_t> coeffs) {
    return from_integers(field, std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
}

Polynomial Polynomial::from_integers(const FieldSpec& field, std::span<const std::int64_t> coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (auto n : coeffs) c.push_back(FieldElement::from_integer(field, n));
    return Polynomial(field, std::move(c));
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::monomial(const FieldElement& c, std::size_t k) {
    std::vector<FieldElement> coeffs(k + 1, FieldElement::zero(c.field()));
    coeffs[k] = c;
    return Polynomial(c.field(), std::move(coeffs));
}

Polynomial Polynomial::x(const FieldSpec& field) { return monomial(FieldElement::one(field), 1); }

std::optional<std::size_t> Polynomial::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

FieldElement Polynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : FieldElement::zero(field_);
}

const FieldElement& Polynomial::leading() const {
    if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

std::string Polynomial::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i != 0) s += ", ";
        s += coeffs_[i].to_string();
    }
    return s + "]";
}

std::string Polynomial::to_pretty_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const FieldElement& c = coeffs_[k];
        if (c.is_zero()) continue;
        bool negative = field_.is_rationals() && sgn(c.rational()) < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        FieldElement magnitude = negative ? -c : c;
        if (k == 0) {
            os << magnitude;
            continue;
        }
        if (!magnitude.is_one()) os << magnitude << '*';
        os << 'x';
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

void Polynomial::normalize() noexcept {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::require_same_field(const FieldSpec& other) const {
    if (field_ != other) {
        throw Error(ErrorCode::FieldMismatch, "polynomial over " + field_.to_string() + " mixed with " + other.to_string());
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    require_same_field(rhs.field_);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), FieldElement::zero(field_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    require_same_field(rhs.field_);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), FieldElement::zero(field_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    lhs.require_same_field(rhs.field_);
    if (lhs.is_zero() || rhs.is_zero()) return Polynomial(lhs.field_);
    std::vector<FieldElement> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, FieldElement::zero(lhs.field_));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Polynomial(lhs.field_, std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const FieldElement& c) {
    require_same_field(c.field());
    for (auto& a : coeffs_) a *= c;
    normalize();
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_string(); }

DivRem divrem(const Polynomial& a, const Polynomial& b) {
    if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "divrem over different fields");
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    const FieldSpec& field = a.field();
    const std::size_t db = *b.degree();
    if (a.is_zero() || *a.degree() < db) return {Polynomial(field), a};

    std::vector<FieldElement> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<FieldElement> quot(rem.size() - db, FieldElement::zero(field));
    const FieldElement lc_inv = inverse(b.leading());
    auto bc = b.coeffs();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) continue;
        FieldElement q = rem[k] * lc_inv;
        const std::size_t shift = k - db;
        for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= q * bc[j];
        quot[shift] = std::move(q);
    }
    rem.resize(db, FieldElement::zero(field));
    return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divrem(a, b).remainder; }

Polynomial compose(const Polynomial& f, const Polynomial& h) {
    if (f.field() != h.field()) throw Error(ErrorCode::FieldMismatch, "compose over different fields");
    Polynomial result(f.field());
    auto c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        result *= h;
        result += Polynomial::constant(c[i]);
    }
    return result;
}

Polynomial reverse(const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "reverse of the zero polynomial");
    std::vector<FieldElement> c(f.coeffs().rbegin(), f.coeffs().rend());
    return Polynomial(f.field(), std::move(c));
}

Polynomial monic(const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial cannot be made monic");
    if (f.is_monic()) return f;
    return f * inverse(f.leading());
}

FieldElement eval(const Polynomial& f, const FieldElement& x) {
    if (f.field() != x.field()) throw Error(ErrorCode::FieldMismatch, "evaluation point from another field");
    FieldElement acc = FieldElement::zero(f.field());
    auto c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= x;
        acc += c[i];
    }
    return acc;
}

Polynomial derivative(const Polynomial& f) {
    if (f.is_constant()) return Polynomial(f.field());
    std::vector<FieldElement> c;
    c.reserve(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
        c.push_back(f.coeffs()[i] * FieldElement::from_integer(f.field(), static_cast<std::int64_t>(i)));
    }
    return Polynomial(f.field(), std::move(c));
}

Xgcd xgcd(const Polynomial& a, const Polynomial& b) {
    if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "xgcd over different fields");
    if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "xgcd of two zero polynomials");
    const FieldSpec& field = a.field();
    // Invariant: r_i == s_i * a + t_i * b.
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(FieldElement::one(field)), s1(field);
    Polynomial t0(field), t1 = Polynomial::constant(FieldElement::one(field));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        Polynomial s2 = s0 - q * s1;
        s0 = std::exchange(s1, std::move(s2));
        Polynomial t2 = t0 - q * t1;
        t0 = std::exchange(t1, std::move(t2));
    }
    const FieldElement scale = inverse(r0.leading());
    return {r0 * scale, s0 * scale, t0 * scale};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) return Polynomial(a.field());
    Polynomial r0 = a, r1 = b;
    while (!r1.is_zero()) r0 = std::exchange(r1, r0 % r1);
    return monic(r0);
}

}  // namespace polysub
