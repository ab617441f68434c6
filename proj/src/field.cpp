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

#include "polysub/field.hpp"

#include <cctype>
#include <ostream>
#include <tuple>
#include <utility>

namespace polysub {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t i = 5; i * i <= n; i += 6) {
        if (n % i == 0 || n % (i + 2) == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= kMaxPrime) throw Error(ErrorCode::InvalidField, "prime field modulus must be below 2^31, got " + std::to_string(p));
    if (!is_prime(p)) throw Error(ErrorCode::InvalidField, "prime field modulus is not prime: " + std::to_string(p));
    return FieldSpec(Kind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text.size() < 2 || text.front() != 'F') {
        throw Error(ErrorCode::InvalidField, "field must be \"Q\" or \"F<p>\", got \"" + std::string(text) + "\"");
    }
    std::uint64_t p = 0;
    for (char c : text.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw Error(ErrorCode::InvalidField, "malformed prime in field \"" + std::string(text) + "\"");
        }
        p = p * 10 + static_cast<std::uint64_t>(c - '0');
        if (p >= kMaxPrime) throw Error(ErrorCode::InvalidField, "prime field modulus must be below 2^31");
    }
    return prime(p);
}

std::string FieldSpec::to_string() const { return is_rationals() ? std::string("Q") : "F" + std::to_string(p_); }

std::ostream& operator<<(std::ostream& os, const FieldSpec& field) { return os << field.to_string(); }

namespace detail {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    // Invariant: r_i == s_i * a (mod m).
    std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(a % m);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    if (r0 != 1) throw Error(ErrorCode::DivisionByZero, "element is not invertible modulo " + std::to_string(m));
    if (s0 < 0) s0 += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(s0);
}

}  // namespace detail

namespace {

std::uint64_t reduce(const mpz_class& n, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
    return r.get_ui();
}

}  // namespace

FieldElement FieldElement::zero(const FieldSpec& field) { return from_integer(field, 0); }

FieldElement FieldElement::one(const FieldSpec& field) { return from_integer(field, 1); }

FieldElement FieldElement::from_integer(const FieldSpec& field, std::int64_t n) {
    if (field.is_rationals()) return FieldElement(field, mpq_class(static_cast<long>(n)));
    auto p = static_cast<std::int64_t>(field.characteristic());
    std::int64_t r = n % p;
    if (r < 0) r += p;
    return FieldElement(field, static_cast<std::uint64_t>(r));
}

FieldElement FieldElement::from_integer(const FieldSpec& field, const mpz_class& n) {
    if (field.is_rationals()) return FieldElement(field, mpq_class(n));
    return FieldElement(field, reduce(n, field.characteristic()));
}

FieldElement FieldElement::from_fraction(const FieldSpec& field, const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    if (field.is_rationals()) {
        mpq_class q(num, den);
        q.canonicalize();
        return FieldElement(field, std::move(q));
    }
    return from_integer(field, num) / from_integer(field, den);
}

FieldElement FieldElement::from_rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    return FieldElement(FieldSpec::rationals(), std::move(c));
}

FieldElement FieldElement::from_residue(const FieldSpec& field, std::uint64_t r) {
    if (!field.is_prime_field()) throw Error(ErrorCode::WrongField, "residues exist only over prime fields");
    return FieldElement(field, r % field.characteristic());
}

FieldElement FieldElement::parse(const FieldSpec& field, std::string_view text) {
    std::size_t i = 0;
    auto parse_integer = [&](bool allow_sign) {
        std::size_t start = i;
        if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        std::size_t digits = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == digits) throw ParseError(i, "expected digits in literal \"" + std::string(text) + "\"");
        std::string s(text.substr(start, i - start));
        if (s.front() == '+') s.erase(0, 1);
        return mpz_class(s, 10);
    };
    mpz_class num = parse_integer(true);
    if (i == text.size()) return from_integer(field, num);
    if (text[i] != '/') throw ParseError(i, "unexpected character in literal \"" + std::string(text) + "\"");
    std::size_t slash = i++;
    mpz_class den = parse_integer(false);
    if (i != text.size()) throw ParseError(i, "trailing characters in literal \"" + std::string(text) + "\"");
    if (field.is_prime_field()) {
        throw Error(ErrorCode::FieldLiteralError,
                    "fraction literal \"" + std::string(text) + "\" is not allowed over " + field.to_string());
    }
    if (den == 0) throw ParseError(slash, "zero denominator in literal \"" + std::string(text) + "\"");
    return from_fraction(field, num, den);
}

bool FieldElement::is_zero() const noexcept {
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElement::is_one() const noexcept {
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
    return std::get<mpq_class>(value_) == 1;
}

std::uint64_t FieldElement::residue() const {
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r;
    throw Error(ErrorCode::WrongField, "rational element has no residue");
}

const mpq_class& FieldElement::rational() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
    throw Error(ErrorCode::WrongField, "prime field element is not a rational");
}

std::string FieldElement::to_string() const {
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) return std::to_string(*r);
    return std::get<mpq_class>(value_).get_str();
}

void FieldElement::require_same_field(const FieldElement& rhs) const {
    if (field_ != rhs.field_) {
        throw Error(ErrorCode::FieldMismatch, "operands from " + field_.to_string() + " and " + rhs.field_.to_string());
    }
}

FieldElement FieldElement::operator-() const {
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) {
        return FieldElement(field_, *r == 0 ? 0 : field_.characteristic() - *r);
    }
    return FieldElement(field_, mpq_class(-std::get<mpq_class>(value_)));
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    require_same_field(rhs);
    if (auto* r = std::get_if<std::uint64_t>(&value_)) {
        std::uint64_t s = *r + std::get<std::uint64_t>(rhs.value_);
        const std::uint64_t p = field_.characteristic();
        *r = s >= p ? s - p : s;
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    require_same_field(rhs);
    if (auto* r = std::get_if<std::uint64_t>(&value_)) {
        const std::uint64_t b = std::get<std::uint64_t>(rhs.value_);
        *r = *r >= b ? *r - b : *r + field_.characteristic() - b;
    } else {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    require_same_field(rhs);
    if (auto* r = std::get_if<std::uint64_t>(&value_)) {
        *r = detail::mul_mod(*r, std::get<std::uint64_t>(rhs.value_), field_.characteristic());
    } else {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    require_same_field(rhs);
    return *this *= inverse(rhs);
}

bool operator==(const FieldElement& lhs, const FieldElement& rhs) noexcept {
    return lhs.field_ == rhs.field_ && lhs.value_ == rhs.value_;
}

FieldElement inverse(const FieldElement& a) {
    if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const FieldSpec& field = a.field();
    if (field.is_prime_field()) {
        return FieldElement::from_residue(field, detail::inv_mod(a.residue(), field.characteristic()));
    }
    mpq_class q = 1 / a.rational();
    return FieldElement::from_rational(q);
}

FieldElement pow(const FieldElement& a, std::uint64_t n) {
    FieldElement result = FieldElement::one(a.field());
    FieldElement base = a;
    while (n != 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n != 0) base *= base;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_string(); }

}  // namespace polysub
