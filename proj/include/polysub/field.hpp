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

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "polysub/error.hpp"

namespace polysub {

/*
 * Coefficient fields.
 *
 * Two kinds are supported: prime fields F_p with 2 <= p < 2^31, and the
 * rationals Q. Textual form is "Q" or "F<p>" (e.g. "F7", "F101").
 */
class FieldSpec {
   public:
    enum class Kind { PrimeField, Rationals };

    static constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

    /// Throws InvalidField unless p is a prime below 2^31.
    static FieldSpec prime(std::uint64_t p);
    static FieldSpec rationals() noexcept { return FieldSpec(Kind::Rationals, 0); }

    /// Parses "Q" or "F<p>".
    static FieldSpec parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
    bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }

    /// The characteristic; 0 for Q.
    std::uint64_t characteristic() const noexcept { return p_; }

    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) noexcept = default;

   private:
    FieldSpec(Kind kind, std::uint64_t p) noexcept : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint64_t p_;
};

std::ostream& operator<<(std::ostream& os, const FieldSpec& field);

/// Deterministic primality test for 64-bit integers below 2^62.
bool is_prime(std::uint64_t n) noexcept;

/*
 * An exact element of a FieldSpec.
 *
 * F_p elements hold the canonical residue 0 <= r < p. Q elements hold a GMP
 * rational, always canonical (lowest terms, positive denominator, 0 == 0/1).
 * Binary operations on elements of different fields throw FieldMismatch.
 */
class FieldElement {
   public:
    static FieldElement zero(const FieldSpec& field);
    static FieldElement one(const FieldSpec& field);
    /// Integer n mapped into the field (reduced mod p for F_p).
    static FieldElement from_integer(const FieldSpec& field, std::int64_t n);
    static FieldElement from_integer(const FieldSpec& field, const mpz_class& n);
    /// num/den; only valid over Q unless den == 1. Throws DivisionByZero on den == 0.
    static FieldElement from_fraction(const FieldSpec& field, const mpz_class& num, const mpz_class& den);
    static FieldElement from_rational(const mpq_class& q);
    static FieldElement from_residue(const FieldSpec& field, std::uint64_t r);

    /// Parses "num/den" or "num"; fractions under F_p throw FieldLiteralError.
    static FieldElement parse(const FieldSpec& field, std::string_view text);

    const FieldSpec& field() const noexcept { return field_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Canonical residue; only meaningful over F_p.
    std::uint64_t residue() const;
    /// Canonical fraction; only meaningful over Q.
    const mpq_class& rational() const;

    /// "r" over F_p; "num/den" or "num" over Q.
    std::string to_string() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
    friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
    friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
    friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

    friend bool operator==(const FieldElement& lhs, const FieldElement& rhs) noexcept;

   private:
    FieldElement(const FieldSpec& field, std::uint64_t r) : field_(field), value_(r) {}
    FieldElement(const FieldSpec& field, mpq_class q) : field_(field), value_(std::move(q)) {}

    void require_same_field(const FieldElement& rhs) const;

    FieldSpec field_;
    std::variant<std::uint64_t, mpq_class> value_;
};

/// Multiplicative inverse; F_p via the extended Euclidean algorithm on integers.
FieldElement inverse(const FieldElement& a);

/// Square-and-multiply power with 0^0 == 1.
FieldElement pow(const FieldElement& a, std::uint64_t n);

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

namespace detail {

/// (a * b) mod p with a 128-bit intermediate.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

/// Inverse of a modulo m by the integer extended Euclidean algorithm.
/// Throws DivisionByZero when gcd(a, m) != 1.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

}  // namespace detail

}  // namespace polysub
