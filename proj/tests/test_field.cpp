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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "polysub/field.hpp"

using namespace polysub;
using polysub::testing::random_element;

namespace {

FieldElement fp(std::uint64_t p, std::int64_t n) { return FieldElement::from_integer(FieldSpec::prime(p), n); }
FieldElement q(long num, long den = 1) { return FieldElement::from_fraction(FieldSpec::rationals(), num, den); }

}  // namespace

TEST_CASE("field spec parsing and equality") {
    CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
    CHECK(FieldSpec::parse("F7") == FieldSpec::prime(7));
    CHECK(FieldSpec::parse("F101").characteristic() == 101);
    CHECK(FieldSpec::prime(7) != FieldSpec::prime(11));
    CHECK(FieldSpec::prime(7) != FieldSpec::rationals());
    CHECK(FieldSpec::prime(2147483647).to_string() == "F2147483647");
    CHECK_THROWS_AS(FieldSpec::parse("F8"), Error);
    CHECK_THROWS_AS(FieldSpec::parse("F1"), Error);
    CHECK_THROWS_AS(FieldSpec::parse("F2147483648"), Error);
    CHECK_THROWS_AS(FieldSpec::parse("R"), Error);
    CHECK_THROWS_AS(FieldSpec::parse("F"), Error);
    try {
        FieldSpec::prime(91);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidField);
    }
}

TEST_CASE("arithmetic examples") {
    CHECK(fp(5, 0) + fp(5, 3) == fp(5, 3));
    CHECK(q(0) + q(-7, 3) == q(-7, 3));
    CHECK(fp(5, 3) * fp(5, 4) == fp(5, 2));
    CHECK(q(1, 2) + q(1, 3) == q(5, 6));
    CHECK((q(1, 2) + q(1, 3)).to_string() == "5/6");
    CHECK(fp(7, -1).residue() == 6);
    CHECK((-fp(7, 0)).residue() == 0);
    CHECK(fp(7, 2) - fp(7, 5) == fp(7, 4));
}

TEST_CASE("F_p products near 2^31 do not overflow") {
    const std::uint64_t p = 2147483647;
    FieldElement a = fp(p, static_cast<std::int64_t>(p - 1));
    CHECK((a * a).residue() == 1);
    CHECK((a + a).residue() == p - 2);
}

TEST_CASE("inverse") {
    CHECK(inverse(fp(13, 1)) == fp(13, 1));
    CHECK(inverse(q(1)) == q(1));
    CHECK(inverse(fp(7, 3)) == fp(7, 5));
    CHECK(inverse(q(-2, 3)) == q(-3, 2));
    CHECK(inverse(q(-2, 3)).rational().get_den() == 2);
    try {
        inverse(fp(7, 0));
        FAIL("expected DivisionByZero");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DivisionByZero);
    }
    CHECK_THROWS_AS(q(0) / q(0), Error);
}

TEST_CASE("pow") {
    CHECK(pow(fp(7, 3), 0) == fp(7, 1));
    CHECK(pow(fp(7, 0), 0) == fp(7, 1));
    CHECK(pow(q(0), 0) == q(1));
    CHECK(pow(fp(7, 2), 4) == fp(7, 2));
    CHECK(pow(q(2), 10) == q(1024));
}

TEST_CASE("mixed fields are rejected") {
    try {
        (void)(fp(5, 1) + fp(7, 1));
        FAIL("expected FieldMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FieldMismatch);
    }
    CHECK_THROWS_AS(fp(5, 1) * q(1), Error);
    CHECK_FALSE(fp(5, 1) == q(1));
}

TEST_CASE("literal parsing and serialization") {
    const FieldSpec Q = FieldSpec::rationals();
    CHECK(FieldElement::parse(Q, "-6/4") == q(-3, 2));
    CHECK(FieldElement::parse(Q, "-6/4").to_string() == "-3/2");
    CHECK(FieldElement::parse(Q, "4/2").to_string() == "2");
    CHECK(FieldElement::parse(Q, "+5").to_string() == "5");
    CHECK(FieldElement::parse(FieldSpec::prime(7), "-1").to_string() == "6");
    CHECK(FieldElement::parse(FieldSpec::prime(7), "123456789012345678901234567890") ==
          FieldElement::from_integer(FieldSpec::prime(7), mpz_class("123456789012345678901234567890")));
    CHECK_THROWS_AS(FieldElement::parse(Q, "1/0"), ParseError);
    CHECK_THROWS_AS(FieldElement::parse(Q, "1/"), ParseError);
    CHECK_THROWS_AS(FieldElement::parse(Q, "x"), ParseError);
    CHECK_THROWS_AS(FieldElement::parse(Q, "1/-2"), ParseError);
    try {
        FieldElement::parse(FieldSpec::prime(7), "1/2");
        FAIL("expected FieldLiteralError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FieldLiteralError);
    }
}

TEST_CASE("field axioms hold on random triples") {
    std::mt19937_64 rng(20261015);
    for (const FieldSpec& field : {FieldSpec::prime(2), FieldSpec::prime(101), FieldSpec::prime(2147483647), FieldSpec::rationals()}) {
        CAPTURE(field.to_string());
        const FieldElement zero = FieldElement::zero(field), one = FieldElement::one(field);
        for (int trial = 0; trial < 10000; ++trial) {
            const FieldElement a = random_element(field, rng), b = random_element(field, rng), c = random_element(field, rng);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a + zero == a);
            REQUIRE(a * one == a);
            REQUIRE(a + (-a) == zero);
            REQUIRE(a - b == a + (-b));
            if (!a.is_zero()) REQUIRE(a * inverse(a) == one);
        }
    }
}

TEST_CASE("Fermat: a^(p-1) = 1 and inverse(a) = a^(p-2)") {
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 101ULL, 65537ULL, 2147483647ULL}) {
        const FieldSpec field = FieldSpec::prime(p);
        for (int trial = 0; trial < 2000; ++trial) {
            FieldElement a = random_element(field, rng);
            if (a.is_zero()) continue;
            REQUIRE(pow(a, p - 1).is_one());
            REQUIRE(inverse(a) == pow(a, p - 2));
        }
    }
}

TEST_CASE("rationals stay canonical") {
    std::mt19937_64 rng(11);
    const FieldSpec Q = FieldSpec::rationals();
    for (int trial = 0; trial < 10000; ++trial) {
        FieldElement a = random_element(Q, rng), b = random_element(Q, rng);
        for (const FieldElement& r : {a + b, a - b, a * b, b.is_zero() ? a : a / b}) {
            const mpq_class& v = r.rational();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
            REQUIRE(g == 1);
            REQUIRE(v.get_den() > 0);
        }
    }
    CHECK(q(0, 5).to_string() == "0");
    CHECK(q(0, 5).rational().get_den() == 1);
}
