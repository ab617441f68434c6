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

#include "oracles.hpp"
#include "polysub/construction.hpp"
#include "polysub/search_oracle.hpp"

using namespace polysub;
namespace t = polysub::testing;

namespace {

Polynomial P(const FieldSpec& field, std::initializer_list<std::int64_t> c) { return Polynomial::from_integers(field, c); }

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::ParseError;
}

// Brute-force recount of good substitutions with trial-division irreducibility.
std::uint64_t oracle_good(const Polynomial& f) {
    const std::size_t d = *f.degree();
    std::uint64_t good = 0;
    for (std::size_t k = 1; k < d; ++k) {
        for (const auto& m : t::all_monic(f.field(), k)) {
            for (std::uint64_t lead = 1; lead < f.field().characteristic(); ++lead) {
                if (!t::brute_force_irreducible(compose(f, m * FieldElement::from_residue(f.field(), lead)))) ++good;
            }
        }
    }
    return good;
}

}  // namespace

TEST_CASE("enumerating monic irreducibles") {
    const FieldSpec F2 = FieldSpec::prime(2);
    const auto cubics = enumerate_monic_irreducibles(2, 3);
    REQUIRE(cubics.size() == 2);
    // Lexicographic in (c0, c1, c2): (1,0,1) before (1,1,0).
    CHECK(cubics[0] == P(F2, {1, 0, 1, 1}));
    CHECK(cubics[1] == P(F2, {1, 1, 0, 1}));
    CHECK(enumerate_monic_irreducibles(3, 3).size() == 8);
    const auto linears = enumerate_monic_irreducibles(2, 1);
    REQUIRE(linears.size() == 2);
    CHECK(linears[0] == P(F2, {0, 1}));
    CHECK(linears[1] == P(F2, {1, 1}));
    for (auto [p, n] : {std::pair<std::uint64_t, std::size_t>{2, 5}, {3, 4}, {5, 3}, {7, 3}, {2, 7}}) {
        CHECK(enumerate_monic_irreducibles(p, n).size() == t::necklace_count(p, n));
    }
    CHECK(code_of([] { enumerate_monic_irreducibles(2, 10, 1000); }) == ErrorCode::SweepTooLarge);
    CHECK(code_of([] { enumerate_monic_irreducibles(4, 2); }) == ErrorCode::InvalidField);
}

TEST_CASE("counting good substitutions") {
    const FieldSpec F2 = FieldSpec::prime(2);
    const Polynomial f = P(F2, {1, 1, 0, 1});
    const auto count = count_good_h(f);
    CHECK(count.total == 6);
    CHECK(count.good >= 1);
    CHECK(count.good == oracle_good(f));
    REQUIRE(count.constructed_found.has_value());
    CHECK(*count.constructed_found);
    CHECK(certify_reducible(f).h == P(F2, {0, 1, 1}));

    // h = X gives f itself, which is irreducible.
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
        for (const auto& g : enumerate_monic_irreducibles(p, 3)) {
            CHECK(t::brute_force_irreducible(compose(g, Polynomial::x(g.field()))));
            CHECK(count_good_h(g).good == oracle_good(g));
            CHECK(count_good_h(g).total == p * p * p - p);
        }
    }

    for (const auto& quad : enumerate_monic_irreducibles(3, 2)) {
        const auto c = count_good_h(quad);
        CHECK(c.good == 0);
        CHECK(c.total == 6);
        CHECK_FALSE(c.constructed_found.has_value());
    }
    CHECK(code_of([] { count_good_h(P(FieldSpec::prime(3), {1, 1})); }) == ErrorCode::DegreeTooSmall);
    CHECK(code_of([] { count_good_h(P(FieldSpec::rationals(), {-2, 0, 0, 1})); }) == ErrorCode::WrongField);
}

TEST_CASE("degree two admits no reducible substitution") {
    CHECK(negative_check_d2(2));
    CHECK(negative_check_d2(3));
    CHECK(negative_check_d2(5));
    CHECK(enumerate_monic_irreducibles(5, 2).size() == 10);
    CHECK(code_of([] { negative_check_d2(101, 1000); }) == ErrorCode::SweepTooLarge);
}

TEST_CASE("sweeps") {
    const auto r23 = run_sweep(2, 3);
    CHECK(r23.records.size() == 2);
    CHECK(r23.all_pass());
    for (const auto& r : r23.records) {
        CHECK(r.count.good >= 1);
        CHECK(r.count.constructed_found == true);
    }
    CHECK(run_sweep(2, 4).records.size() == 3);
    CHECK(run_sweep(2, 4).all_pass());
    const auto r33 = run_sweep(3, 3);
    CHECK(r33.records.size() == 8);
    CHECK(r33.all_pass());
    CHECK(code_of([] { run_sweep(7, 3, {.max_size = 1000}); }) == ErrorCode::SweepTooLarge);
    CHECK(code_of([] { run_sweep(2, 1); }) == ErrorCode::DegreeTooSmall);
}

TEST_CASE("sweep reports do not depend on the worker count") {
    const std::string serial = to_json(run_sweep(3, 4, {.workers = 1})).dump();
    for (unsigned workers : {2u, 3u, 8u, 64u}) CHECK(to_json(run_sweep(3, 4, {.workers = workers})).dump() == serial);
    CHECK(to_csv(run_sweep(5, 3, {.workers = 4})) == to_csv(run_sweep(5, 3)));
}

TEST_CASE("report formats") {
    const auto report = run_sweep(2, 3);
    const auto j = to_json(report);
    CHECK(j["p"] == 2);
    CHECK(j["d"] == 3);
    CHECK(j["num_irreducible"] == 2);
    CHECK(j["all_pass"] == true);
    CHECK(j["records"][0]["f"] == nlohmann::json({"1", "0", "1", "1"}));
    CHECK(j["records"][0]["num_h_total"] == 6);
    CHECK(j["records"][0]["constructed_h_found"] == true);
    CHECK(j.find("elapsed") == j.end());

    const std::string csv = to_csv(report);
    CHECK(csv.rfind("f,num_h_total,num_h_reducible,constructed_h_found\n", 0) == 0);
    CHECK(csv.find("\"[1, 0, 1, 1]\",6,") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}
