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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "polysub/certificate.hpp"
#include "polysub/cli.hpp"
#include "polysub/construction.hpp"
#include "polysub/irreducibility.hpp"
#include "polysub/residue.hpp"
#include "polysub/search_oracle.hpp"

using namespace polysub;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

struct CliRun {
    int code;
    std::string out;
};

CliRun cli_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run_command_line(args, out, err);
    return {code, out.str()};
}

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

Polynomial P(const FieldSpec& field, std::initializer_list<std::int64_t> c) { return Polynomial::from_integers(field, c); }

// Criterion 3 suite: 500 random monic irreducibles, 100 per prime, degrees cycling 3..10.
struct SuiteCase {
    Polynomial f;
    SubstitutionCertificate cert;
};

std::vector<Polynomial> suite_polynomials() {
    std::mt19937_64 rng(3);
    std::vector<Polynomial> out;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 101ULL}) {
        const FieldSpec field = FieldSpec::prime(p);
        for (int i = 0; i < 100; ++i) {
            const std::size_t d = 3 + static_cast<std::size_t>(i % 8);
            while (true) {
                Polynomial f = polysub::testing::random_monic(field, d, rng);
                if (rabin_irreducible_fp(f).status == IrreducibilityStatus::Irreducible) {
                    out.push_back(std::move(f));
                    break;
                }
            }
        }
    }
    return out;
}

Outcome worked_example(const std::string& field_text, const std::string& f_text, const Polynomial& g, const Polynomial& h,
                       const Polynomial& fh, const Polynomial& cofactor, std::string* json_out) {
    Outcome o;
    const auto start = Clock::now();
    CliRun r = cli_run({"construct", "--field", field_text, f_text, "--json"});
    const double elapsed = seconds_since(start);
    o.require(r.code == 0, "construct exit code " + std::to_string(r.code));
    if (!o.pass) return o;
    const auto cert = parse_certificate(r.out);
    o.require(cert.g == g, "g = " + cert.g.to_string());
    o.require(cert.h == h, "h = " + cert.h.to_string());
    o.require(cert.fh == fh, "fh = " + cert.fh.to_string());
    o.require(cert.cofactor == cofactor, "cofactor = " + cert.cofactor.to_string());
    o.require(cert.checks.all(), "a certificate check is false");
    o.require(verify_certificate(cert).ok(), "verification failed");
    o.require(elapsed < 0.1, "runtime " + std::to_string(elapsed) + " s >= 0.1 s");
    if (json_out) *json_out = r.out;
    return o;
}

}  // namespace

int main() {
    const FieldSpec Q = FieldSpec::rationals();
    const FieldSpec F2 = FieldSpec::prime(2);
    int failures = 0;
    auto report = [&failures](const std::string& id, const std::string& title, const Outcome& o, double elapsed) {
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << std::fixed << std::setprecision(3) << elapsed
                  << " s)";
        if (!o.pass) std::cout << ": " << o.detail;
        std::cout << std::endl;
        if (!o.pass) ++failures;
    };

    // Outputs of criteria 1-5 from the first pass, compared in criterion 9.
    std::vector<std::string> first_pass;

    auto run_ac1 = [&](std::string* json) {
        const Polynomial g(Q, {FieldElement::from_fraction(Q, -1, 2), FieldElement::zero(Q), FieldElement::zero(Q), FieldElement::one(Q)});
        return worked_example("Q", "x^3-2", g, P(Q, {0, 0, 2}), P(Q, {-2, 0, 0, 0, 0, 0, 8}), P(Q, {4, 0, 0, 8}), json);
    };
    auto run_ac2 = [&](std::string* json) {
        return worked_example("F2", "x^3+x+1", P(F2, {1, 0, 1, 1}), P(F2, {0, 1, 1}), P(F2, {1, 1, 1, 1, 1, 1, 1}), P(F2, {1, 1, 0, 1}),
                              json);
    };

    {
        std::string json;
        const auto start = Clock::now();
        Outcome o = run_ac1(&json);
        report("AC1", "worked example x^3 - 2 over Q", o, seconds_since(start));
        first_pass.push_back(json);
    }
    {
        std::string json;
        const auto start = Clock::now();
        Outcome o = run_ac2(&json);
        report("AC2", "worked example x^3 + x + 1 over F2", o, seconds_since(start));
        first_pass.push_back(json);
    }

    // Criterion 3, with criteria 6 and 7 evaluated on the same certificates.
    const std::vector<Polynomial> suite = suite_polynomials();
    std::vector<SubstitutionCertificate> certs;
    std::string suite_text;
    {
        Outcome o;
        const auto start = Clock::now();
        o.require(suite.size() >= 500, "suite has only " + std::to_string(suite.size()) + " polynomials");
        for (const auto& f : suite) {
            SubstitutionCertificate c = certify_reducible(f);
            o.require(c.checks.all(), "check failed for " + f.to_string());
            o.require(build_h_explicit(monic(f)) == build_h_modular_inverse(f), "h paths disagree for " + f.to_string());
            o.require(rabin_irreducible_fp(c.fh).status != IrreducibilityStatus::Irreducible, "f(h) irreducible for " + f.to_string());
            suite_text += serialize(c);
            certs.push_back(std::move(c));
        }
        const double elapsed = seconds_since(start);
        o.require(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s >= 30 s");
        report("AC3", "500 random certificates over F2, F3, F5, F7, F101 with 3 <= d <= 10", o, elapsed);
        first_pass.push_back(suite_text);
    }

    {
        Outcome o;
        const auto start = Clock::now();
        std::string sweeps;
        for (auto [p, d] : {std::pair<std::uint64_t, std::size_t>{2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {5, 3}, {7, 3}}) {
            const SweepReport r = run_sweep(p, d, {.workers = 4});
            const std::string tag = "(" + std::to_string(p) + "," + std::to_string(d) + ")";
            o.require(r.records.size() == polysub::testing::necklace_count(p, d), "irreducible count mismatch at " + tag);
            for (const auto& rec : r.records) {
                o.require(rec.count.good >= 1, "no good h for " + rec.f.to_string() + " at " + tag);
                o.require(rec.count.constructed_found == true, "constructed h not good for " + rec.f.to_string());
            }
            sweeps += to_json(r).dump() + "\n";
        }
        const double elapsed = seconds_since(start);
        o.require(elapsed < 300.0, "runtime " + std::to_string(elapsed) + " s >= 300 s");
        report("AC4", "exhaustive sweeps (2,3) (2,4) (2,5) (3,3) (3,4) (5,3) (7,3)", o, elapsed);
        first_pass.push_back(sweeps);
    }

    {
        Outcome o;
        const auto start = Clock::now();
        std::string out;
        for (std::string field : {"F2", "F3", "F5", "F7"}) {
            CliRun r = cli_run({"d2check", "--field", field});
            o.require(r.code == 0 && r.out == "true\n", "d2check " + field + " printed " + r.out);
            out += r.out;
        }
        const double elapsed = seconds_since(start);
        o.require(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s >= 10 s");
        report("AC5", "no irreducible quadratic over F2, F3, F5, F7 has a good h", o, elapsed);
        first_pass.push_back(out);
    }

    {
        Outcome o;
        const auto start = Clock::now();
        std::size_t exceptions = 0;
        for (const auto& c : certs) {
            const std::size_t d = c.d;
            const bool ok = c.h.degree() == d - 1 && c.fh.degree() == d * (d - 1) && c.cofactor.degree() == d * (d - 2) &&
                            d * (d - 1) >= 2 * d && c.g.degree() == d;
            if (!ok) ++exceptions;
        }
        o.require(!certs.empty() && exceptions == 0, std::to_string(exceptions) + " degree-law exceptions");
        report("AC6", "degree laws deg h = d-1, deg f(h) = d(d-1) >= 2d, deg cofactor = d(d-2)", o, seconds_since(start));
    }

    {
        Outcome o;
        const auto start = Clock::now();
        std::size_t checked = 0;
        for (std::size_t i = 0; i < certs.size() && checked < 100; i += 5, ++checked) {
            const auto& c = certs[i];
            const ResidueClass beta = ResidueClass::generator(c.g);
            o.require(evaluate(c.f, evaluate(c.h, beta)).is_zero(), "f(h(beta)) != 0 for " + c.f.to_string());
        }
        o.require(checked == 100, "subsample has " + std::to_string(checked) + " cases");
        report("AC7", "f(h(beta)) = 0 in K[X]/(g) on a 100-case subsample", o, seconds_since(start));
    }

    {
        Outcome o;
        const auto start = Clock::now();
        const fs::path dir = fs::temp_directory_path() / ("polysub-acceptance-" + std::to_string(::getpid()));
        fs::create_directories(dir);
        std::mt19937_64 rng(8);
        std::vector<SubstitutionCertificate> pool(certs.begin(), certs.end());
        for (const char* f : {"x^3-2", "2x^3-1", "x^4-2", "x^5-x-1"}) pool.push_back(certify_reducible(cli::parse_polynomial(f, Q)));
        const char* keys[] = {"f", "f_monic", "g", "h", "fh", "cofactor", "d"};
        for (int i = 0; i < 50; ++i) {
            const auto& c = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
            nlohmann::json j = nlohmann::json::parse(serialize(c));
            const std::string key = keys[i % 7];
            std::string what = key;
            if (key == "d") {
                const std::size_t d = c.d;
                j["d"] = d + 1 + std::uniform_int_distribution<std::size_t>(0, 3)(rng);
            } else {
                auto& coeffs = j[key];
                const std::size_t idx = std::uniform_int_distribution<std::size_t>(0, coeffs.size() - 1)(rng);
                const FieldElement old = FieldElement::parse(c.field, coeffs[idx].get<std::string>());
                FieldElement changed = old;
                while (changed == old) changed = polysub::testing::random_element(c.field, rng);
                coeffs[idx] = changed.to_string();
                what += "[" + std::to_string(idx) + "]";
            }
            const std::string path = (dir / ("tampered" + std::to_string(i) + ".json")).string();
            std::ofstream(path) << j.dump() << "\n";
            CliRun r = cli_run({"verify", path});
            o.require(r.code == cli::exit_code::kCheckFailed,
                      "tampered " + what + " of " + c.f.to_string() + " gave exit " + std::to_string(r.code));
        }
        fs::remove_all(dir);
        report("AC8", "50 corrupted certificates all fail verify with exit 5", o, seconds_since(start));
    }

    {
        Outcome o;
        const auto start = Clock::now();
        std::string json1, json2;
        run_ac1(&json1);
        run_ac2(&json2);
        o.require(json1 == first_pass[0], "criterion 1 JSON differs between runs");
        o.require(json2 == first_pass[1], "criterion 2 JSON differs between runs");
        std::string suite_again;
        for (const auto& f : suite_polynomials()) suite_again += serialize(certify_reducible(f));
        o.require(suite_again == first_pass[2], "criterion 3 certificates differ between runs");
        std::string sweeps;
        for (auto [p, d] : {std::pair<std::uint64_t, std::size_t>{2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {5, 3}, {7, 3}}) {
            sweeps += to_json(run_sweep(p, d, {.workers = 1})).dump() + "\n";
        }
        o.require(sweeps == first_pass[3], "criterion 4 sweep reports differ between runs");
        std::string d2;
        for (std::string field : {"F2", "F3", "F5", "F7"}) d2 += cli_run({"d2check", "--field", field}).out;
        o.require(d2 == first_pass[4], "criterion 5 output differs between runs");
        o.require(cli_run({"sweep", "--field", "F3", "--degree", "4", "--json", "--workers", "1"}).out ==
                      cli_run({"sweep", "--field", "F3", "--degree", "4", "--json", "--workers", "8"}).out,
                  "CLI sweep JSON depends on worker count");
        report("AC9", "repeated runs of criteria 1-5 are byte-identical", o, seconds_since(start));
    }

    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " acceptance criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
