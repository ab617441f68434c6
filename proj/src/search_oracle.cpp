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

#include "polysub/search_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "polysub/construction.hpp"
#include "polysub/irreducibility.hpp"

namespace polysub {

namespace {

// p^e, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t p, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > UINT64_MAX / p) return UINT64_MAX;
        r *= p;
    }
    return r;
}

void guard(std::uint64_t size, std::uint64_t max_size, const std::string& what) {
    if (size > max_size) {
        throw Error(ErrorCode::SweepTooLarge, what + " needs " + (size == UINT64_MAX ? std::string("more than 2^64") : std::to_string(size)) +
                                                  " steps, above the limit " + std::to_string(max_size) + " (raise --max-size)");
    }
}

// Coefficients c_0..c_{len-1} of `index` written in base p with c_0 most significant.
std::vector<FieldElement> digits(std::uint64_t index, std::size_t len, const FieldSpec& field) {
    const std::uint64_t p = field.characteristic();
    std::vector<FieldElement> c(len, FieldElement::zero(field));
    for (std::size_t i = len; i-- > 0;) {
        c[i] = FieldElement::from_residue(field, index % p);
        index /= p;
    }
    return c;
}

bool is_irreducible(const Polynomial& f) { return rabin_irreducible_fp(f).status == IrreducibilityStatus::Irreducible; }

}  // namespace

bool SweepReport::all_pass() const noexcept {
    return std::all_of(records.begin(), records.end(), [this](const SweepRecord& r) {
        return r.count.good >= 1 && (d < 3 || r.count.constructed_found.value_or(false));
    });
}

std::uint64_t SweepReport::num_with_good_h() const noexcept {
    return static_cast<std::uint64_t>(std::count_if(records.begin(), records.end(), [](const SweepRecord& r) { return r.count.good >= 1; }));
}

std::uint64_t SweepReport::num_constructed_found() const noexcept {
    return static_cast<std::uint64_t>(
        std::count_if(records.begin(), records.end(), [](const SweepRecord& r) { return r.count.constructed_found.value_or(false); }));
}

std::vector<Polynomial> enumerate_monic_irreducibles(std::uint64_t p, std::size_t d, std::uint64_t max_size) {
    const FieldSpec field = FieldSpec::prime(p);
    if (d < 1) throw Error(ErrorCode::DegreeTooSmall, "irreducible polynomials have degree >= 1");
    const std::uint64_t count = saturating_pow(p, d);
    guard(count, max_size, "enumerating monic polynomials of degree " + std::to_string(d) + " over " + field.to_string());

    std::vector<Polynomial> out;
    for (std::uint64_t index = 0; index < count; ++index) {
        std::vector<FieldElement> c = digits(index, d, field);
        c.push_back(FieldElement::one(field));
        Polynomial f(field, std::move(c));
        if (is_irreducible(f)) out.push_back(std::move(f));
    }
    return out;
}

GoodSubstitutionCount count_good_h(const Polynomial& f) {
    const FieldSpec& field = f.field();
    if (!field.is_prime_field()) throw Error(ErrorCode::WrongField, "exhaustive search needs a prime field");
    if (f.is_constant() || *f.degree() < 2) throw Error(ErrorCode::DegreeTooSmall, "count_good_h needs deg f >= 2");
    const std::size_t d = *f.degree();
    const std::uint64_t p = field.characteristic();

    std::optional<Polynomial> constructed;
    if (d >= 3) constructed = certify_reducible(f, HypothesisMode::Strict).h;

    GoodSubstitutionCount result;
    if (constructed) result.constructed_found = false;
    for (std::size_t k = 1; k < d; ++k) {
        const std::uint64_t lower = saturating_pow(p, k);
        for (std::uint64_t lead = 1; lead < p; ++lead) {
            for (std::uint64_t index = 0; index < lower; ++index) {
                std::vector<FieldElement> c = digits(index, k, field);
                c.push_back(FieldElement::from_residue(field, lead));
                Polynomial h(field, std::move(c));
                const bool good = !is_irreducible(compose(f, h));
                ++result.total;
                if (good) ++result.good;
                if (constructed && h == *constructed) result.constructed_found = good;
            }
        }
    }
    return result;
}

bool negative_check_d2(std::uint64_t p, std::uint64_t max_size) {
    guard(saturating_pow(p, 4), max_size, "the degree-2 necessity check over F" + std::to_string(p));
    const auto quadratics = enumerate_monic_irreducibles(p, 2, max_size);
    return std::all_of(quadratics.begin(), quadratics.end(), [](const Polynomial& f) { return count_good_h(f).good == 0; });
}

SweepReport run_sweep(std::uint64_t p, std::size_t d, const SweepOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const FieldSpec field = FieldSpec::prime(p);
    if (d < 2) throw Error(ErrorCode::DegreeTooSmall, "sweeps need d >= 2");
    guard(saturating_pow(p, 2 * d), options.max_size,
          "a degree-" + std::to_string(d) + " sweep over " + field.to_string());

    std::vector<Polynomial> fs = enumerate_monic_irreducibles(p, d, options.max_size);
    std::vector<std::optional<GoodSubstitutionCount>> counts(fs.size());

    // Workers claim indices from a shared counter; results land at their
    // enumeration index, so the merged report does not depend on scheduling.
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&]() {
        for (std::size_t i = next++; i < fs.size() && !failed; i = next++) {
            try {
                counts[i] = count_good_h(fs[i]);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(std::max<std::size_t>(fs.size(), 1))));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    SweepReport report;
    report.p = p;
    report.d = d;
    report.records.reserve(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) report.records.push_back({std::move(fs[i]), *counts[i]});
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

nlohmann::json to_json(const SweepReport& report) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : report.records) {
        nlohmann::json f = nlohmann::json::array();
        for (const auto& c : r.f.coeffs()) f.push_back(c.to_string());
        records.push_back({
            {"f", std::move(f)},
            {"num_h_total", r.count.total},
            {"num_h_reducible", r.count.good},
            {"constructed_h_found", r.count.constructed_found ? nlohmann::json(*r.count.constructed_found) : nlohmann::json(nullptr)},
        });
    }
    return {
        {"p", report.p},
        {"d", report.d},
        {"num_irreducible", report.records.size()},
        {"num_with_good_h", report.num_with_good_h()},
        {"num_constructed_found", report.num_constructed_found()},
        {"all_pass", report.all_pass()},
        {"records", std::move(records)},
    };
}

std::string to_csv(const SweepReport& report) {
    std::ostringstream os;
    os << "f,num_h_total,num_h_reducible,constructed_h_found\n";
    for (const auto& r : report.records) {
        os << '"' << r.f.to_string() << "\"," << r.count.total << ',' << r.count.good << ',';
        if (r.count.constructed_found) os << (*r.count.constructed_found ? "true" : "false");
        os << '\n';
    }
    return os.str();
}

}  // namespace polysub
