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

#include "polysub/certificate.hpp"

#include <algorithm>
#include <array>

namespace polysub {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedCertificate, "malformed certificate: " + what); }

const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) malformed(std::string("missing key \"") + key + "\"");
    return *it;
}

constexpr std::array<const char*, 6> kCheckNames = {"divides",         "deg_h_eq_dm1", "deg_h_ge2",
                                                    "deg_fh_eq_d_dm1", "deg_fh_ge_2d", "cofactor_nontrivial"};

std::array<bool CertificateChecks::*, 6> check_members() {
    return {&CertificateChecks::divides,         &CertificateChecks::deg_h_eq_dm1, &CertificateChecks::deg_h_ge2,
            &CertificateChecks::deg_fh_eq_d_dm1, &CertificateChecks::deg_fh_ge_2d, &CertificateChecks::cofactor_nontrivial};
}

IrreducibilityVerdict verdict_from_json(const json& j, const FieldSpec& field) {
    if (!j.is_object()) malformed("irreducibility must be an object or null");
    IrreducibilityVerdict v;
    const json& status = require(j, "status");
    if (status == "Irreducible") {
        v.status = IrreducibilityStatus::Irreducible;
    } else if (status == "Reducible") {
        v.status = IrreducibilityStatus::Reducible;
    } else if (status == "Unknown") {
        v.status = IrreducibilityStatus::Unknown;
    } else {
        malformed("unknown irreducibility status");
    }
    const json& witness = require(j, "witness");
    if (!witness.is_object()) malformed("witness must be an object");
    const json& test = require(witness, "test");
    if (!test.is_string()) malformed("witness test must be a string");
    v.test = test.get<std::string>();
    if (auto it = witness.find("prime"); it != witness.end()) {
        if (!it->is_number_unsigned()) malformed("witness prime must be an unsigned integer");
        v.prime = it->get<std::uint64_t>();
    }
    if (auto it = witness.find("factor"); it != witness.end()) v.factor = polynomial_from_json(*it, field);
    return v;
}

}  // namespace

json polynomial_to_json(const Polynomial& f) {
    json out = json::array();
    for (const auto& c : f.coeffs()) out.push_back(c.to_string());
    return out;
}

Polynomial polynomial_from_json(const json& j, const FieldSpec& field) {
    if (!j.is_array()) malformed("polynomial must be an array of coefficient strings");
    std::vector<FieldElement> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) {
        if (!c.is_string()) malformed("coefficient must be a string");
        try {
            coeffs.push_back(FieldElement::parse(field, c.get<std::string>()));
        } catch (const Error& e) {
            malformed(e.what());
        }
    }
    return Polynomial(field, std::move(coeffs));
}

json to_json(const IrreducibilityVerdict& verdict) {
    json witness = {{"test", verdict.test}};
    if (verdict.prime) witness["prime"] = *verdict.prime;
    if (verdict.factor) witness["factor"] = polynomial_to_json(*verdict.factor);
    return {{"status", std::string(to_string(verdict.status))}, {"witness", std::move(witness)}};
}

json to_json(const SubstitutionCertificate& cert) {
    json checks = json::object();
    const auto members = check_members();
    for (std::size_t i = 0; i < kCheckNames.size(); ++i) checks[kCheckNames[i]] = cert.checks.*members[i];
    json out = {
        {"field", cert.field.to_string()},
        {"f", polynomial_to_json(cert.f)},
        {"f_monic", polynomial_to_json(cert.f_monic)},
        {"g", polynomial_to_json(cert.g)},
        {"h", polynomial_to_json(cert.h)},
        {"fh", polynomial_to_json(cert.fh)},
        {"cofactor", polynomial_to_json(cert.cofactor)},
        {"d", cert.d},
        {"checks", std::move(checks)},
        {"hypothesis_mode", cert.mode == HypothesisMode::Strict ? "strict" : "assumed"},
        {"irreducibility", cert.irreducibility ? to_json(*cert.irreducibility) : json(nullptr)},
    };
    return out;
}

std::string serialize(const SubstitutionCertificate& cert) { return to_json(cert).dump() + "\n"; }

SubstitutionCertificate parse_certificate(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        malformed(e.what());
    }
    if (!j.is_object()) malformed("top level must be an object");

    const json& field_text = require(j, "field");
    if (!field_text.is_string()) malformed("field must be a string");
    FieldSpec field = FieldSpec::rationals();
    try {
        field = FieldSpec::parse(field_text.get<std::string>());
    } catch (const Error& e) {
        malformed(e.what());
    }

    const json& d = require(j, "d");
    if (!d.is_number_unsigned()) malformed("d must be a nonnegative integer");

    CertificateChecks checks;
    const json& checks_json = require(j, "checks");
    if (!checks_json.is_object()) malformed("checks must be an object");
    const auto members = check_members();
    for (std::size_t i = 0; i < kCheckNames.size(); ++i) {
        const json& b = require(checks_json, kCheckNames[i]);
        if (!b.is_boolean()) malformed(std::string("check ") + kCheckNames[i] + " must be a boolean");
        checks.*members[i] = b.get<bool>();
    }

    const json& mode = require(j, "hypothesis_mode");
    HypothesisMode hypothesis = HypothesisMode::Strict;
    if (mode == "assumed") {
        hypothesis = HypothesisMode::Assume;
    } else if (mode != "strict") {
        malformed("hypothesis_mode must be \"strict\" or \"assumed\"");
    }

    std::optional<IrreducibilityVerdict> verdict;
    if (const json& v = require(j, "irreducibility"); !v.is_null()) verdict = verdict_from_json(v, field);

    return SubstitutionCertificate{field,
                                   polynomial_from_json(require(j, "f"), field),
                                   polynomial_from_json(require(j, "f_monic"), field),
                                   polynomial_from_json(require(j, "g"), field),
                                   polynomial_from_json(require(j, "h"), field),
                                   polynomial_from_json(require(j, "fh"), field),
                                   polynomial_from_json(require(j, "cofactor"), field),
                                   d.get<std::size_t>(),
                                   checks,
                                   hypothesis,
                                   std::move(verdict)};
}

bool VerificationResult::ok() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

std::string VerificationResult::first_failure() const {
    auto it = std::find_if(checks.begin(), checks.end(), [](const auto& c) { return !c.second; });
    return it == checks.end() ? std::string() : it->first;
}

VerificationResult verify_certificate(const SubstitutionCertificate& cert, unsigned prime_budget) {
    VerificationResult result;
    auto add = [&result](const char* name, bool ok) { result.checks.emplace_back(name, ok); };
    const std::size_t d = cert.d;

    add("d_consistent", cert.f.degree() == std::optional<std::size_t>(d));
    add("degree_hypothesis", d >= 3);
    add("f_monic_consistent", !cert.f.is_zero() && cert.f_monic == monic(cert.f));
    add("g_reciprocal", !cert.f.is_zero() && !cert.f.coeff(0).is_zero() && cert.g == reciprocal_g(cert.f));

    const CertificateChecks recomputed = compute_checks(cert.f, cert.g, cert.h, cert.cofactor, d);
    add("divides", recomputed.divides);
    add("deg_h_eq_dm1", recomputed.deg_h_eq_dm1);
    add("deg_h_ge2", recomputed.deg_h_ge2);
    const Polynomial fh = compose(cert.f, cert.h);
    add("fh_matches", cert.fh == fh);
    add("deg_fh_eq_d_dm1", recomputed.deg_fh_eq_d_dm1);
    add("deg_fh_ge_2d", recomputed.deg_fh_ge_2d);
    add("cofactor_matches", cert.g * cert.cofactor == fh);
    add("cofactor_nontrivial", recomputed.cofactor_nontrivial);
    add("stored_checks", cert.checks.all());

    bool hypothesis = true;
    if (cert.mode == HypothesisMode::Strict) {
        hypothesis = cert.irreducibility.has_value() && !cert.f.is_constant() &&
                     check_irreducible(cert.f, prime_budget).status == IrreducibilityStatus::Irreducible;
    }
    add("hypothesis", hypothesis);
    return result;
}

}  // namespace polysub
