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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "polysub/construction.hpp"

namespace polysub {

/*
 * Certificate file format.
 *
 * One JSON object with sorted keys and no insignificant whitespace, followed
 * by a newline:
 *
 *   cofactor, f, f_monic, fh, g, h   bracketed ascending coefficient lists of
 *                                    field-element strings ("3", "-1/2")
 *   checks                           the six named booleans
 *   d                                degree of f
 *   field                            "Q" or "F<p>"
 *   hypothesis_mode                  "strict" | "assumed"
 *   irreducibility                   {"status", "witness"} or null
 *
 * serialize(parse_certificate(s)) == s for every file produced by serialize.
 */

nlohmann::json polynomial_to_json(const Polynomial& f);
/// Throws MalformedCertificate.
Polynomial polynomial_from_json(const nlohmann::json& j, const FieldSpec& field);

nlohmann::json to_json(const IrreducibilityVerdict& verdict);
nlohmann::json to_json(const SubstitutionCertificate& cert);

/// Canonical text: compact JSON plus a trailing newline.
std::string serialize(const SubstitutionCertificate& cert);

/// Structural parse only; consistency is left to verify_certificate.
/// Throws MalformedCertificate.
SubstitutionCertificate parse_certificate(std::string_view text);

struct VerificationResult {
    /// Every recomputed check in evaluation order.
    std::vector<std::pair<std::string, bool>> checks;

    bool ok() const noexcept;
    /// Name of the first failing check, or empty.
    std::string first_failure() const;
};

/// Recomputes the composition, the division and all degree identities from
/// the stored f, h, g, d and compares them with the stored values.
VerificationResult verify_certificate(const SubstitutionCertificate& cert, unsigned prime_budget = kDefaultPrimeBudget);

}  // namespace polysub
