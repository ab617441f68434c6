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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polysub/irreducibility.hpp"
#include "polysub/polynomial.hpp"
#include "polysub/search_oracle.hpp"

namespace polysub::cli {

/*
 * Polynomial text syntax.
 *
 *   list form   "[-2, 0, 0, 1]"   ascending coefficients (here x^3 - 2)
 *   term form   "x^3 - 2", "2*x^2 + 1/2x", "-x + 3"
 *
 * Integer literals are reduced into F_p; fraction literals are rejected
 * under F_p with FieldLiteralError. Malformed text throws ParseError with the
 * offending position.
 */
Polynomial parse_polynomial(std::string_view text, const FieldSpec& field);

enum class Command { Construct, Verify, Irred, Sweep, D2Check };

struct CliRequest {
    Command command = Command::Construct;
    FieldSpec field = FieldSpec::rationals();
    std::vector<Polynomial> polynomials;
    std::optional<std::string> certificate_path;  ///< verify
    std::size_t degree = 0;                       ///< sweep

    bool assume_irreducible = false;
    bool json = false;
    unsigned prime_budget = kDefaultPrimeBudget;
    std::optional<std::string> out;
    std::uint64_t max_size = kDefaultMaxSweepSize;
    unsigned workers = 1;
};

namespace exit_code {
constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kDegreeTooSmall = 2;
constexpr int kNotIrreducible = 3;
constexpr int kUnknownIrreducibility = 4;
constexpr int kCheckFailed = 5;
constexpr int kSweepTooLarge = 6;
}  // namespace exit_code

int cmd_construct(const CliRequest& req, std::ostream& out, std::ostream& err);
int cmd_verify(const CliRequest& req, std::ostream& out, std::ostream& err);
int cmd_irred(const CliRequest& req, std::ostream& out, std::ostream& err);
int cmd_sweep(const CliRequest& req, std::ostream& out, std::ostream& err);
int cmd_d2check(const CliRequest& req, std::ostream& out, std::ostream& err);

/// Dispatches on req.command and maps library errors onto exit codes.
int run(const CliRequest& req, std::ostream& out, std::ostream& err);

/// Full command line (args excludes the program name).
int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polysub::cli
