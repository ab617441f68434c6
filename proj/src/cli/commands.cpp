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

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "polysub/certificate.hpp"
#include "polysub/cli.hpp"
#include "polysub/construction.hpp"

namespace polysub::cli {

namespace {

bool write_file(const std::string& path, const std::string& contents, std::ostream& err) {
    std::ofstream file(path, std::ios::binary);
    file << contents;
    if (!file) {
        err << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

const Polynomial& single_polynomial(const CliRequest& req) {
    if (req.polynomials.size() != 1) throw Error(ErrorCode::ParseError, "expected exactly one polynomial");
    return req.polynomials.front();
}

void print_row(std::ostream& out, std::string_view label, const Polynomial& f) {
    out << std::left << std::setw(11) << label << f.to_pretty_string() << "   " << f.to_string() << "\n";
}

void print_verdict(std::ostream& out, const IrreducibilityVerdict& v) {
    out << to_string(v.status) << " (" << v.test;
    if (v.prime) out << ", p = " << *v.prime;
    out << ")";
    if (v.factor) out << " factor " << v.factor->to_pretty_string() << "   " << v.factor->to_string();
    out << "\n";
}

void print_summary(std::ostream& out, const SubstitutionCertificate& c) {
    out << std::left << std::setw(11) << "field" << c.field << "\n";
    print_row(out, "f", c.f);
    if (c.f != c.f_monic) print_row(out, "f monic", c.f_monic);
    print_row(out, "g", c.g);
    print_row(out, "h", c.h);
    print_row(out, "f(h)", c.fh);
    print_row(out, "cofactor", c.cofactor);
    out << "f(h(x)) = g(x) * cofactor(x), both factors nonconstant\n";
    out << "degrees    d = " << c.d << ", deg g = " << *c.g.degree() << ", deg h = " << *c.h.degree()
        << ", deg f(h) = " << *c.fh.degree() << " >= 2d = " << 2 * c.d << ", deg cofactor = " << *c.cofactor.degree() << "\n";
    const std::pair<const char*, bool> checks[] = {
        {"divides", c.checks.divides},
        {"deg_h_eq_dm1", c.checks.deg_h_eq_dm1},
        {"deg_h_ge2", c.checks.deg_h_ge2},
        {"deg_fh_eq_d_dm1", c.checks.deg_fh_eq_d_dm1},
        {"deg_fh_ge_2d", c.checks.deg_fh_ge_2d},
        {"cofactor_nontrivial", c.checks.cofactor_nontrivial},
    };
    for (const auto& [name, ok] : checks) out << "check      " << std::setw(20) << name << (ok ? "true" : "false") << "\n";
    out << "hypothesis ";
    if (c.irreducibility) {
        out << "strict, f ";
        print_verdict(out, *c.irreducibility);
    } else {
        out << "assumed (irreducibility of f asserted by the caller)\n";
    }
}

}  // namespace

int cmd_construct(const CliRequest& req, std::ostream& out, std::ostream& err) {
    const Polynomial& f = single_polynomial(req);
    const auto cert = certify_reducible(f, req.assume_irreducible ? HypothesisMode::Assume : HypothesisMode::Strict, req.prime_budget);
    const std::string text = serialize(cert);
    if (req.out && !write_file(*req.out, text, err)) return exit_code::kInputError;
    if (req.json) {
        out << text;
    } else {
        print_summary(out, cert);
    }
    return exit_code::kOk;
}

int cmd_verify(const CliRequest& req, std::ostream& out, std::ostream& err) {
    if (!req.certificate_path) throw Error(ErrorCode::ParseError, "verify needs a certificate file");
    std::ifstream file(*req.certificate_path, std::ios::binary);
    if (!file) {
        err << "error: cannot read " << *req.certificate_path << "\n";
        return exit_code::kInputError;
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    const SubstitutionCertificate cert = parse_certificate(buffer.str());
    const VerificationResult result = verify_certificate(cert, req.prime_budget);
    for (const auto& [name, ok] : result.checks) out << std::left << std::setw(20) << name << (ok ? "ok" : "FAILED") << "\n";
    if (!result.ok()) {
        err << "verification failed: check \"" << result.first_failure() << "\"\n";
        return exit_code::kCheckFailed;
    }
    out << "certificate verified\n";
    return exit_code::kOk;
}

int cmd_irred(const CliRequest& req, std::ostream& out, std::ostream&) {
    const auto verdict = check_irreducible(single_polynomial(req), req.prime_budget);
    if (req.json) {
        out << to_json(verdict).dump() << "\n";
    } else {
        print_verdict(out, verdict);
    }
    return exit_code::kOk;
}

int cmd_sweep(const CliRequest& req, std::ostream& out, std::ostream& err) {
    if (!req.field.is_prime_field()) throw Error(ErrorCode::WrongField, "sweeps need a prime field");
    const SweepReport report = run_sweep(req.field.characteristic(), req.degree, {req.max_size, req.workers});
    if (req.out) {
        const bool csv = req.out->size() >= 4 && req.out->compare(req.out->size() - 4, 4, ".csv") == 0;
        if (!write_file(*req.out, csv ? to_csv(report) : to_json(report).dump() + "\n", err)) return exit_code::kInputError;
    }
    if (req.json) {
        out << to_json(report).dump() << "\n";
    } else {
        out << "sweep over " << req.field << ", degree " << report.d << ": " << report.records.size()
            << " monic irreducible polynomials\n";
        for (const auto& r : report.records) {
            out << "  " << std::left << std::setw(28) << r.f.to_pretty_string() << " good h " << r.count.good << " / "
                << r.count.total;
            if (r.count.constructed_found) out << ", constructed h " << (*r.count.constructed_found ? "good" : "NOT good");
            out << "\n";
        }
        out << "all pass: " << (report.all_pass() ? "true" : "false") << "\n";
        err << "elapsed " << std::fixed << std::setprecision(3) << report.elapsed.count() << " s\n";
    }
    return report.all_pass() ? exit_code::kOk : exit_code::kCheckFailed;
}

int cmd_d2check(const CliRequest& req, std::ostream& out, std::ostream&) {
    if (!req.field.is_prime_field()) throw Error(ErrorCode::WrongField, "d2check needs a prime field");
    const bool holds = negative_check_d2(req.field.characteristic(), req.max_size);
    out << (holds ? "true" : "false") << "\n";
    return holds ? exit_code::kOk : exit_code::kCheckFailed;
}

int run(const CliRequest& req, std::ostream& out, std::ostream& err) {
    try {
        switch (req.command) {
            case Command::Construct: return cmd_construct(req, out, err);
            case Command::Verify: return cmd_verify(req, out, err);
            case Command::Irred: return cmd_irred(req, out, err);
            case Command::Sweep: return cmd_sweep(req, out, err);
            case Command::D2Check: return cmd_d2check(req, out, err);
        }
    } catch (const NotIrreducibleError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kNotIrreducible;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::DegreeTooSmall: return exit_code::kDegreeTooSmall;
            case ErrorCode::ZeroConstantTerm:
            case ErrorCode::NotCoprime:
            case ErrorCode::NotIrreducible: return exit_code::kNotIrreducible;
            case ErrorCode::UnknownIrreducibility:
                err << "hint: pass --assume-irreducible to construct anyway\n";
                return exit_code::kUnknownIrreducibility;
            case ErrorCode::SweepTooLarge: return exit_code::kSweepTooLarge;
            default: return exit_code::kInputError;
        }
    }
    return exit_code::kInputError;
}

int run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reducible polynomial substitutions with checkable certificates", "polysub"};
    app.require_subcommand(1);

    CliRequest req;
    std::string field_text = "Q";
    std::string poly_text;

    auto* construct = app.add_subcommand("construct", "build h with f(h(x)) reducible and emit its certificate");
    construct->add_option("--field", field_text, "Q or F<p>");
    construct->add_option("polynomial", poly_text, "f, as \"[c0, c1, ...]\" or \"x^3 - 2\"")->required();
    construct->add_flag("--json", req.json, "print the certificate JSON instead of the summary");
    construct->add_option("--out", req.out, "write the certificate to PATH");
    construct->add_flag("--assume-irreducible", req.assume_irreducible, "skip the irreducibility check on f");
    construct->add_option("--prime-budget", req.prime_budget, "primes tried when certifying over Q");

    std::string cert_path;
    auto* verify = app.add_subcommand("verify", "re-check a certificate file from scratch");
    verify->add_option("certificate", cert_path, "certificate JSON file")->required();
    verify->add_option("--prime-budget", req.prime_budget, "primes tried when re-certifying over Q");

    auto* irred = app.add_subcommand("irred", "decide or certify irreducibility");
    irred->add_option("--field", field_text, "Q or F<p>");
    irred->add_option("polynomial", poly_text, "the polynomial")->required();
    irred->add_flag("--json", req.json, "print the verdict as JSON");
    irred->add_option("--prime-budget", req.prime_budget, "primes tried over Q");

    auto* sweep = app.add_subcommand("sweep", "exhaustive substitution search over F_p");
    sweep->add_option("--field", field_text, "F<p>")->required();
    sweep->add_option("--degree", req.degree, "degree d of f")->required();
    sweep->add_flag("--json", req.json, "print the report as JSON");
    sweep->add_option("--out", req.out, "write the report to PATH (.csv for CSV, JSON otherwise)");
    sweep->add_option("--max-size", req.max_size, "limit on p^(2d)");
    sweep->add_option("--workers", req.workers, "worker threads");

    auto* d2check = app.add_subcommand("d2check", "check that no irreducible quadratic has a reducible substitution");
    d2check->add_option("--field", field_text, "F<p>")->required();
    d2check->add_option("--max-size", req.max_size, "limit on p^4");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_code::kOk : exit_code::kInputError;
    }

    try {
        req.field = FieldSpec::parse(field_text);
        if (construct->parsed() || irred->parsed()) req.polynomials.push_back(parse_polynomial(poly_text, req.field));
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::kInputError;
    }
    if (construct->parsed()) {
        req.command = Command::Construct;
    } else if (verify->parsed()) {
        req.command = Command::Verify;
        req.certificate_path = cert_path;
    } else if (irred->parsed()) {
        req.command = Command::Irred;
    } else if (sweep->parsed()) {
        req.command = Command::Sweep;
    } else {
        req.command = Command::D2Check;
    }
    return run(req, out, err);
}

}  // namespace polysub::cli
