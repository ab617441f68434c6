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

#include "polysub/irreducibility.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fp_kernel.hpp"

namespace polysub {

std::string_view to_string(IrreducibilityStatus status) noexcept {
    switch (status) {
        case IrreducibilityStatus::Irreducible: return "Irreducible";
        case IrreducibilityStatus::Reducible: return "Reducible";
        case IrreducibilityStatus::Unknown: return "Unknown";
    }
    return "Unknown";
}

namespace {

namespace fp = detail::fp;

std::vector<std::size_t> prime_divisors(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Splits a monic squarefree f whose irreducible factors all have degree k.
fp::Poly equal_degree_split(const fp::Poly& f, std::size_t k, std::uint64_t p) {
    const std::size_t n = fp::degree(f);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    auto proper = [n](const fp::Poly& g) { return !g.empty() && fp::degree(g) >= 1 && fp::degree(g) < n; };
    for (int attempt = 0; attempt < 4096; ++attempt) {
        fp::Poly a(n);
        for (auto& c : a) c = coeff(rng);
        fp::trim(a);
        if (a.size() < 2) continue;
        fp::Poly g = fp::gcd(a, f, p);
        if (proper(g)) return g;
        fp::Poly split;
        if (p == 2) {
            // Trace from F_{2^k} down to F_2.
            fp::Poly t = a;
            split = a;
            for (std::size_t i = 1; i < k; ++i) {
                t = fp::mulmod(t, t, f, p);
                split = fp::sub(std::move(split), t, p);
            }
        } else {
            // Norm to F_p, then its quadratic character.
            fp::Poly t = a, norm = a;
            for (std::size_t i = 1; i < k; ++i) {
                t = fp::powmod(std::move(t), p, f, p);
                norm = fp::mulmod(norm, t, f, p);
            }
            split = fp::sub(fp::powmod(std::move(norm), (p - 1) / 2, f, p), fp::Poly{1}, p);
        }
        g = fp::gcd(std::move(split), f, p);
        if (proper(g)) return g;
    }
    throw std::logic_error("equal-degree splitting did not converge");
}

// A proper monic factor of monic f, or empty when f is irreducible.
fp::Poly proper_factor(const fp::Poly& f, std::uint64_t p) {
    const std::size_t n = fp::degree(f);
    if (n <= 1) return {};
    fp::Poly df = fp::derivative(f, p);
    if (df.empty()) {
        // f(X) = r(X)^p because a^p == a in F_p.
        fp::Poly r(n / p + 1);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = f[i * p];
        return r;
    }
    fp::Poly g = fp::gcd(f, df, p);
    if (fp::degree(g) >= 1) return g;

    const fp::Poly x{0, 1};
    fp::Poly frob = x;
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        frob = fp::powmod(std::move(frob), p, f, p);
        g = fp::gcd(fp::sub(frob, x, p), f, p);
        if (g.size() < 2) continue;
        return fp::degree(g) < n ? g : equal_degree_split(f, k, p);
    }
    return {};
}

IrreducibilityVerdict reducible(const Polynomial& factor, std::string test) {
    return {IrreducibilityStatus::Reducible, std::move(test), factor, std::nullopt};
}

// Trial-division factorization of n > 0. `complete` is false when a cofactor
// remains that could not be proven prime.
struct Factorization {
    std::vector<std::pair<mpz_class, unsigned>> primes;
    bool complete = true;
};

Factorization trial_factor(mpz_class n) {
    constexpr unsigned long kBound = 1000000;
    Factorization out;
    for (unsigned long d = 2; d <= kBound && mpz_class(d) * d <= n; d += (d == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), d) == 0) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
            ++e;
        }
        out.primes.emplace_back(mpz_class(d), e);
    }
    if (n > 1) {
        if (n < mpz_class(kBound) * kBound || mpz_probab_prime_p(n.get_mpz_t(), 30) == 2) {
            out.primes.emplace_back(n, 1);
        } else {
            out.complete = false;
        }
    }
    return out;
}

std::vector<mpz_class> divisors(const Factorization& fac) {
    std::vector<mpz_class> out{1};
    for (const auto& [q, e] : fac.primes) {
        const std::size_t base = out.size();
        mpz_class power = 1;
        for (unsigned i = 1; i <= e; ++i) {
            power *= q;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
        }
    }
    return out;
}

// Coefficients of c*f with c in Q chosen so that they are coprime integers and
// the leading one is positive.
std::vector<mpz_class> primitive_integer_coeffs(const Polynomial& f) {
    mpz_class lcm = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
    std::vector<mpz_class> ints;
    mpz_class content = 0;
    for (const auto& c : f.coeffs()) {
        mpz_class v = c.rational().get_num() * (lcm / c.rational().get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    if (ints.back() < 0) content = -content;
    for (auto& v : ints) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    return ints;
}

constexpr std::size_t kMaxRootCandidates = 200000;

}  // namespace

IrreducibilityVerdict rabin_irreducible_fp(const Polynomial& f) {
    if (!f.field().is_prime_field()) throw Error(ErrorCode::WrongField, "Rabin test needs a prime field, got " + f.field().to_string());
    if (f.is_constant()) throw Error(ErrorCode::ConstantPolynomial, "irreducibility of a constant polynomial is undefined");
    const std::uint64_t p = f.field().characteristic();
    const std::size_t n = *f.degree();
    if (n == 1) return {IrreducibilityStatus::Irreducible, "rabin", std::nullopt, std::nullopt};

    const fp::Poly m = fp::make_monic(fp::from_polynomial(f), p);
    auto reducible_fp = [&](fp::Poly g) {
        if (g.size() < 2 || fp::degree(g) >= n) g = proper_factor(m, p);
        return reducible(fp::to_polynomial(g, f.field()), "rabin");
    };

    std::vector<std::size_t> checkpoints;
    for (std::size_t q : prime_divisors(n)) checkpoints.push_back(n / q);
    std::sort(checkpoints.begin(), checkpoints.end());

    // X^(p^k) mod f for k = 1..n; the gcd conditions fire at k = n/q.
    const fp::Poly x{0, 1};
    fp::Poly frob = x;
    auto next = checkpoints.begin();
    for (std::size_t k = 1; k <= n; ++k) {
        frob = fp::powmod(std::move(frob), p, m, p);
        if (next != checkpoints.end() && *next == k) {
            ++next;
            fp::Poly g = fp::gcd(fp::sub(frob, x, p), m, p);
            if (g.size() >= 2) return reducible_fp(std::move(g));
        }
    }
    if (frob != x) return reducible_fp({});
    return {IrreducibilityStatus::Irreducible, "rabin", std::nullopt, std::nullopt};
}

std::optional<Polynomial> find_proper_factor_fp(const Polynomial& f) {
    if (!f.field().is_prime_field()) throw Error(ErrorCode::WrongField, "factor search needs a prime field");
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factor of the zero polynomial");
    const std::uint64_t p = f.field().characteristic();
    fp::Poly g = proper_factor(fp::make_monic(fp::from_polynomial(f), p), p);
    if (g.empty()) return std::nullopt;
    return fp::to_polynomial(g, f.field());
}

bool squarefree_check(const Polynomial& f) {
    if (f.is_zero()) return false;
    if (f.is_constant()) return true;
    Polynomial df = derivative(f);
    if (df.is_zero()) return false;
    return gcd(f, df).is_constant();
}

IrreducibilityVerdict q_irreducibility_certificate(const Polynomial& f, unsigned prime_budget) {
    if (!f.field().is_rationals()) throw Error(ErrorCode::WrongField, "rational certificate needs Q, got " + f.field().to_string());
    if (f.is_constant()) throw Error(ErrorCode::ConstantPolynomial, "irreducibility of a constant polynomial is undefined");
    const FieldSpec& field = f.field();
    const std::size_t n = *f.degree();
    if (n == 1) return {IrreducibilityStatus::Irreducible, "degree-one", std::nullopt, std::nullopt};

    Polynomial common = gcd(f, derivative(f));
    if (!common.is_constant()) return reducible(common, "squarefree");

    const std::vector<mpz_class> a = primitive_integer_coeffs(f);
    const Polynomial x = Polynomial::x(field);
    if (a.front() == 0) return reducible(x, "rational-root");

    // Rational roots r/s have r | a0 and s | an.
    const Factorization f0 = trial_factor(abs(a.front()));
    const Factorization fn = trial_factor(a.back());
    bool roots_excluded = false;
    if (f0.complete && fn.complete) {
        const auto nums = divisors(f0);
        const auto dens = divisors(fn);
        if (nums.size() * dens.size() <= kMaxRootCandidates) {
            for (const auto& r : nums) {
                for (const auto& s : dens) {
                    for (int sign : {1, -1}) {
                        auto root = FieldElement::from_fraction(field, r * sign, s);
                        if (eval(f, root).is_zero()) return reducible(x - Polynomial::constant(root), "rational-root");
                    }
                }
            }
            roots_excluded = true;
        }
    }
    if (roots_excluded && n <= 3) return {IrreducibilityStatus::Irreducible, "rational-root", std::nullopt, std::nullopt};

    for (const auto& [q, e] : f0.primes) {
        if (mpz_divisible_p(a.back().get_mpz_t(), q.get_mpz_t()) != 0) continue;
        if (mpz_divisible_p(a.front().get_mpz_t(), mpz_class(q * q).get_mpz_t()) != 0) continue;
        bool all = std::all_of(a.begin(), a.end() - 1, [&q = q](const mpz_class& c) {
            return mpz_divisible_p(c.get_mpz_t(), q.get_mpz_t()) != 0;
        });
        if (all && q.fits_ulong_p()) {
            return {IrreducibilityStatus::Irreducible, "eisenstein", std::nullopt, q.get_ui()};
        }
    }

    // f primitive and p not dividing the leading coefficient: an irreducible
    // reduction of the same degree certifies irreducibility over Q.
    unsigned tried = 0;
    for (std::uint64_t p = 2; tried < prime_budget && p < FieldSpec::kMaxPrime; ++p) {
        if (!is_prime(p)) continue;
        if (mpz_divisible_ui_p(a.back().get_mpz_t(), p) != 0) continue;
        ++tried;
        const FieldSpec fp_field = FieldSpec::prime(p);
        std::vector<FieldElement> reduced;
        reduced.reserve(a.size());
        for (const auto& c : a) reduced.push_back(FieldElement::from_integer(fp_field, c));
        if (rabin_irreducible_fp(Polynomial(fp_field, std::move(reduced))).status == IrreducibilityStatus::Irreducible) {
            return {IrreducibilityStatus::Irreducible, "mod-p", std::nullopt, p};
        }
    }
    return {IrreducibilityStatus::Unknown, "rational-root,eisenstein,mod-p", std::nullopt, std::nullopt};
}

IrreducibilityVerdict check_irreducible(const Polynomial& f, unsigned prime_budget) {
    if (f.field().is_prime_field()) return rabin_irreducible_fp(f);
    return q_irreducibility_certificate(f, prime_budget);
}

}  // namespace polysub
