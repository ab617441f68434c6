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

#include "fp_kernel.hpp"

#include <utility>

namespace polysub::detail::fp {

void trim(Poly& a) noexcept {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly from_polynomial(const Polynomial& f) {
    Poly a;
    a.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) a.push_back(c.residue());
    return a;
}

Polynomial to_polynomial(const Poly& a, const FieldSpec& field) {
    std::vector<FieldElement> c;
    c.reserve(a.size());
    for (auto r : a) c.push_back(FieldElement::from_residue(field, r));
    return Polynomial(field, std::move(c));
}

Poly sub(Poly a, const Poly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p - b[i];
    trim(a);
    return a;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    // Residues are below 2^31, so a product plus a reduced sum fits in 64 bits.
    std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    trim(out);
    return out;
}

namespace {

// Long division in place; leaves the remainder in `a` and returns the quotient.
Poly divide(Poly& a, const Poly& m, std::uint64_t p) {
    const std::size_t dm = degree(m);
    if (a.size() <= dm) return {};
    Poly q(a.size() - dm, 0);
    const std::uint64_t lc_inv = inv_mod(m.back(), p);
    for (std::size_t k = a.size(); k-- > dm;) {
        if (a[k] == 0) continue;
        const std::uint64_t c = mul_mod(a[k], lc_inv, p);
        const std::size_t shift = k - dm;
        for (std::size_t j = 0; j <= dm; ++j) {
            const std::uint64_t t = c * m[j] % p;
            a[shift + j] = a[shift + j] >= t ? a[shift + j] - t : a[shift + j] + p - t;
        }
        q[shift] = c;
    }
    a.resize(dm);
    trim(a);
    trim(q);
    return q;
}

}  // namespace

Poly rem(Poly a, const Poly& m, std::uint64_t p) {
    divide(a, m, p);
    return a;
}

Poly quo(const Poly& a, const Poly& m, std::uint64_t p) {
    Poly r = a;
    return divide(r, m, p);
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) { return rem(mul(a, b, p), m, p); }

Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
    Poly result{1};
    result = rem(std::move(result), m, p);
    base = rem(std::move(base), m, p);
    while (e != 0) {
        if (e & 1) result = mulmod(result, base, m, p);
        e >>= 1;
        if (e != 0) base = mulmod(base, base, m, p);
    }
    return result;
}

Poly make_monic(Poly a, std::uint64_t p) {
    if (a.empty() || a.back() == 1) return a;
    const std::uint64_t inv = inv_mod(a.back(), p);
    for (auto& c : a) c = mul_mod(c, inv, p);
    return a;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
    while (!b.empty()) {
        a = rem(std::move(a), b, p);
        std::swap(a, b);
    }
    return make_monic(std::move(a), p);
}

Poly derivative(const Poly& a, std::uint64_t p) {
    if (a.size() <= 1) return {};
    Poly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul_mod(a[i], i % p, p);
    trim(d);
    return d;
}

}  // namespace polysub::detail::fp
