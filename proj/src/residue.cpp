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

#include "polysub/residue.hpp"

#include <utility>

namespace polysub {

ResidueClass::ResidueClass(Polynomial modulus, const Polynomial& value) : modulus_(std::move(modulus)), rep_(modulus_.field()) {
    if (modulus_.is_constant()) throw Error(ErrorCode::ConstantPolynomial, "quotient ring modulus must have degree >= 1");
    if (!modulus_.is_monic()) throw Error(ErrorCode::NotMonic, "quotient ring modulus must be monic");
    rep_ = value % modulus_;
}

ResidueClass ResidueClass::generator(const Polynomial& modulus) { return ResidueClass(modulus, Polynomial::x(modulus.field())); }

void ResidueClass::require_same_modulus(const ResidueClass& rhs) const {
    if (modulus_ != rhs.modulus_) throw Error(ErrorCode::FieldMismatch, "residue classes modulo different polynomials");
}

ResidueClass& ResidueClass::operator+=(const ResidueClass& rhs) {
    require_same_modulus(rhs);
    rep_ += rhs.rep_;
    return *this;
}

ResidueClass& ResidueClass::operator-=(const ResidueClass& rhs) {
    require_same_modulus(rhs);
    rep_ -= rhs.rep_;
    return *this;
}

ResidueClass& ResidueClass::operator*=(const ResidueClass& rhs) {
    require_same_modulus(rhs);
    rep_ = (rep_ * rhs.rep_) % modulus_;
    return *this;
}

ResidueClass inverse(const ResidueClass& a) {
    if (a.is_zero()) throw Error(ErrorCode::NotCoprime, "zero class has no inverse");
    auto [d, u, v] = xgcd(a.rep(), a.modulus());
    if (!d.is_constant()) throw Error(ErrorCode::NotCoprime, "class shares the factor " + d.to_string() + " with the modulus");
    return ResidueClass(a.modulus(), u);
}

ResidueClass evaluate(const Polynomial& f, const ResidueClass& at) {
    ResidueClass acc(at.modulus(), Polynomial(f.field()));
    auto c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc *= at;
        acc += ResidueClass(at.modulus(), Polynomial::constant(c[i]));
    }
    return acc;
}

}  // namespace polysub
