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

#include "polysub/error.hpp"

namespace polysub {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidField: return "InvalidField";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::BothZero: return "BothZero";
        case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
        case ErrorCode::WrongField: return "WrongField";
        case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
        case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::UnknownIrreducibility: return "UnknownIrreducibility";
        case ErrorCode::SweepTooLarge: return "SweepTooLarge";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::FieldLiteralError: return "FieldLiteralError";
        case ErrorCode::MalformedCertificate: return "MalformedCertificate";
    }
    return "Unknown";
}

}  // namespace polysub
