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

#include <stdexcept>
#include <string>
#include <string_view>

namespace polysub {

enum class ErrorCode {
    InvalidField,
    FieldMismatch,
    DivisionByZero,
    ZeroPolynomial,
    BothZero,
    ConstantPolynomial,
    WrongField,
    ZeroConstantTerm,
    DegreeTooSmall,
    NotMonic,
    NotCoprime,
    NotIrreducible,
    UnknownIrreducibility,
    SweepTooLarge,
    ParseError,
    FieldLiteralError,
    MalformedCertificate,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the CLI
/// maps codes onto exit statuses.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

/// ParseError with the byte offset of the offending character.
class ParseError : public Error {
   public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorCode::ParseError, what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

}  // namespace polysub
