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

#include <cctype>
#include <map>

#include "polysub/cli.hpp"

namespace polysub::cli {

namespace {

class PolynomialParser {
   public:
    PolynomialParser(std::string_view text, const FieldSpec& field) : text_(text), field_(field) {}

    Polynomial parse() {
        skip_ws();
        if (at_end()) throw ParseError(pos_, "empty polynomial");
        Polynomial f = peek() == '[' ? parse_list() : parse_terms();
        skip_ws();
        if (!at_end()) throw ParseError(pos_, std::string("unexpected character '") + peek() + "'");
        return f;
    }

   private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    bool is_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        if (peek() != c) throw ParseError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    std::size_t digits() {
        const std::size_t start = pos_;
        while (is_digit()) ++pos_;
        if (pos_ == start) throw ParseError(pos_, "expected a number");
        return start;
    }

    // [sign] digits [ '/' digits ], handed to FieldElement::parse.
    FieldElement literal(bool allow_sign) {
        const std::size_t start = pos_;
        if (allow_sign && (peek() == '-' || peek() == '+')) ++pos_;
        digits();
        if (peek() == '/') {
            ++pos_;
            digits();
        }
        try {
            return FieldElement::parse(field_, text_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
            throw ParseError(start, e.what());
        }
    }

    Polynomial parse_list() {
        expect('[');
        std::vector<FieldElement> coeffs;
        skip_ws();
        if (peek() == ']') {
            ++pos_;
            return Polynomial(field_);
        }
        while (true) {
            skip_ws();
            coeffs.push_back(literal(true));
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            expect(']');
            break;
        }
        return Polynomial(field_, std::move(coeffs));
    }

    Polynomial parse_terms() {
        std::map<std::size_t, FieldElement> terms;
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
            skip_ws();
        }
        while (true) {
            auto [exponent, coeff] = term();
            if (negative) coeff = -coeff;
            auto [it, inserted] = terms.try_emplace(exponent, coeff);
            if (!inserted) it->second += coeff;
            skip_ws();
            if (peek() != '+' && peek() != '-') break;
            negative = peek() == '-';
            ++pos_;
            skip_ws();
        }
        std::vector<FieldElement> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1, FieldElement::zero(field_));
        for (auto& [k, c] : terms) coeffs[k] = c;
        return Polynomial(field_, std::move(coeffs));
    }

    // [coefficient] [ ['*'] 'x' ['^' digits] ]
    std::pair<std::size_t, FieldElement> term() {
        FieldElement coeff = FieldElement::one(field_);
        bool have_coeff = false;
        if (is_digit()) {
            coeff = literal(false);
            have_coeff = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (peek() != 'x') throw ParseError(pos_, "expected 'x' after '*'");
            }
        }
        if (peek() != 'x') {
            if (!have_coeff) throw ParseError(pos_, "expected a coefficient or 'x'");
            return {0, coeff};
        }
        ++pos_;
        std::size_t exponent = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t start = digits();
            const std::string_view e = text_.substr(start, pos_ - start);
            if (e.size() > 6) throw ParseError(start, "exponent too large");
            exponent = std::stoul(std::string(e));
        }
        return {exponent, coeff};
    }

    std::string_view text_;
    FieldSpec field_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const FieldSpec& field) { return PolynomialParser(text, field).parse(); }

}  // namespace polysub::cli
