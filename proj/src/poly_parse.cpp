/*
   Copyright 2026 The qfsplit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qfsplit/poly_parse.hpp"

#include <cctype>
#include <set>

namespace qfs {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

template <class Coeffs>
class Parser {
public:
    using P = Polynomial<Coeffs>;

    Parser(std::string_view text, RingPtr ring, std::uint64_t bound)
        : text_(text), ring_(std::move(ring)), bound_(bound) {}

    P parse() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
        P result = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return result;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    P expr() {
        bool negate = false;
        if (peek('+')) {
            ++pos_;
        } else if (peek('-')) {
            ++pos_;
            negate = true;
        }
        P acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    P term() {
        P acc = power();
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) return acc;
            char c = text_[pos_];
            if (c == '*') {
                ++pos_;
                acc = acc * power();
            } else if (c == '(' || digit(c) || ident_start(c)) {
                acc = acc * power();  // implicit multiplication
            } else {
                return acc;
            }
        }
    }

    P power() {
        P base = atom();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            const std::size_t start = pos_;
            if (pos_ >= text_.size() || !digit(text_[pos_]))
                throw ParseError("expected a non-negative decimal exponent", pos_);
            std::uint64_t e = 0;
            while (pos_ < text_.size() && digit(text_[pos_])) {
                e = e * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
                if (e > bound_) throw ParseError("exponent exceeds bound " + std::to_string(bound_), start);
                ++pos_;
            }
            return pow(base, e);
        }
        return base;
    }

    P atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            P inner = expr();
            if (!peek(')')) throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -atom();
        }
        if (digit(c)) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
            return P::constant(ring_, literal(text_.substr(start, pos_ - start)));
        }
        if (ident_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto idx = ring_->index_of(name);
            if (!idx) throw ParseError("unknown variable '" + name + "'", start);
            return P::variable(ring_, *idx);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    typename Coeffs::value_type literal(std::string_view digits) const {
        if constexpr (std::is_same_v<Coeffs, FpCoeffs>) {
            std::uint64_t r = 0;
            for (char d : digits) r = (r * 10 + static_cast<std::uint64_t>(d - '0')) % ring_->p();
            return static_cast<std::uint32_t>(r);
        } else {
            return mpz_class(std::string(digits), 10);
        }
    }

    std::string_view text_;
    RingPtr ring_;
    std::uint64_t bound_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring, std::uint64_t exponent_bound) {
    return Parser<FpCoeffs>(text, ring, exponent_bound).parse();
}

IntPoly parse_int_poly(std::string_view text, const RingPtr& ring, std::uint64_t exponent_bound) {
    return Parser<IntCoeffs>(text, ring, exponent_bound).parse();
}

std::vector<std::string> collect_variables(std::string_view text) {
    std::set<std::string> names;
    std::size_t i = 0;
    while (i < text.size()) {
        if (ident_start(text[i])) {
            std::size_t start = i;
            while (i < text.size() && ident_char(text[i])) ++i;
            names.emplace(text.substr(start, i - start));
        } else if (digit(text[i])) {
            while (i < text.size() && digit(text[i])) ++i;
        } else {
            ++i;
        }
    }
    return {names.begin(), names.end()};
}

}  // namespace qfs
