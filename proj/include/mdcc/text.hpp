/*
   Copyright 2026 The mdcc Authors

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

#ifndef MDCC_TEXT_HPP
#define MDCC_TEXT_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "poly.hpp"

namespace mdcc {

namespace detail {

// Recursive descent over:  expr := [+|-] term {(+|-) term};  term := factor {* factor};
// factor := primary [^ int];  primary := int | D<k> | ( expr )
class PolyParser {
   public:
    PolyParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

    Poly parse() {
        Poly f = expr();
        skip_ws();
        if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
        return f;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        skip_ws();
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Poly acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    Poly factor() {
        Poly base = primary();
        if (!accept('^')) return base;
        skip_ws();
        auto e = digits("exponent");
        if (e > 65535) fail("exponent too large");
        Poly r = Poly::constant(ring_, 1);
        for (std::uint64_t i = 0; i < e; ++i) r *= base;
        return r;
    }

    Poly primary() {
        skip_ws();
        if (pos_ == text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            // reduce digit by digit so arbitrarily long literals never overflow
            const auto p = ring_.field().modulus();
            std::uint64_t v = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                v = (v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0')) % p;
            return Poly::constant(ring_, static_cast<std::int64_t>(v));
        }
        if (c == 'D' || c == 'd') {
            auto start = pos_++;
            if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                pos_ = start;
                fail("expected a variable index after 'D'");
            }
            auto k = digits("variable index");
            if (k > static_cast<std::uint64_t>(ring_.n()) || (k == 0 && !ring_.has_d0())) {
                pos_ = start;
                fail("unknown variable D" + std::to_string(k) + " (ring has D1..D" + std::to_string(ring_.n()) + ")");
            }
            return Poly::variable(ring_, static_cast<int>(k));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::uint64_t digits(const char* what) {
        if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail(std::string("expected ") + what);
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
            if (v > (std::uint64_t{1} << 32)) fail(std::string(what) + " too large");
        }
        return v;
    }

    std::string_view text_;
    const Ring& ring_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses e.g. "2*D1^3*D2 + 1". Coefficients are reduced mod p.
inline Poly parse_poly(std::string_view text, const Ring& ring) { return detail::PolyParser(text, ring).parse(); }

inline std::string format_monomial(const Monomial& m) {
    std::string s;
    for (int i = 0; i < kSlots; ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += 'D' + std::to_string(i);
        if (m[i] > 1) s += '^' + std::to_string(m[i]);
    }
    return s;
}

/// Canonical text: terms in decreasing order, coefficients as symmetric residues.
inline std::string format_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    const auto& F = f.ring().field();
    std::string s;
    for (const auto& t : f.terms()) {
        auto c = F.signed_value(t.coef);
        bool neg = c < 0;
        auto mag = neg ? -c : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (t.mono.is_one())
            s += std::to_string(mag);
        else if (mag == 1)
            s += format_monomial(t.mono);
        else
            s += std::to_string(mag) + "*" + format_monomial(t.mono);
    }
    return s;
}

}  // namespace mdcc

#endif
