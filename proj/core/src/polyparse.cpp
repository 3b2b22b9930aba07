/*
   Copyright 2026 the monoquart authors

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

#include "monoquart/polyparse.hpp"

#include <cctype>
#include <stdexcept>

namespace monoquart {

namespace {

constexpr long max_degree = 4096;

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    ParsedPoly run() {
        IntPoly p = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return {p, var_};
    }

  private:
    std::string_view text_;
    size_t pos_ = 0;
    std::string var_;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    int peek() {
        skip_ws();
        return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_])
                                   : -1;
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // expression := ['+'|'-'] term (('+'|'-') term)*
    IntPoly expression() {
        IntPoly acc;
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        acc = term();
        if (neg) acc = BigInt(-1) * acc;
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    // term := factor (('*')? factor)*   with implicit multiplication
    IntPoly term() {
        IntPoly acc = factor();
        for (;;) {
            int c = peek();
            bool explicit_mul = (c == '*');
            if (explicit_mul) {
                ++pos_;
                c = peek();
            }
            bool starts_factor = c == '(' || std::isdigit(c) || std::isalpha(c);
            if (!starts_factor) {
                if (explicit_mul) fail("expected factor after '*'");
                break;
            }
            IntPoly rhs = factor();
            check_degree(acc.degree() + rhs.degree());
            acc = acc * rhs;
        }
        return acc;
    }

    // factor := base ('^' uint)?
    IntPoly factor() {
        IntPoly b = base();
        if (accept('^')) {
            unsigned long e = parse_uint();
            check_degree(b.degree() * static_cast<long>(e));
            IntPoly r(BigInt(1));
            IntPoly sq = b;
            while (e) {
                if (e & 1) r = r * sq;
                e >>= 1;
                if (e) sq = sq * sq;
            }
            b = r;
        }
        return b;
    }

    // base := uint | var | '(' expression ')'
    IntPoly base() {
        int c = peek();
        if (c == '(') {
            ++pos_;
            IntPoly inner = expression();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(c)) return IntPoly(BigInt(parse_number()));
        if (std::isalpha(c)) {
            char v = static_cast<char>(c);
            if (var_.empty())
                var_ = std::string(1, v);
            else if (var_[0] != v)
                fail(std::string("second variable '") + v + "'");
            ++pos_;
            return IntPoly::monomial(BigInt(1), 1);
        }
        fail("expected number, variable or '('");
    }

    unsigned long parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() ||
            !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected exponent");
        unsigned long v = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (v > static_cast<unsigned long>(max_degree))
                fail("exponent too large");
            ++pos_;
        }
        return v;
    }

    BigInt parse_number() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
    }

    void check_degree(long d) const {
        if (d > max_degree)
            throw std::invalid_argument("polynomial degree exceeds " +
                                        std::to_string(max_degree));
    }
};

}  // namespace

ParsedPoly parse_poly(std::string_view text) {
    Parser p(text);
    return p.run();
}

}  // namespace monoquart
