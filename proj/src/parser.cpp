#include "diffnev/parser.hpp"

#include <cctype>

#include "diffnev/errors.hpp"

namespace diffnev {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    WRat parse() {
        WRat v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return v;
    }

private:
    WRat expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        WRat acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    WRat term() {
        WRat acc = factor();
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c == '/') {
                std::size_t at = pos_;
                ++pos_;
                WRat rhs = factor();
                if (rhs.is_zero()) throw ParseError("division by zero", at);
                acc = acc / rhs;
            } else {
                return acc;
            }
        }
    }

    WRat factor() {
        WRat base = primary();
        skip_ws();
        if (peek() == '^') {
            std::size_t at = ++pos_;
            skip_ws();
            bool neg = false;
            if (peek() == '-') {
                neg = true;
                ++pos_;
            }
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected integer exponent", at);
            long e = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + (peek() - '0');
                if (e > 4096) throw ParseError("exponent too large", at);
                ++pos_;
            }
            if (neg && base.is_zero()) throw ParseError("zero to a negative power", at);
            base = base.pow(neg ? -e : e);
        }
        return base;
    }

    WRat primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            WRat v = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return v;
        }
        if (c == 'z') {
            ++pos_;
            return WRat(RatFunc::variable());
        }
        if (c == 'w') {
            ++pos_;
            saw_w_ = true;
            return WRat::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            Integer v(s_.substr(start, pos_ - start));
            return WRat(RatFunc(Rational(v)));
        }
        throw ParseError(c == '\0' ? "unexpected end of input"
                                   : std::string("unexpected character '") + c + "'",
                         pos_);
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;

public:
    bool saw_w_ = false;
};

}  // namespace

WRat parse_wrat(const std::string& text) {
    Parser p(text);
    return p.parse();
}

RatFunc parse_ratfunc(const std::string& text) {
    Parser p(text);
    WRat v = p.parse();
    if (p.saw_w_ || v.deg_w() != 0)
        throw ParseError("expected an expression in z only", 0);
    if (v.is_zero()) return RatFunc();
    return v.num().coeff(0);
}

WPoly parse_wpoly(const std::string& text) {
    WRat v = parse_wrat(text);
    if (!v.is_polynomial()) throw ParseError("expected a polynomial in w", 0);
    return v.num();
}

}  // namespace diffnev
