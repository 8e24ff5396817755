#include "diffnev/ratfunc.hpp"

#include <sstream>

namespace diffnev {

RatFunc::RatFunc(ZPoly num, ZPoly den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) {
        num_ = ZPoly();
        den_ = ZPoly(Rational(1));
        return;
    }
    if (!den.is_constant() && !num.is_constant()) {
        ZPoly g = gcd(num, den);
        if (!g.is_constant() || g.coeff(0) != 1) {
            num = divrem(num, g).first;
            den = divrem(den, g).first;
        }
    }
    Rational dl = den.lc();
    num_ = num.mul_scalar(1 / dl);
    den_ = den.mul_scalar(1 / dl);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, reduced_tag{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_.is_constant() && b.den_.is_constant())
        return RatFunc(a.num_ + b.num_, ZPoly(Rational(1)), RatFunc::reduced_tag{});
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_.is_constant() && b.den_.is_constant())
        return RatFunc(a.num_ - b.num_, ZPoly(Rational(1)), RatFunc::reduced_tag{});
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // Cross-cancel before multiplying to keep intermediate degrees down;
    // constant operands cannot share anything worth cancelling.
    ZPoly an = a.num_, bn = b.num_, ad = a.den_, bd = b.den_;
    if (!an.is_constant() && !bd.is_constant()) {
        ZPoly g1 = gcd(an, bd);
        if (!g1.is_constant()) {
            an = divrem(an, g1).first;
            bd = divrem(bd, g1).first;
        }
    }
    if (!bn.is_constant() && !ad.is_constant()) {
        ZPoly g2 = gcd(bn, ad);
        if (!g2.is_constant()) {
            bn = divrem(bn, g2).first;
            ad = divrem(ad, g2).first;
        }
    }
    ZPoly n = an * bn;
    ZPoly d = ad * bd;
    Rational dl = d.lc();
    return RatFunc(n.mul_scalar(1 / dl), d.mul_scalar(1 / dl), RatFunc::reduced_tag{});
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero();
    ZPoly n = den_, d = num_;
    Rational dl = d.lc();
    return RatFunc(n.mul_scalar(1 / dl), d.mul_scalar(1 / dl), reduced_tag{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    RatFunc acc(Rational(1));
    RatFunc base = *this;
    unsigned long k = static_cast<unsigned long>(n);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

RatFunc RatFunc::shift(long n) const {
    return RatFunc(num_.taylor_shift(n), den_.taylor_shift(n), reduced_tag{});
}

std::optional<Rational> RatFunc::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) return std::nullopt;
    return num_.eval(x) / d;
}

LocalOrder ord_at(const RatFunc& g, const Rational& beta) {
    if (g.is_zero()) return LocalOrder::infinite();
    return LocalOrder(g.num().root_multiplicity(beta) - g.den().root_multiplicity(beta));
}

long ord_plus_at(const RatFunc& g, const Rational& beta) {
    assert(!g.is_zero());
    return ord_at(g, beta).plus();
}

std::string to_string(const RatFunc& g) {
    if (g.is_polynomial()) {
        Rational scale = g.den().coeff(0);
        if (scale == 1) return to_string(g.num());
        ZPoly scaled = g.num().mul_scalar(1 / scale);
        return to_string(scaled);
    }
    std::ostringstream out;
    std::string ns = to_string(g.num());
    std::string ds = to_string(g.den());
    bool wrap_num = ns.find(' ') != std::string::npos || ns.find('/') != std::string::npos;
    bool wrap_den = ds.find(' ') != std::string::npos || ds.find('/') != std::string::npos ||
                    ds.find('*') != std::string::npos;
    out << (wrap_num ? "(" : "") << ns << (wrap_num ? ")" : "");
    out << "/";
    out << (wrap_den ? "(" : "") << ds << (wrap_den ? ")" : "");
    return out.str();
}

}  // namespace diffnev
