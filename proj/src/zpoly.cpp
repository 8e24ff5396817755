#include "diffnev/zpoly.hpp"

#include <algorithm>
#include <sstream>

namespace diffnev {

ZPoly ZPoly::operator-() const {
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return ZPoly(std::move(r));
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return ZPoly(std::move(r));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return ZPoly(std::move(r));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return ZPoly(std::move(r));
}

ZPoly ZPoly::mul_scalar(const Rational& s) const {
    if (s == 0 || is_zero()) return ZPoly();
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return ZPoly(std::move(r));
}

ZPoly ZPoly::monic() const {
    assert(!is_zero());
    return mul_scalar(1 / lc());
}

ZPoly ZPoly::derivative() const {
    if (c_.size() <= 1) return ZPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return ZPoly(std::move(r));
}

ZPoly ZPoly::pow(unsigned n) const {
    ZPoly acc(Rational(1));
    ZPoly base = *this;
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

Rational ZPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

ZPoly ZPoly::taylor_shift(long n) const {
    // Horner on z -> (z + n):  p(z+n) accumulated bottom-up.
    ZPoly acc;
    ZPoly lin(std::vector<Rational>{Rational(n), Rational(1)});
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + ZPoly(c_[i]);
    return acc;
}

int ZPoly::root_multiplicity(const Rational& beta) const {
    assert(!is_zero());
    ZPoly p = *this;
    ZPoly lin(std::vector<Rational>{-beta, Rational(1)});
    int m = 0;
    while (p.eval(beta) == 0) {
        auto [q, r] = divrem(p, lin);
        assert(r.is_zero());
        p = q;
        ++m;
        if (p.is_zero()) break;
    }
    return m;
}

std::pair<IPoly, Rational> ZPoly::to_integer() const {
    if (is_zero()) return {IPoly(), Rational(1)};
    Integer denlcm(1);
    for (const auto& c : c_)
        mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ic(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        Rational scaled = c_[i] * Rational(denlcm);
        assert(scaled.get_den() == 1);
        ic[i] = scaled.get_num();
    }
    IPoly p(std::move(ic));
    Integer cont = p.content();
    if (p.lc() < 0) cont = -cont;
    p = p.div_scalar_exact(cont);
    return {p, ratio(cont, denlcm)};
}

ZPoly ZPoly::from_integer(const IPoly& p) {
    std::vector<Rational> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rational(p.coeffs()[i]);
    return ZPoly(std::move(c));
}

std::pair<ZPoly, ZPoly> divrem(const ZPoly& a, const ZPoly& b) {
    assert(!b.is_zero());
    if (a.is_zero() || a.degree() < b.degree()) return {ZPoly(), a};
    std::vector<Rational> r(a.coeffs());
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const int db = b.degree();
    for (int i = a.degree() - db; i >= 0; --i) {
        Rational qc = r[static_cast<std::size_t>(i + db)] / b.lc();
        if (qc == 0) continue;
        q[static_cast<std::size_t>(i)] = qc;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i + j)] -= qc * b.coeff(j);
    }
    return {ZPoly(std::move(q)), ZPoly(std::move(r))};
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return b.is_zero() ? ZPoly() : b.monic();
    if (b.is_zero()) return a.monic();
    IPoly g = gcd(a.to_integer().first, b.to_integer().first);
    return ZPoly::from_integer(g).monic();
}

std::string to_string(const ZPoly& p, char var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational ac = abs(c);
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            out << ac.get_str();
        } else {
            if (ac != 1) out << ac.get_str() << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace diffnev
