#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "diffnev/intpoly.hpp"
#include "diffnev/rational.hpp"

namespace diffnev {

// Univariate polynomial over Q in the variable z. Coefficients ascending,
// trimmed; the zero polynomial has an empty coefficient list and no degree
// (degree() asserts), so "-1" can never leak out as data.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(Rational c) {
        if (c != 0) c_.push_back(std::move(c));
    }
    ZPoly(long c) : ZPoly(Rational(c)) {}
    explicit ZPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static ZPoly variable() { return ZPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const {
        assert(!c_.empty() && "degree of the zero polynomial");
        return static_cast<int>(c_.size()) - 1;
    }
    const Rational& lc() const {
        assert(!c_.empty());
        return c_.back();
    }
    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    ZPoly operator-() const;
    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    ZPoly mul_scalar(const Rational& s) const;
    bool operator==(const ZPoly& o) const { return c_ == o.c_; }

    ZPoly monic() const;
    ZPoly derivative() const;
    ZPoly pow(unsigned n) const;
    Rational eval(const Rational& x) const;
    // p(z + n)
    ZPoly taylor_shift(long n) const;
    // Multiplicity of (z - beta) dividing this polynomial.
    int root_multiplicity(const Rational& beta) const;

    // Scale to coprime integer coefficients; returns (integer poly, s) with
    // this = s * ipoly and s > 0... sign kept in s.
    std::pair<IPoly, Rational> to_integer() const;
    static ZPoly from_integer(const IPoly& p);

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Euclidean division over Q[z]: a = q*b + r with deg r < deg b.
std::pair<ZPoly, ZPoly> divrem(const ZPoly& a, const ZPoly& b);

// Monic gcd over Q[z] (computed through the integer subresultant PRS).
ZPoly gcd(const ZPoly& a, const ZPoly& b);

std::string to_string(const ZPoly& p, char var = 'z');

}  // namespace diffnev
