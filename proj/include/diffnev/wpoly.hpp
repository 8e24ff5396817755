#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diffnev/ratfunc.hpp"

namespace diffnev {

// Polynomial in the dynamical variable w with Q(z) coefficients.
class WPoly {
public:
    WPoly() = default;
    explicit WPoly(RatFunc c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    WPoly(long c) : WPoly(RatFunc(c)) {}
    explicit WPoly(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }

    static WPoly variable() { return WPoly(std::vector<RatFunc>{RatFunc(0), RatFunc(1)}); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const {
        assert(!c_.empty() && "degree of the zero polynomial");
        return static_cast<int>(c_.size()) - 1;
    }
    const RatFunc& lc() const {
        assert(!c_.empty());
        return c_.back();
    }
    RatFunc coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return RatFunc();
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<RatFunc>& coeffs() const { return c_; }

    WPoly operator-() const;
    friend WPoly operator+(const WPoly& a, const WPoly& b);
    friend WPoly operator-(const WPoly& a, const WPoly& b);
    friend WPoly operator*(const WPoly& a, const WPoly& b);
    WPoly mul_scalar(const RatFunc& s) const;
    bool operator==(const WPoly& o) const { return c_ == o.c_; }

    WPoly monic() const;
    WPoly derivative() const;  // d/dw
    WPoly pow(unsigned n) const;
    RatFunc eval(const RatFunc& f) const;
    WPoly shift_z(long n) const;  // sigma^n applied to every coefficient
    // Multiplicity of (w - a) dividing this polynomial, a in Q(z).
    int root_multiplicity(const RatFunc& a) const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<RatFunc> c_;
};

std::pair<WPoly, WPoly> divrem(const WPoly& a, const WPoly& b);

// Monic-in-w gcd over Q(z)[w]; runs on a denominator-cleared representation
// so coefficient growth stays polynomial.
WPoly gcd_w(const WPoly& a, const WPoly& b);

// Sylvester-matrix determinant of (P, Q); zero iff the inputs share a factor.
RatFunc resultant(const WPoly& P, const WPoly& Q);

struct BezoutPair {
    WPoly A, B;
    RatFunc res;
};

// Solve A*P + B*Q = 1 with deg A <= deg Q - 1, deg B <= deg P - 1 through the
// Sylvester linear system; throws CommonFactor when the resultant vanishes.
BezoutPair bezout(const WPoly& P, const WPoly& Q);

// Rational function in w over Q(z), kept in lowest terms with the
// denominator monic in w.
class WRat {
public:
    WRat() : num_(RatFunc(0)), den_(WPoly(1)) { num_ = WPoly(); }
    explicit WRat(WPoly num) : num_(std::move(num)), den_(WPoly(1)) {}
    WRat(WPoly num, WPoly den);  // reduces; throws DivisionByZero on den = 0
    explicit WRat(RatFunc c) : num_(WPoly(std::move(c))), den_(WPoly(1)) {}

    static WRat variable() { return WRat(WPoly::variable()); }
    // Trusted constructor for pairs already known coprime (composition).
    static WRat from_reduced(WPoly num, WPoly den);

    const WPoly& num() const { return num_; }
    const WPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    int deg_w() const;

    friend WRat operator+(const WRat& a, const WRat& b);
    friend WRat operator-(const WRat& a, const WRat& b);
    friend WRat operator*(const WRat& a, const WRat& b);
    friend WRat operator/(const WRat& a, const WRat& b);
    WRat operator-() const { return WRat::from_reduced(-num_, den_); }
    WRat pow(long n) const;
    bool operator==(const WRat& o) const { return num_ == o.num_ && den_ == o.den_; }

    WRat shift_z(long n) const { return from_reduced(num_.shift_z(n), den_.shift_z(n)); }
    // Evaluation at w = f in Q(z); nullopt means the value is infinity.
    std::optional<RatFunc> eval(const RatFunc& f) const;
    // Value at w = infinity; nullopt means infinity.
    std::optional<RatFunc> eval_at_infinity() const;

private:
    WPoly num_, den_;
};

std::string to_string(const WPoly& p);
std::string to_string(const WRat& r);

}  // namespace diffnev
