#pragma once

#include <cassert>
#include <compare>
#include <optional>
#include <string>

#include "diffnev/errors.hpp"
#include "diffnev/zpoly.hpp"

namespace diffnev {

// Local vanishing order at a point; +infinity (the order of the zero
// function) is a dedicated state, never a large integer.
class LocalOrder {
public:
    LocalOrder() = default;
    explicit LocalOrder(long v) : value_(v) {}
    static LocalOrder infinite() {
        LocalOrder o;
        o.infinite_ = true;
        return o;
    }

    bool is_infinite() const { return infinite_; }
    long value() const {
        assert(!infinite_);
        return value_;
    }
    long plus() const {
        assert(!infinite_);
        return value_ > 0 ? value_ : 0;
    }

    friend LocalOrder operator+(const LocalOrder& a, const LocalOrder& b) {
        if (a.infinite_ || b.infinite_) return infinite();
        return LocalOrder(a.value_ + b.value_);
    }
    LocalOrder operator-() const {
        assert(!infinite_ && "1/f undefined for f = 0");
        return LocalOrder(-value_);
    }
    bool operator==(const LocalOrder& o) const {
        return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
    }
    bool operator==(long v) const { return !infinite_ && value_ == v; }
    // +infinity compares above every finite order.
    friend bool operator<(const LocalOrder& a, const LocalOrder& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }

private:
    bool infinite_ = false;
    long value_ = 0;
};

// Element of Q(z): coprime fraction with monic denominator; zero is 0/1.
class RatFunc {
public:
    RatFunc() : den_(Rational(1)) {}
    RatFunc(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
    RatFunc(long c) : num_(Rational(c)), den_(Rational(1)) {}
    explicit RatFunc(ZPoly p) : num_(std::move(p)), den_(Rational(1)) {}
    RatFunc(ZPoly num, ZPoly den);

    static RatFunc variable() { return RatFunc(ZPoly::variable()); }

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    std::optional<Rational> as_rational() const {
        if (!is_constant()) return std::nullopt;
        return num_.coeff(0);
    }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);  // throws DivisionByZero
    RatFunc inverse() const;                                       // throws DivisionByZero
    RatFunc pow(long n) const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    // The shift automorphism sigma^n: g(z) -> g(z + n).
    RatFunc shift(long n) const;

    // Evaluation; nullopt at a pole.
    std::optional<Rational> eval(const Rational& x) const;

private:
    struct reduced_tag {};
    RatFunc(ZPoly num, ZPoly den, reduced_tag) : num_(std::move(num)), den_(std::move(den)) {}
    ZPoly num_, den_;
};

// ord_beta: multiplicity of (z - beta) in the numerator minus the
// denominator; +infinity for the zero function.
LocalOrder ord_at(const RatFunc& g, const Rational& beta);
// ord_beta^+ = max(ord_beta, 0); requires g nonzero.
long ord_plus_at(const RatFunc& g, const Rational& beta);

std::string to_string(const RatFunc& g);

}  // namespace diffnev
