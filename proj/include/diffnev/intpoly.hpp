#pragma once

#include <cassert>
#include <vector>

#include "diffnev/rational.hpp"

namespace diffnev {

// Univariate polynomial with mpz coefficients, ascending degree, trimmed.
// This is the computational engine behind gcds over Q[z] and the bivariate
// pseudo-remainder sequences; the public Q-coefficient types normalize
// through it.
class IPoly {
public:
    IPoly() = default;
    explicit IPoly(Integer c) {
        if (c != 0) c_.push_back(std::move(c));
    }
    explicit IPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IPoly variable() { return IPoly(std::vector<Integer>{0, 1}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const {
        assert(!c_.empty());
        return static_cast<int>(c_.size()) - 1;
    }
    const Integer& lc() const {
        assert(!c_.empty());
        return c_.back();
    }
    Integer coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Integer(0);
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<Integer>& coeffs() const { return c_; }

    IPoly operator-() const;
    friend IPoly operator+(const IPoly& a, const IPoly& b);
    friend IPoly operator-(const IPoly& a, const IPoly& b);
    friend IPoly operator*(const IPoly& a, const IPoly& b);
    IPoly mul_scalar(const Integer& s) const;
    IPoly mul_xpow(int k) const;  // multiply by z^k

    bool operator==(const IPoly& o) const { return c_ == o.c_; }

    // gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    Integer content() const;
    // divide by content, sign chosen so the leading coefficient is positive.
    IPoly primitive_part() const;
    // exact division by a scalar known to divide every coefficient.
    IPoly div_scalar_exact(const Integer& s) const;

    IPoly derivative() const;
    Integer eval(const Integer& x) const;
    unsigned long eval_mod(unsigned long x, unsigned long p) const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod b, computed exactly.
IPoly prem(const IPoly& a, const IPoly& b);

// gcd via the subresultant PRS; result is the primitive gcd with positive
// leading coefficient (content of inputs folded in).
IPoly gcd(const IPoly& a, const IPoly& b);

// Exact division; asserts that b divides a.
IPoly divexact(const IPoly& a, const IPoly& b);
bool try_divexact(const IPoly& a, const IPoly& b, IPoly& quotient);

}  // namespace diffnev
