#pragma once

#include <cassert>
#include <vector>

#include "diffnev/intpoly.hpp"
#include "diffnev/wpoly.hpp"

namespace diffnev {

// Bivariate integer polynomial: polynomial in w whose coefficients are
// integer polynomials in z. The heavy symbolic work (composition chains,
// pseudo-remainder sequences, factorization) runs here; WPoly/WRat are the
// normalized public faces.
class BPoly {
public:
    BPoly() = default;
    explicit BPoly(IPoly c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit BPoly(std::vector<IPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

    static BPoly variable() { return BPoly(std::vector<IPoly>{IPoly(), IPoly(Integer(1))}); }
    static BPoly constant(long v) { return BPoly(IPoly(Integer(v))); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant_w() const { return c_.size() <= 1; }
    int degree_w() const {
        assert(!c_.empty());
        return static_cast<int>(c_.size()) - 1;
    }
    int degree_z() const;
    const IPoly& lc() const {
        assert(!c_.empty());
        return c_.back();
    }
    const IPoly& coeff(int i) const {
        static const IPoly zero;
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<IPoly>& coeffs() const { return c_; }

    BPoly operator-() const;
    friend BPoly operator+(const BPoly& a, const BPoly& b);
    friend BPoly operator-(const BPoly& a, const BPoly& b);
    friend BPoly operator*(const BPoly& a, const BPoly& b);
    BPoly mul_coeff(const IPoly& s) const;
    bool operator==(const BPoly& o) const { return c_ == o.c_; }

    BPoly derivative_w() const;
    BPoly shift_z(long n) const;  // z -> z + n in every coefficient
    // Content in Z[z] (gcd of the w-coefficients) and its removal.
    IPoly content_z() const;
    BPoly primitive_part() const;
    // Specialize z -> x mod p; coefficients reduced mod p, ascending in w.
    std::vector<unsigned long> eval_z_mod(unsigned long x, unsigned long p) const;
    IPoly eval_z(const Integer& x) const;  // specialize z, keep w

    WPoly to_wpoly() const;
    static BPoly from_wpoly(const WPoly& p);  // clears denominators, primitive
    // As from_wpoly, but reports the discarded Q(z) unit: p = scale * result.
    static BPoly from_wpoly_scaled(const WPoly& p, RatFunc& scale);

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<IPoly> c_;
};

// Pseudo-remainder in w.
BPoly prem_w(const BPoly& a, const BPoly& b);

// Primitive gcd in Q(z)[w] semantics: result primitive over Z[z][w]; a fast
// modular certificate short-circuits the (common) coprime case.
BPoly gcd_bi(const BPoly& a, const BPoly& b);

// One-specialization certificate: true means gcd_w(a, b) = 1, proven.
// False means undecided (a real gcd run is needed).
bool certify_coprime(const BPoly& a, const BPoly& b);

// Exact division in Z[z][w]; returns false if b does not divide a.
bool try_divexact_bi(const BPoly& a, const BPoly& b, BPoly& quotient);
BPoly divexact_bi(const BPoly& a, const BPoly& b);

}  // namespace diffnev
