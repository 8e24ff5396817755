#pragma once

#include <gmpxx.h>

#include <string>

namespace diffnev {

// Exact rational scalar. gmp keeps values canonical (coprime, positive
// denominator, zero as 0/1) through arithmetic; the helpers below cover the
// places where canonicalization is manual.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational ratio(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational ratio(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

}  // namespace diffnev
