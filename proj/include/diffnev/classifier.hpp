#pragma once

#include "diffnev/wpoly.hpp"

namespace diffnev {

// Trichotomy of a degree-d map R(z, w). InversePower reconstructs
// the map exactly as a * (w - b)^(-d) + shift(b, 1).
struct NormalForm {
    enum class Tag { Polynomial, InversePower, Generic };
    Tag tag = Tag::Generic;
    RatFunc a, b;  // populated for InversePower only
    int d = 0;
};

// Requires deg_w(R) >= 2; throws MalformedInversePower if the two-step
// composite is a polynomial in w but the normal form fails to reconstruct
// (the dichotomy says that cannot happen, so it signals a bug).
NormalForm classify(const WRat& R);

// Verdict on whether w = a (a constant) is a totally ramified fixed point
// of the two-step shifted composite G(w) = R(z, R(z-1, w)).
struct ExceptionalVerdict {
    RatFunc target;
    bool fixed = false;
    int local_multiplicity = 0;
    int full_degree = 0;  // deg_w(R)^2
    bool is_exceptional = false;
};

ExceptionalVerdict is_shift_exceptional(const WRat& R, const RatFunc& a);

// Mobius conjugation S_z = mu_{z+1}^{-1} o R_z o mu_z with
// mu_z(w) = 1/w + a(z), sending the target a to infinity. Preserves deg_w.
WRat conjugate_target(const WRat& R, const RatFunc& a);

}  // namespace diffnev
