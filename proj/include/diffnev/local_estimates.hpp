#pragma once

#include "diffnev/wpoly.hpp"

namespace diffnev {

// Basin radius of S = c_m w^m + ... + c_0 at beta:
// max over i < m (c_i != 0) of ord+_beta(c_m/c_i)/(m-i) and
// ord+_beta(1/c_m)/m. Zero for constant S.
Rational c_beta(const WPoly& S, const Rational& beta);

// kappa_{beta,S} = sum over nonzero coefficients of ord+_beta(1/c_i).
long kappa_beta(const WPoly& S, const Rational& beta);

// The assembled error budget E_beta of the local estimate, with every
// ingredient retained for diagnostics.
struct LocalBudget {
    Rational c_P, c_Q;
    long kappa_A = 0, kappa_B = 0;
    long head_terms = 0;  // ord+(b_e) + ord+(a_d) + ord+(1/b_e)
    Rational E;
};

// Requires gcd_w(P, Q) = 1 and deg P >= deg Q; throws CommonFactor
// (propagated from bezout) otherwise.
LocalBudget error_budget(const WPoly& P, const WPoly& Q, const Rational& beta);

// Which branch of the proof of the local estimate applied at this tuple.
enum class OrderRegime { DeepPole, Bezout, Trivial };

struct OrderCheck {
    long lhs = 0;  // ord+_beta(Q(f)/P(f))
    Rational rhs;  // (deg P - deg Q) ord+_beta(1/f) + ord+_beta(Q(f)) - E_beta
    bool holds = false;
    OrderRegime regime = OrderRegime::Trivial;
    LocalBudget budget;
};

// Exact verification of the pointwise inequality; throws DegenerateInput
// when f = 0 or either of P(f), Q(f) vanishes identically.
OrderCheck verify_order_inequality(const WPoly& P, const WPoly& Q,
                                   const RatFunc& f, const Rational& beta);

}  // namespace diffnev
