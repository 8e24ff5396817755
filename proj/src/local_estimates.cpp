#include "diffnev/local_estimates.hpp"

#include <algorithm>
#include <cassert>

#include "diffnev/errors.hpp"

namespace diffnev {

Rational c_beta(const WPoly& S, const Rational& beta) {
    assert(!S.is_zero());
    if (S.is_constant()) return Rational(0);
    const int m = S.degree();
    const RatFunc& cm = S.lc();
    Rational best(ord_plus_at(cm.inverse(), beta), static_cast<unsigned long>(m));
    best.canonicalize();
    for (int i = 0; i < m; ++i) {
        RatFunc ci = S.coeff(i);
        if (ci.is_zero()) continue;  // a vanishing term never dominates
        Rational cand(ord_plus_at(cm / ci, beta), static_cast<unsigned long>(m - i));
        cand.canonicalize();
        best = std::max(best, cand);
    }
    return best;
}

long kappa_beta(const WPoly& S, const Rational& beta) {
    assert(!S.is_zero());
    long total = 0;
    for (const auto& c : S.coeffs()) {
        if (c.is_zero()) continue;
        total += ord_plus_at(c.inverse(), beta);
    }
    return total;
}

LocalBudget error_budget(const WPoly& P, const WPoly& Q, const Rational& beta) {
    assert(!P.is_zero() && !Q.is_zero());
    assert(P.degree() >= Q.degree());
    const int d = P.degree();
    const int e = Q.degree();
    BezoutPair bez = bezout(P, Q);  // throws CommonFactor when gcd != 1

    LocalBudget budget;
    budget.c_P = c_beta(P, beta);
    budget.c_Q = c_beta(Q, beta);
    budget.kappa_A = bez.A.is_zero() ? 0 : kappa_beta(bez.A, beta);
    budget.kappa_B = bez.B.is_zero() ? 0 : kappa_beta(bez.B, beta);
    budget.head_terms = ord_plus_at(Q.lc(), beta) + ord_plus_at(P.lc(), beta) +
                        ord_plus_at(Q.lc().inverse(), beta);
    budget.E = Rational(2 * d - e - 1) * (budget.c_P + budget.c_Q) +
               Rational(budget.kappa_B) + Rational(budget.kappa_A) +
               Rational(budget.head_terms);
    return budget;
}

OrderCheck verify_order_inequality(const WPoly& P, const WPoly& Q,
                                   const RatFunc& f, const Rational& beta) {
    assert(!P.is_zero() && !Q.is_zero());
    if (f.is_zero()) throw DegenerateInput("f = 0 has no pole order 1/f");
    RatFunc Pf = P.eval(f);
    RatFunc Qf = Q.eval(f);
    if (Pf.is_zero()) throw DegenerateInput("P(f) vanishes identically");
    if (Qf.is_zero()) throw DegenerateInput("Q(f) vanishes identically");

    OrderCheck check;
    check.budget = error_budget(P, Q, beta);
    check.lhs = ord_plus_at(Qf / Pf, beta);
    const long ord_plus_inv_f = ord_plus_at(f.inverse(), beta);
    check.rhs = Rational(P.degree() - Q.degree()) * Rational(ord_plus_inv_f) +
                Rational(ord_plus_at(Qf, beta)) - check.budget.E;
    check.holds = Rational(check.lhs) >= check.rhs;

    // Diagnostic regime per the three branches of the proof.
    Rational basin = check.budget.c_P + check.budget.c_Q;
    Rational ord_inv_f(-ord_at(f, beta).value());
    if (ord_inv_f > basin) {
        check.regime = OrderRegime::DeepPole;
    } else {
        Rational threshold = Rational(P.degree() - 1) * basin +
                             Rational(check.budget.kappa_B);
        LocalOrder ordQf = ord_at(Qf, beta);
        if (Rational(ordQf.value()) > threshold)
            check.regime = OrderRegime::Bezout;
        else
            check.regime = OrderRegime::Trivial;
    }
    return check;
}

}  // namespace diffnev
