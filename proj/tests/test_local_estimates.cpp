#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "diffnev/errors.hpp"
#include "diffnev/local_estimates.hpp"
#include "diffnev/parser.hpp"

using namespace diffnev;

TEST_CASE("basin radius c_beta oracles") {
    CHECK(c_beta(parse_wpoly("w^2"), Rational(0)) == Rational(0));
    // lc = z vanishes at 0: ord+(1/z)/2 = 1/2 from the c_m^{-1} term.
    CHECK(c_beta(parse_wpoly("z*w^2+1"), Rational(0)) == Rational(1, 2));
    // The gap-1 term ord+(z/1)/1 = 1 dominates the 1/2 above.
    CHECK(c_beta(parse_wpoly("z*w^2+w"), Rational(0)) == Rational(1));
    // c_m/c_0 = 1/z and 1/c_m = 1/z both have ord -1, clamped to 0.
    CHECK(c_beta(parse_wpoly("z*w + z^2"), Rational(0)) == Rational(0));
    CHECK(c_beta(parse_wpoly("5"), Rational(0)) == Rational(0));
}

TEST_CASE("kappa_beta oracles") {
    CHECK(kappa_beta(parse_wpoly("(1/z)*w+1"), Rational(0)) == 1);
    CHECK(kappa_beta(parse_wpoly("(1/z^2)*w^2+(1/z)*w"), Rational(0)) == 3);
    CHECK(kappa_beta(parse_wpoly("w^2 + z"), Rational(0)) == 0);
}

TEST_CASE("error budget assembles E_beta") {
    LocalBudget b = error_budget(parse_wpoly("w^2"), parse_wpoly("w-1"), Rational(0));
    CHECK(b.E == Rational(0));
    CHECK(b.c_P == Rational(0));
    CHECK(b.kappa_A == 0);
    CHECK(b.kappa_B == 0);
    // A nontrivial budget: P = z*w^2, Q = w - 1/z at beta = 0.
    LocalBudget b2 = error_budget(parse_wpoly("z*w^2"), parse_wpoly("w - 1/z"), Rational(0));
    CHECK(b2.E > Rational(0));
    CHECK_THROWS_AS(error_budget(parse_wpoly("(w-z)*w"), parse_wpoly("w-z"), Rational(0)),
                    CommonFactor);
}

TEST_CASE("hand-checked order inequalities") {
    auto c1 = verify_order_inequality(parse_wpoly("w^2"), parse_wpoly("1"),
                                      parse_ratfunc("1/z"), Rational(0));
    CHECK(c1.lhs == 2);
    CHECK(c1.rhs == Rational(2));
    CHECK(c1.holds);

    auto c2 = verify_order_inequality(parse_wpoly("w^2"), parse_wpoly("w-1"),
                                      parse_ratfunc("1/z"), Rational(0));
    CHECK(c2.lhs == 1);
    CHECK(c2.rhs == Rational(1));
    CHECK(c2.holds);

    auto c3 = verify_order_inequality(parse_wpoly("w^2"), parse_wpoly("w-1"),
                                      parse_ratfunc("7"), Rational(0));
    CHECK(c3.lhs == 0);
    CHECK(c3.rhs == Rational(0));
    CHECK(c3.holds);
}

TEST_CASE("degenerate inputs rejected") {
    CHECK_THROWS_AS(verify_order_inequality(parse_wpoly("w^2"), parse_wpoly("w-1"),
                                            RatFunc(), Rational(0)),
                    DegenerateInput);
    // Q(f) = 0 identically when f is a root of Q.
    CHECK_THROWS_AS(verify_order_inequality(parse_wpoly("w^2"), parse_wpoly("w-1"),
                                            parse_ratfunc("1"), Rational(0)),
                    DegenerateInput);
}

TEST_CASE("random tuples satisfy the inequality with all three regimes") {
    std::mt19937_64 rng(42);
    auto rnd_rf = [&](int maxdeg) {
        std::uniform_int_distribution<int> deg(0, maxdeg), coef(-3, 3);
        int dn = deg(rng), dd = deg(rng);
        std::vector<Rational> n(static_cast<std::size_t>(dn) + 1);
        std::vector<Rational> d(static_cast<std::size_t>(dd) + 1);
        for (auto& c : n) c = coef(rng);
        for (auto& c : d) c = coef(rng);
        if (n.back() == 0) n.back() = 1;
        if (d.back() == 0) d.back() = 1;
        return RatFunc(ZPoly(n), ZPoly(d));
    };
    auto rnd_wp = [&](int degw) {
        std::vector<RatFunc> c(static_cast<std::size_t>(degw) + 1);
        for (auto& x : c) x = rnd_rf(2);
        if (c.back().is_zero()) c.back() = RatFunc(1);
        return WPoly(c);
    };
    std::uniform_int_distribution<int> degp(1, 4), betadist(-3, 3);
    int tried = 0, regimes[3] = {0, 0, 0};
    while (tried < 120) {
        int dp = degp(rng);
        int dq = std::uniform_int_distribution<int>(0, dp)(rng);
        WPoly P = rnd_wp(dp), Q = rnd_wp(dq);
        RatFunc f = rnd_rf(2);
        if (f.is_zero()) continue;
        Rational beta(betadist(rng));
        try {
            auto chk = verify_order_inequality(P, Q, f, beta);
            ++tried;
            CHECK(chk.holds);
            ++regimes[static_cast<int>(chk.regime)];
        } catch (const CommonFactor&) {
        } catch (const DegenerateInput&) {
        }
    }
    CHECK(regimes[0] > 0);  // deep-pole branch exercised
    CHECK(regimes[2] > 0);  // trivial branch exercised
}
