#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diffnev/composition.hpp"
#include "diffnev/errors.hpp"
#include "diffnev/parser.hpp"

using namespace diffnev;

TEST_CASE("compose_chain oracles") {
    WRat R1 = parse_wrat("w^2+z");
    CHECK(compose_chain(R1, 0).value == WRat::variable());
    CHECK(compose_chain(R1, 1).value == R1);
    CHECK(compose_chain(R1, 2).value == parse_wrat("(w^2+z-1)^2 + z"));

    WRat R2 = parse_wrat("(w^2+z)/w");
    CHECK(compose_chain(R2, 2).value ==
          parse_wrat("((w^2+z-1)^2 + z*w^2) / (w*(w^2+z-1))"));
}

TEST_CASE("forward chain is the shifted backward chain") {
    WRat R = parse_wrat("(w^2+z)/w");
    for (int k = 1; k <= 3; ++k) {
        WRat fwd = compose_chain(R, k, true).value;
        WRat bwd = compose_chain(R, k, false).value;
        CHECK(fwd == bwd.shift_z(k - 1));
    }
}

TEST_CASE("chain cocycle C_{k+1} = R o sigma^{-1}(C_k)") {
    WRat R = parse_wrat("(w^2+z)/w");
    WRat lhs = compose_chain(R, 3).value;
    WRat rhs = compose(R, compose_chain(R, 2).value.shift_z(-1));
    CHECK(lhs == rhs);
}

TEST_CASE("degree law deg C_k = d^k") {
    for (const char* text : {"(w^2+z)/w", "w^2+z", "(w^3+z*w+1)/(w-z)"}) {
        WRat R = parse_wrat(text);
        long d = R.deg_w(), expect = 1;
        for (int k = 0; k <= 4; ++k) {
            CHECK(compose_chain(R, k).value.deg_w() == expect);
            expect *= d;
        }
    }
}

TEST_CASE("multiplicity profile of (w^2+z)/w") {
    WRat R = parse_wrat("(w^2+z)/w");
    auto p1 = multiplicity_profile(R, 1);
    CHECK(p1.degree == 2);
    CHECK(p1.e0 == 1);  // deg Q_1 = 1, deficiency 2 - 1 - 0... e0 counts infinity
    CHECK(p1.ek == 1);
    auto p2 = multiplicity_profile(R, 2);
    CHECK(p2.degree == 4);
    CHECK(p2.ek == 1);
}

TEST_CASE("spread ratios decay for (w^2+z)/w") {
    WRat R = parse_wrat("(w^2+z)/w");
    auto rows = spread_sequence(R, 6);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].ratio == Rational(1, 2));
    CHECK(rows[1].ratio == Rational(1, 4));
    CHECK(rows[5].ratio < rows[0].ratio);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].k == static_cast<int>(i) + 1);
}

TEST_CASE("spread rejects polynomial composites") {
    CHECK_THROWS_AS(spread_sequence(parse_wrat("w^2+z"), 2), PolynomialComposite);
    CHECK_THROWS_AS(spread_sequence(parse_wrat("z/(w-1)^2 + 1"), 2), PolynomialComposite);
}

TEST_CASE("squarefree layers multiply back") {
    auto layers = squarefree_layers(parse_wpoly("w^3*(w-1)"));
    REQUIRE(layers.size() == 3);
    CHECK(layers[0] == parse_wpoly("w^2-w"));
    CHECK(layers[1] == parse_wpoly("w"));
    CHECK(layers[2] == parse_wpoly("w"));
}

TEST_CASE("ramification oracles") {
    WRat W2 = parse_wrat("w^2");
    CHECK(ramification_at(W2, RatFunc(0)) == 2);
    CHECK(ramification_at(W2, RatFunc(1)) == 1);
    CHECK(ramification_at(W2, std::nullopt) == 2);
    WRat R2 = parse_wrat("(w^2+z)/w");
    CHECK(ramification_at(R2, std::nullopt) == 1);
}

TEST_CASE("Riemann-Hurwitz fiber excess") {
    CHECK(rh_fiber_excess(parse_wrat("(w^2+z)/w")) == 0);
    CHECK(rh_fiber_excess(parse_wrat("w^2+z")) == 1);
    for (const char* text : {"(w^2+z)/w", "w^2+z", "z/(w-1)^2 + 1", "(w^3+z*w+1)/(w-z)"}) {
        WRat R = parse_wrat(text);
        CHECK(rh_fiber_excess(R) <= 2 * R.deg_w() - 2);
    }
}

TEST_CASE("exceptional cycle data") {
    auto e1 = exceptional_cycle_data(parse_wrat("w^2+z"));
    REQUIRE(e1.m.has_value());
    CHECK(*e1.m == 1);
    CHECK(e1.E == doctest::Approx(2.0));
    auto e2 = exceptional_cycle_data(parse_wrat("z/(w-1)^2 + 1"));
    REQUIRE(e2.m.has_value());
    CHECK(*e2.m == 2);
    CHECK(e2.E == doctest::Approx(2.0));
    auto e3 = exceptional_cycle_data(parse_wrat("(w^2+z)/w"));
    REQUIRE(e3.m.has_value());
    CHECK(*e3.m == 1);
    CHECK(e3.E == doctest::Approx(1.0));
}
