#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "diffnev/errors.hpp"
#include "diffnev/parser.hpp"
#include "diffnev/ratfunc.hpp"

using namespace diffnev;

namespace {

RatFunc random_ratfunc(std::mt19937_64& rng, int maxdeg = 3) {
    std::uniform_int_distribution<int> deg(0, maxdeg), coef(-5, 5);
    int dn = deg(rng), dd = deg(rng);
    std::vector<Rational> n(static_cast<std::size_t>(dn) + 1);
    std::vector<Rational> d(static_cast<std::size_t>(dd) + 1);
    for (auto& c : n) c = coef(rng);
    for (auto& c : d) c = coef(rng);
    if (n.back() == 0) n.back() = 1;
    if (d.back() == 0) d.back() = 1;
    return RatFunc(ZPoly(n), ZPoly(d));
}

}  // namespace

TEST_CASE("rational field axioms on random elements") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + RatFunc() == a);
        CHECK(a * RatFunc(1) == a);
        CHECK(a - a == RatFunc());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == RatFunc(1));
            CHECK(a / a == RatFunc(1));
        }
    }
}

TEST_CASE("reduction to lowest terms with monic denominator") {
    RatFunc g = parse_ratfunc("(z^2-1)/(z-1)");
    CHECK(g.is_polynomial());
    CHECK(g == parse_ratfunc("z+1"));
    RatFunc h = parse_ratfunc("(2*z+2)/(4*z)");
    CHECK(h.den().lc() == 1);
    CHECK(h == parse_ratfunc("(z+1)/(2*z)"));
    // The parser reports the offending position and rethrows as ParseError.
    CHECK_THROWS_AS(parse_ratfunc("1/(z-z)"), ParseError);
}

TEST_CASE("shift automorphism") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 30; ++i) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
        // sigma is a field automorphism commuting with all operations.
        CHECK((a + b).shift(1) == a.shift(1) + b.shift(1));
        CHECK((a * b).shift(1) == a.shift(1) * b.shift(1));
        CHECK(a.shift(3).shift(-3) == a);
        CHECK(a.shift(2) == a.shift(1).shift(1));
    }
    CHECK(parse_ratfunc("z").shift(1) == parse_ratfunc("z+1"));
    CHECK(parse_ratfunc("1/z").shift(-1) == parse_ratfunc("1/(z-1)"));
}

TEST_CASE("local order is a valuation") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> betadist(-2, 2);
    for (int i = 0; i < 40; ++i) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
        if (a.is_zero() || b.is_zero()) continue;
        Rational beta(betadist(rng));
        LocalOrder oa = ord_at(a, beta), ob = ord_at(b, beta);
        CHECK(ord_at(a * b, beta) == oa + ob);
        RatFunc s = a + b;
        if (!s.is_zero()) {
            LocalOrder os = ord_at(s, beta);
            CHECK(!(os < (oa < ob ? oa : ob)));
        }
        CHECK(ord_at(a.inverse(), beta) == -oa);
    }
    CHECK(ord_at(parse_ratfunc("z^2"), Rational(0)).value() == 2);
    CHECK(ord_at(parse_ratfunc("1/(z-1)"), Rational(1)).value() == -1);
    CHECK(ord_at(RatFunc(), Rational(0)).is_infinite());
    CHECK(ord_plus_at(parse_ratfunc("z^3"), Rational(0)) == 3);
    CHECK(ord_plus_at(parse_ratfunc("1/z"), Rational(0)) == 0);
}

TEST_CASE("parse/print round-trip") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 40; ++i) {
        RatFunc a = random_ratfunc(rng);
        CHECK(parse_ratfunc(to_string(a)) == a);
    }
    CHECK_THROWS_AS(parse_ratfunc("z +"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("w"), ParseError);
    try {
        parse_ratfunc("z + @");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("evaluation at rational points") {
    RatFunc g = parse_ratfunc("(z^2+1)/(z-2)");
    CHECK(*g.eval(Rational(3)) == Rational(10));
    CHECK(!g.eval(Rational(2)));
    CHECK(*g.shift(1).eval(Rational(2)) == *g.eval(Rational(3)));
}
