#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diffnev/classifier.hpp"
#include "diffnev/parser.hpp"

using namespace diffnev;

TEST_CASE("trichotomy tags") {
    CHECK(classify(parse_wrat("w^2+z")).tag == NormalForm::Tag::Polynomial);
    CHECK(classify(parse_wrat("z/(w-1)^2 + 1")).tag == NormalForm::Tag::InversePower);
    CHECK(classify(parse_wrat("(w^2+z)/w")).tag == NormalForm::Tag::Generic);
    CHECK(classify(parse_wrat("w^3 - z*w")).tag == NormalForm::Tag::Polynomial);
}

TEST_CASE("inverse-power normal form reconstructs exactly") {
    WRat R = parse_wrat("z/(w-1)^2 + 1");
    NormalForm nf = classify(R);
    REQUIRE(nf.tag == NormalForm::Tag::InversePower);
    CHECK(nf.a == parse_ratfunc("z"));
    CHECK(nf.b == parse_ratfunc("1"));
    CHECK(nf.d == 2);
    WPoly lin({-nf.b, RatFunc(1)});
    WRat recon = WRat(WPoly(nf.a), lin.pow(static_cast<unsigned>(nf.d))) +
                 WRat(WPoly(nf.b.shift(1)));
    CHECK(recon == R);
}

TEST_CASE("inverse-power with nonconstant center") {
    // R = 1/(w - z)^2 + (z+1): b = z depends on z, shift(b,1) = z+1.
    WRat R = parse_wrat("1/(w-z)^2 + z + 1");
    NormalForm nf = classify(R);
    REQUIRE(nf.tag == NormalForm::Tag::InversePower);
    CHECK(nf.a == parse_ratfunc("1"));
    CHECK(nf.b == parse_ratfunc("z"));
    CHECK(nf.d == 2);
}

TEST_CASE("shift-exceptional verdicts") {
    auto v1 = is_shift_exceptional(parse_wrat("w^2"), RatFunc(0));
    CHECK(v1.fixed);
    CHECK(v1.local_multiplicity == 4);
    CHECK(v1.full_degree == 4);
    CHECK(v1.is_exceptional);

    auto v2 = is_shift_exceptional(parse_wrat("w^2"), RatFunc(1));
    CHECK(v2.fixed);
    CHECK(v2.local_multiplicity == 1);
    CHECK(!v2.is_exceptional);

    auto v3 = is_shift_exceptional(parse_wrat("w^2-2"), RatFunc(2));
    CHECK(v3.fixed);
    CHECK(v3.local_multiplicity == 1);
    CHECK(!v3.is_exceptional);

    // Not even fixed.
    auto v4 = is_shift_exceptional(parse_wrat("w^2"), RatFunc(3));
    CHECK(!v4.fixed);
    CHECK(!v4.is_exceptional);
}

TEST_CASE("Mobius conjugation preserves degree and moves the target to infinity") {
    WRat W2 = parse_wrat("w^2");
    CHECK(conjugate_target(W2, RatFunc(0)) == W2);
    WRat S = conjugate_target(W2, RatFunc(1));
    CHECK(S.deg_w() == 2);
    // mu_z(w) = 1/w + a sends infinity to a; conjugation therefore fixes
    // infinity: deg num > deg den.
    CHECK(S.num().degree() > S.den().degree());
}
