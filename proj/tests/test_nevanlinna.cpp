#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "diffnev/errors.hpp"
#include "diffnev/nevanlinna.hpp"

using namespace diffnev;

namespace {
constexpr double kPi = 3.14159265358979323846;
const QuadratureConfig kCfg{256, 14, 1e-6};
const QuadratureConfig kLoose{256, 14, 1e-4};
}  // namespace

TEST_CASE("proximity oracles") {
    CHECK(proximity(solution_constant(Complex(2, 0)), 3.0, std::nullopt, kCfg) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-8));
    CHECK(proximity(solution_identity(), std::exp(2.0), std::nullopt, kCfg) ==
          doctest::Approx(2.0).epsilon(1e-6));
    for (double r : {1.0, 5.0, 10.0})
        CHECK(proximity(solution_exp(), r, std::nullopt, kCfg) ==
              doctest::Approx(r / kPi).epsilon(1e-4));
}

TEST_CASE("quadrature convergence: doubling nodes stays within tolerance") {
    for (double r : {2.0, 4.0, 6.0}) {
        QuadratureConfig a = kLoose, b = kLoose;
        b.nodes = 2 * a.nodes;
        double ma = proximity(solution_cos2(2.0), r, std::nullopt, a);
        double mb = proximity(solution_cos2(2.0), r, std::nullopt, b);
        CHECK(std::fabs(ma - mb) < 5 * a.tolerance);
    }
}

TEST_CASE("counting oracles") {
    CHECK(counting(solution_identity(), 10.0, Target(Complex(0, 0))) ==
          doctest::Approx(std::log(10.0)));
    CHECK(counting(solution_exp(), 5.0, std::nullopt) == 0.0);
    SolutionHandle bare;
    bare.name = "bare";
    bare.evaluator = solution_exp().evaluator;
    CHECK_THROWS_AS(counting(bare, 2.0, std::nullopt, CountingMode::Oracle),
                    OracleUnavailable);
}

TEST_CASE("evaluator functional equation f(z+1) = R(z, f(z))") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(-6, 6);
    for (const SolutionHandle& f :
         {solution_exp2(1.0), solution_cos2(1.0), solution_identity()}) {
        REQUIRE(f.equation.has_value());
        int checked = 0;
        while (checked < 100) {
            Complex z(U(rng), U(rng));
            if (std::abs(z) > 6) continue;
            ++checked;
            LogPolar lhs = f.evaluator(z + 1.0);
            LogPolar rhs = eval_logpolar(*f.equation, z, f.evaluator(z));
            CHECK(std::fabs(lhs.logmag - rhs.logmag) < 1e-8);
        }
    }
}

TEST_CASE("oracle and winding fallback agree at r <= 4") {
    auto fcos = solution_cos2(1.0);
    for (double r : {2.0, 3.0, 4.0}) {
        double no = counting(fcos, r, Target(Complex(0, 0)), CountingMode::Oracle);
        double nw = counting(fcos, r, Target(Complex(0, 0)), CountingMode::Winding);
        // Tolerance: one zero's weight at worst; the actual agreement is far
        // tighter because the zero positions match to the box resolution.
        CHECK(std::fabs(no - nw) < 1e-3);
    }
    auto f2 = solution_exp2(1.0);
    for (double r : {2.0, 3.0}) {
        double no = counting(f2, r, Target(Complex(1, 0)), CountingMode::Oracle);
        double nw = counting(f2, r, Target(Complex(1, 0)), CountingMode::Winding);
        CHECK(std::fabs(no - nw) < 1e-3);
    }
}

TEST_CASE("T additivity and monotonicity") {
    auto fcos = solution_cos2(2.0);
    double prevN = 0, prevT = 0;
    for (double r : {2.0, 3.0, 4.0, 5.0}) {
        NevanlinnaRow row = characteristic(fcos, r, kLoose);
        CHECK(row.T == row.m + row.N);
        CHECK(row.m >= 0);
        CHECK(row.N >= prevN - 1e-9);  // entire, so N here counts poles: 0
        CHECK(row.T >= prevT - 1e-9);
        CHECK(row.ratio >= 0);
        CHECK(row.ratio <= 1 + 5 * kLoose.tolerance);
        prevN = row.N;
        prevT = row.T;
    }
}

TEST_CASE("characteristic oracles") {
    CHECK(characteristic(solution_exp(), 5.0, kCfg).T ==
          doctest::Approx(5.0 / kPi).epsilon(1e-4));
    CHECK(characteristic(solution_constant(Complex(2, 0)), 7.0, kCfg).T ==
          doctest::Approx(std::log(2.0)));
    CHECK(characteristic(solution_identity(), std::exp(1.0), kCfg).T ==
          doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("defect experiment rejects exceptional targets without override") {
    auto f2 = solution_exp2(1.0);
    CHECK_THROWS_AS(defect_experiment(f2, Target(Complex(0, 0)), {2, 3}, kLoose),
                    DegenerateInput);
    auto rep = defect_experiment(f2, Target(Complex(0, 0)), {2, 3, 4}, kLoose, true);
    for (const auto& row : rep.rows) CHECK(row.ratio == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("defect ratio decays for the ordinary showcase") {
    auto fcos = solution_cos2(2.0);
    auto rep = defect_experiment(fcos, Target(Complex(0, 0)), {2, 3, 4, 5, 6}, kLoose);
    CHECK(rep.pass);
    CHECK(rep.rows.back().ratio < rep.rows.front().ratio);
    for (const auto& row : rep.rows) {
        CHECK(row.ratio >= 0);
        CHECK(row.ratio <= 1 + 5 * kLoose.tolerance);
    }
}

TEST_CASE("valiron trend") {
    auto rows = valiron_check(solution_exp2(1.0), {3, 4, 5, 6}, kLoose);
    for (const auto& row : rows) CHECK(row.ratio == doctest::Approx(1.0).epsilon(0.02));
    auto rows2 = valiron_check(solution_cos2(1.0), {3, 4, 5, 6}, kLoose);
    CHECK(std::fabs(rows2.back().ratio - 1.0) < std::fabs(rows2.front().ratio - 1.0));
    CHECK_THROWS_AS(valiron_check(solution_constant(Complex(5, 0)), {2, 3}, kLoose),
                    DegenerateInput);
}

TEST_CASE("steinmetz inequality") {
    WPoly Hw({RatFunc(0), RatFunc(1)});  // w
    auto s1 = steinmetz_check(solution_exp(), Hw, {2, 3, 4, 5}, kLoose);
    CHECK(s1.pass);
    for (const auto& row : s1.rows)
        CHECK(row.lhs == doctest::Approx(2 * row.r / kPi).epsilon(1e-3));
    auto s5 = steinmetz_check(solution_constant(Complex(5, 0)),
                              WPoly({RatFunc(-1), RatFunc(1)}), {2, 3, 4}, kLoose);
    CHECK(s5.pass);
    for (const auto& row : s5.rows) CHECK(row.lhs == doctest::Approx(std::log(5.0)));
    // Non-squarefree H rejected.
    WPoly Hsq({RatFunc(0), RatFunc(0), RatFunc(1)});  // w^2
    CHECK_THROWS_AS(steinmetz_check(solution_exp(), Hsq, {2, 3}, kLoose), DegenerateInput);
}

TEST_CASE("first main theorem deviation stays bounded") {
    auto fm1 = first_main_check(solution_identity(), Complex(1, 0),
                                {3, 4, 5, 6, 7, 8, 9}, kLoose);
    CHECK(fm1.pass);
    auto fm2 = first_main_check(solution_cos2(1.0), Complex(1, 0),
                                {2, 2.5, 3, 3.5, 4, 4.5, 5, 5.5, 6}, kLoose);
    CHECK(fm2.pass);
    auto fm3 = first_main_check(solution_constant(Complex(5, 0)), Complex(2, 0),
                                {2, 3, 4, 5}, kLoose);
    CHECK(fm3.pass);
}

TEST_CASE("row-parallel runs are scheduling independent") {
    // Compare a forced single-thread run against the default; fixed-order
    // compensated summation makes them bit-identical.
    auto fcos = solution_cos2(2.0);
    auto rep = defect_experiment(fcos, Target(Complex(0, 0)), {2, 3, 4}, kLoose);
    setenv("DIFFNEV_THREADS", "1", 1);
    auto rep1 = defect_experiment(fcos, Target(Complex(0, 0)), {2, 3, 4}, kLoose);
    unsetenv("DIFFNEV_THREADS");
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        CHECK(rep.rows[i].m == rep1.rows[i].m);
        CHECK(rep.rows[i].N == rep1.rows[i].N);
    }
}
