#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "diffnev/factor.hpp"
#include "diffnev/wpoly.hpp"

namespace diffnev {

// Substitution of one rational map into another: outer(inner(w)), returned
// in lowest terms. Runs on denominator-cleared integer polynomials with the
// discarded Q(z) unit tracked exactly, so no gcd is ever taken mid-flight:
// the homogeneous numerator/denominator pair of a composition of reduced
// maps is automatically coprime.
WRat compose(const WRat& outer, const WRat& inner);

// R_z o R_{z-1} o ... o R_{z-k+1} (or the forward variant
// R_{z+k-1} o ... o R_z), in lowest terms.
struct CompositionChain {
    WRat base;
    int depth = 0;
    bool forward = false;
    WRat value;
};

CompositionChain compose_chain(const WRat& R, int k, bool forward = false);

// Irreducible factors of Q_k with exponents, together with the deficiency
// e0 = d^k - deg Q_k at infinity and the spread statistic ek.
struct MultiplicityProfile {
    std::vector<std::pair<WPoly, int>> factors;  // (H irreducible monic, e)
    long e0 = 0;
    long ek = 0;
    long degree = 0;  // d^k
};

MultiplicityProfile multiplicity_profile(const WRat& R, int k);

// One row of the spread sequence: ek and the exact ratio ek / d^k.
struct SpreadRow {
    int k = 0;
    long ek = 0;
    long e0 = 0;
    long degree = 0;  // d^k
    Rational ratio;   // ek / d^k in lowest terms
};

// Ratio sequence for k = 1..kmax; throws PolynomialComposite when the
// two-step composite is a polynomial in w (the excluded case).
std::vector<SpreadRow> spread_sequence(const WRat& R, int kmax);

// Squarefree layers J_1, ..., J_emax of Qk: J_i is the product of the
// irreducible factors of multiplicity >= i, so prod J_i = Qk up to a unit.
std::vector<WPoly> squarefree_layers(const WPoly& Qk);

// Local multiplicity of the map at w = g; nullopt means g = infinity.
int ramification_at(const WRat& R, const std::optional<RatFunc>& g);

// Orbit of infinity under the shifted chain: m is the least depth at which
// the orbit returns to infinity (nullopt if none within the search bound),
// E the m-th root of the ramification of the depth-m chain at infinity.
struct ExceptionalCycleData {
    std::optional<int> m;
    long ramification = 0;
    double E = 0.0;
};

ExceptionalCycleData exceptional_cycle_data(const WRat& R, int search_bound = 8);

// Total ramification excess of the depth-1 fiber over infinity:
// sum over fiber points of (multiplicity - 1). Riemann-Hurwitz bounds this
// by 2d - 2.
long rh_fiber_excess(const WRat& R);

}  // namespace diffnev
