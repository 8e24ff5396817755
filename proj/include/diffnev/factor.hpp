#pragma once

#include <utility>
#include <vector>

#include "diffnev/bpoly.hpp"
#include "diffnev/wpoly.hpp"

namespace diffnev {

// Irreducible factorization of a primitive squarefree integer polynomial
// (Zassenhaus: factor mod p, Hensel lift, subset recombination). Factors are
// primitive with positive leading coefficient.
std::vector<IPoly> factor_squarefree_integer(const IPoly& f);

// Irreducible factorization over Q(z)[w] of a primitive polynomial that is
// squarefree in w, via a good specialization of z, univariate factorization,
// and a (z - z0)-adic Hensel lift with subset recombination. Factors are
// primitive over Z[z][w] with positive leading coefficient.
std::vector<BPoly> factor_squarefree_bivariate(const BPoly& f);

// Yun squarefree decomposition over Q(z)[w]: pairwise coprime squarefree
// parts with their multiplicities; the product of parts^mult reconstructs
// the input up to a unit of Q(z).
std::vector<std::pair<BPoly, int>> yun_squarefree(const BPoly& f);

// Full decomposition into irreducible monic-in-w factors with exponents,
// plus the discarded Q(z) unit so reconstruction is exact.
struct SquarefreeDecomposition {
    std::vector<std::pair<WPoly, int>> factors;
    RatFunc unit;  // input = unit * prod factor^exponent
};

SquarefreeDecomposition squarefree_decompose(const WPoly& q);

// Spec-surface form: the factor list alone.
std::vector<std::pair<WPoly, int>> squarefree_decomposition(const WPoly& q);

}  // namespace diffnev
