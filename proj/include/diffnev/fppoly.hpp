#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "diffnev/intpoly.hpp"

namespace diffnev {

// Dense polynomials over F_p for an odd prime p < 2^31, ascending
// coefficients, trimmed. Backing for the modular stage of factorization.
using FpPoly = std::vector<std::uint64_t>;

std::uint64_t fp_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t fp_powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p);

void fp_trim(FpPoly& f);
int fp_degree(const FpPoly& f);  // -1 for zero
FpPoly fp_reduce(const IPoly& f, std::uint64_t p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly fp_monic(const FpPoly& f, std::uint64_t p);
std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p);  // monic
FpPoly fp_derivative(const FpPoly& f, std::uint64_t p);
FpPoly fp_mulmod_poly(const FpPoly& a, const FpPoly& b, const FpPoly& mod, std::uint64_t p);
FpPoly fp_powmod_poly(FpPoly base, const Integer& e, const FpPoly& mod, std::uint64_t p);

bool fp_is_squarefree(const FpPoly& f, std::uint64_t p);

// Full factorization of a monic squarefree polynomial over F_p
// (distinct-degree then Cantor-Zassenhaus equal-degree splitting).
std::vector<FpPoly> fp_factor_squarefree(const FpPoly& f, std::uint64_t p, std::mt19937_64& rng);

}  // namespace diffnev
