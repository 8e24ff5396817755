#include "diffnev/factor.hpp"

#include <algorithm>
#include <cassert>

#include "diffnev/fppoly.hpp"

namespace diffnev {

namespace {

IPoly sym_reduce(const IPoly& f, const Integer& m) {
    Integer half = m / 2;
    std::vector<Integer> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Integer v = f.coeffs()[i] % m;
        if (v < 0) v += m;
        if (v > half) v -= m;
        c[i] = v;
    }
    return IPoly(std::move(c));
}

IPoly ipoly_from_fp(const FpPoly& f) {
    std::vector<Integer> c(f.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Integer(static_cast<unsigned long>(f[i]));
    return IPoly(std::move(c));
}

IPoly mul_mod(const IPoly& a, const IPoly& b, const Integer& m) {
    return sym_reduce(a * b, m);
}

// Division with remainder by a monic polynomial, coefficients mod m.
std::pair<IPoly, IPoly> divrem_monic_mod(const IPoly& a, const IPoly& b, const Integer& m) {
    assert(!b.is_zero() && b.lc() == 1);
    if (a.is_zero() || a.degree() < b.degree()) return {IPoly(), sym_reduce(a, m)};
    std::vector<Integer> r = a.coeffs();
    std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Integer(0));
    int db = b.degree();
    for (int i = a.degree() - db; i >= 0; --i) {
        Integer qc = r[static_cast<std::size_t>(i + db)];
        if (qc == 0) continue;
        q[static_cast<std::size_t>(i)] = qc;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i + j)] -= qc * b.coeff(j);
    }
    return {sym_reduce(IPoly(std::move(q)), m), sym_reduce(IPoly(std::move(r)), m)};
}

// Quadratic Hensel step: f = g*h (mod m), s*g + t*h = 1 (mod m), g and h
// monic; produces the same data mod m^2 (von zur Gathen & Gerhard 15.10).
struct HenselPair {
    IPoly g, h, s, t;
};

HenselPair hensel_step(const IPoly& f, const HenselPair& in, const Integer& m) {
    Integer m2 = m * m;
    IPoly e = sym_reduce(f - in.g * in.h, m2);
    auto [q, r] = divrem_monic_mod(mul_mod(in.s, e, m2), in.h, m2);
    IPoly g1 = sym_reduce(in.g + mul_mod(in.t, e, m2) + mul_mod(q, in.g, m2), m2);
    IPoly h1 = sym_reduce(in.h + r, m2);
    IPoly b = sym_reduce(mul_mod(in.s, g1, m2) + mul_mod(in.t, h1, m2) - IPoly(Integer(1)), m2);
    auto [c, d] = divrem_monic_mod(mul_mod(in.s, b, m2), h1, m2);
    IPoly s1 = sym_reduce(in.s - d, m2);
    IPoly t1 = sym_reduce(in.t - mul_mod(in.t, b, m2) - mul_mod(c, g1, m2), m2);
    return {g1, h1, s1, t1};
}

// Extended Euclid over F_p, returning (s, t) with s*a + t*b = 1.
std::pair<FpPoly, FpPoly> fp_xgcd_coeffs(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    FpPoly r0 = a, r1 = b;
    FpPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = fp_divrem(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    assert(fp_degree(r0) == 0);
    std::uint64_t inv = fp_inv(r0[0], p);
    for (auto& c : s0) c = fp_mulmod(c, inv, p);
    for (auto& c : t0) c = fp_mulmod(c, inv, p);
    return {s0, t0};
}

// Lift the monic factorization f = prod(factors) (mod p) to modulus p^(2^it)
// >= target, recursively splitting the factor list in halves.
void lift_tree(const IPoly& f, const std::vector<FpPoly>& factors, std::uint64_t p,
               const Integer& target, std::vector<IPoly>& out) {
    if (factors.size() == 1) {
        out.push_back(sym_reduce(f, target));
        return;
    }
    std::size_t half = factors.size() / 2;
    FpPoly gp{1}, hp{1};
    for (std::size_t i = 0; i < half; ++i) gp = fp_mul(gp, factors[i], p);
    for (std::size_t i = half; i < factors.size(); ++i) hp = fp_mul(hp, factors[i], p);
    auto [sp, tp] = fp_xgcd_coeffs(gp, hp, p);
    HenselPair pair{ipoly_from_fp(gp), ipoly_from_fp(hp), ipoly_from_fp(sp), ipoly_from_fp(tp)};
    Integer m(static_cast<unsigned long>(p));
    while (m < target) {
        pair = hensel_step(f, pair, m);
        m = m * m;
    }
    pair.g = sym_reduce(pair.g, target);
    pair.h = sym_reduce(pair.h, target);
    std::vector<FpPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
    std::vector<FpPoly> right(factors.begin() + static_cast<long>(half), factors.end());
    lift_tree(pair.g, left, p, target, out);
    lift_tree(pair.h, right, p, target, out);
}

Integer max_abs_coeff(const IPoly& f) {
    Integer m(0);
    for (const auto& c : f.coeffs()) {
        Integer a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

}  // namespace

std::vector<IPoly> factor_squarefree_integer(const IPoly& f0) {
    IPoly f = f0.primitive_part();
    std::vector<IPoly> result;
    if (f.is_zero() || f.degree() == 0) return result;
    if (f.degree() == 1) {
        result.push_back(f);
        return result;
    }
    // A good prime: lc survives and the image stays squarefree.
    std::uint64_t p = 0;
    Integer cand(1000003);
    for (int tries = 0; tries < 200; ++tries) {
        std::uint64_t q = cand.get_ui();
        if (mpz_fdiv_ui(f.lc().get_mpz_t(), q) != 0 && fp_is_squarefree(fp_reduce(f, q), q)) {
            p = q;
            break;
        }
        mpz_nextprime(cand.get_mpz_t(), cand.get_mpz_t());
    }
    assert(p != 0 && "no good prime found for a squarefree polynomial");

    std::mt19937_64 rng(0x5eedf00dULL);
    std::vector<FpPoly> modular = fp_factor_squarefree(fp_reduce(f, p), p, rng);
    if (modular.size() == 1) {
        result.push_back(f);
        return result;
    }
    std::sort(modular.begin(), modular.end(),
              [](const FpPoly& a, const FpPoly& b) { return a.size() < b.size(); });

    // Landau-Mignotte style bound on factor coefficients, times lc.
    const int n = f.degree();
    Integer bound = max_abs_coeff(f);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n + 2));
    bound = bound * Integer(n + 1) * abs(f.lc());
    Integer target(static_cast<unsigned long>(p));
    while (target <= 2 * bound) target = target * target;

    // Lift the monic factorization of f/lc.
    Integer lcinv;
    int ok = mpz_invert(lcinv.get_mpz_t(), f.lc().get_mpz_t(), target.get_mpz_t());
    assert(ok);
    (void)ok;
    IPoly fmonic = sym_reduce(f.mul_scalar(lcinv), target);
    std::vector<IPoly> lifted;
    lift_tree(fmonic, modular, p, target, lifted);

    // Subset recombination with trial division.
    std::vector<bool> used(lifted.size(), false);
    IPoly rem = f;
    std::size_t remaining = lifted.size();
    for (std::size_t take = 1; take <= remaining / 2;) {
        std::vector<std::size_t> avail;
        for (std::size_t i = 0; i < lifted.size(); ++i)
            if (!used[i]) avail.push_back(i);
        bool found = false;
        std::vector<std::size_t> idx(take);
        // iterate over combinations of `avail` of size `take`
        std::vector<std::size_t> comb(take);
        for (std::size_t i = 0; i < take; ++i) comb[i] = i;
        while (true) {
            IPoly cand(rem.lc());
            for (std::size_t i = 0; i < take; ++i)
                cand = mul_mod(cand, lifted[avail[comb[i]]], target);
            cand = cand.primitive_part();
            IPoly q;
            if (try_divexact(rem, cand, q)) {
                result.push_back(cand);
                for (std::size_t i = 0; i < take; ++i) used[avail[comb[i]]] = true;
                remaining -= take;
                rem = q.primitive_part();
                found = true;
                break;
            }
            // next combination
            std::size_t i = take;
            while (i-- > 0) {
                if (comb[i] != avail.size() - take + i) {
                    ++comb[i];
                    for (std::size_t j = i + 1; j < take; ++j) comb[j] = comb[j - 1] + 1;
                    break;
                }
                if (i == 0) goto combos_done;
            }
        }
    combos_done:
        if (!found) ++take;
    }
    if (!rem.is_zero() && rem.degree() > 0) result.push_back(rem.primitive_part());
    return result;
}

}  // namespace diffnev
