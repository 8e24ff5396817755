#include <algorithm>
#include <cassert>

#include "diffnev/factor.hpp"

namespace diffnev {

namespace {

// Truncate a univariate polynomial (in the lifting variable t) mod t^B.
ZPoly ztrunc(const ZPoly& p, int B) {
    if (p.is_zero() || p.degree() < B) return p;
    std::vector<Rational> c(p.coeffs().begin(), p.coeffs().begin() + B);
    return ZPoly(std::move(c));
}

// Polynomial in w with truncated Q[t] coefficients.
using Series = std::vector<ZPoly>;

Series strim(Series s) {
    while (!s.empty() && s.back().is_zero()) s.pop_back();
    return s;
}

Series smul(const Series& a, const Series& b, int B) {
    if (a.empty() || b.empty()) return {};
    Series r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] = ztrunc(r[i + j] + a[i] * b[j], B);
        }
    }
    return strim(std::move(r));
}

// Extended Euclid over Q[w] on ZPoly values: s*a + t*b = gcd (monic).
void qpoly_xgcd(const ZPoly& a, const ZPoly& b, ZPoly& s, ZPoly& t) {
    ZPoly r0 = a, r1 = b;
    ZPoly s0(Rational(1)), s1, t0, t1(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = r1;
        r1 = r;
        ZPoly s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        ZPoly t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    Rational inv = 1 / r0.lc();
    s = s0.mul_scalar(inv);
    t = t0.mul_scalar(inv);
}

// Reciprocal of a unit power series mod t^B.
ZPoly series_inverse(const ZPoly& c, int B) {
    assert(!c.is_zero() && c.coeff(0) != 0);
    std::vector<Rational> v(static_cast<std::size_t>(B), Rational(0));
    v[0] = 1 / c.coeff(0);
    for (int k = 1; k < B; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) acc += c.coeff(j) * v[static_cast<std::size_t>(k - j)];
        v[static_cast<std::size_t>(k)] = -acc * v[0];
    }
    return ZPoly(std::move(v));
}

BPoly series_to_bpoly(const Series& s) {
    // Clear denominators jointly and strip content.
    Integer denlcm(1);
    for (const auto& c : s)
        for (const auto& q : c.coeffs())
            mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<IPoly> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i].is_zero()) continue;
        std::vector<Integer> ic(s[i].coeffs().size());
        for (std::size_t j = 0; j < ic.size(); ++j) {
            Rational v = s[i].coeffs()[j] * Rational(denlcm);
            ic[j] = v.get_num();
        }
        out[i] = IPoly(std::move(ic));
    }
    return BPoly(std::move(out)).primitive_part();
}

}  // namespace

std::vector<BPoly> factor_squarefree_bivariate(const BPoly& f0) {
    std::vector<BPoly> result;
    BPoly F = f0.primitive_part();
    if (F.is_zero() || F.is_constant_w()) return result;
    if (F.degree_w() == 1) {
        result.push_back(F);
        return result;
    }
    if (F.degree_z() == 0) {
        // Coefficients are integers; defer to the univariate machinery.
        std::vector<Integer> ic(F.coeffs().size());
        for (std::size_t i = 0; i < ic.size(); ++i) ic[i] = F.coeff(static_cast<int>(i)).coeff(0);
        for (const auto& g : factor_squarefree_integer(IPoly(std::move(ic)))) {
            std::vector<IPoly> c(g.coeffs().size());
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = IPoly(g.coeffs()[i]);
            result.push_back(BPoly(std::move(c)));
        }
        return result;
    }

    // Good specialization point: leading coefficient survives and the image
    // stays squarefree.
    long z0 = 0;
    bool found = false;
    for (long cand = 0; cand <= 200 && !found; cand = (cand <= 0 ? 1 - cand : -cand)) {
        if (F.lc().eval(Integer(cand)) == 0) continue;
        IPoly f0spec = F.eval_z(Integer(cand)).primitive_part();
        IPoly g = gcd(f0spec, f0spec.derivative());
        if (!g.is_zero() && g.degree() == 0) {
            z0 = cand;
            found = true;
        }
    }
    assert(found && "no good specialization point for a squarefree polynomial");

    BPoly G = F.shift_z(z0);  // expand around t = z - z0 = 0
    IPoly fspec = G.eval_z(Integer(0)).primitive_part();
    std::vector<IPoly> uni = factor_squarefree_integer(fspec);
    if (uni.size() == 1) {
        result.push_back(F);
        return result;
    }

    const int B = G.degree_z() + (G.lc().is_zero() ? 0 : G.lc().degree()) + 1;

    // Monic local factors over Q, and the CRT inverses used by the lift.
    std::vector<ZPoly> u(uni.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        u[i] = ZPoly::from_integer(uni[i]).monic();
    std::vector<ZPoly> U(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        ZPoly prod(Rational(1));
        for (std::size_t j = 0; j < u.size(); ++j)
            if (j != i) prod = divrem(prod * u[j], u[i]).second;
        ZPoly s, t;
        qpoly_xgcd(prod, u[i], s, t);
        U[i] = divrem(s, u[i]).second;
    }

    // Monic image of G over Q[[t]] mod t^B.
    ZPoly lc_t = ZPoly::from_integer(G.lc());
    ZPoly lc_inv = series_inverse(lc_t, B);
    const int n = G.degree_w();
    Series Gm(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        Gm[static_cast<std::size_t>(i)] = ztrunc(ZPoly::from_integer(G.coeff(i)) * lc_inv, B);

    // Lifted factors: coefficient [i][j] is the Q[t] coefficient of w^j.
    std::vector<Series> g(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        g[i].resize(static_cast<std::size_t>(u[i].degree()) + 1);
        for (int j = 0; j <= u[i].degree(); ++j)
            g[i][static_cast<std::size_t>(j)] = ZPoly(u[i].coeff(j));
    }

    // Linear (t-adic) multifactor Hensel lift.
    for (int k = 1; k < B; ++k) {
        Series prod = g[0];
        for (std::size_t i = 1; i < g.size(); ++i) prod = smul(prod, g[i], k + 1);
        // error term at order t^k
        std::vector<Rational> ek(static_cast<std::size_t>(n), Rational(0));
        bool any = false;
        for (int j = 0; j < n; ++j) {
            Rational gm = j < static_cast<int>(Gm.size()) ? Gm[static_cast<std::size_t>(j)].coeff(k) : Rational(0);
            Rational pr = j < static_cast<int>(prod.size()) ? prod[static_cast<std::size_t>(j)].coeff(k) : Rational(0);
            Rational d = gm - pr;
            if (d != 0) any = true;
            ek[static_cast<std::size_t>(j)] = d;
        }
        if (!any) continue;
        ZPoly e(std::move(ek));
        for (std::size_t i = 0; i < g.size(); ++i) {
            ZPoly delta = divrem(divrem(e * U[i], u[i]).second, u[i]).second;
            if (delta.is_zero()) continue;
            for (int j = 0; j <= delta.degree(); ++j) {
                Rational dc = delta.coeff(j);
                if (dc == 0) continue;
                ZPoly& cell = g[i][static_cast<std::size_t>(j)];
                std::vector<Rational> cv = cell.coeffs();
                cv.resize(std::max(cv.size(), static_cast<std::size_t>(k) + 1), Rational(0));
                cv[static_cast<std::size_t>(k)] += dc;
                cell = ZPoly(std::move(cv));
            }
        }
    }

    // Subset recombination with trial division in Z[t][w].
    std::vector<bool> used(g.size(), false);
    BPoly rem = G;
    std::size_t remaining = g.size();
    std::vector<BPoly> shifted_factors;
    for (std::size_t take = 1; take <= remaining / 2;) {
        std::vector<std::size_t> avail;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (!used[i]) avail.push_back(i);
        bool found_one = false;
        std::vector<std::size_t> comb(take);
        for (std::size_t i = 0; i < take; ++i) comb[i] = i;
        while (true) {
            Series cand{ztrunc(ZPoly::from_integer(rem.lc()), B)};
            for (std::size_t i = 0; i < take; ++i)
                cand = smul(cand, g[avail[comb[i]]], B);
            BPoly c = series_to_bpoly(cand);
            BPoly q;
            if (!c.is_constant_w() && try_divexact_bi(rem, c, q)) {
                shifted_factors.push_back(c);
                for (std::size_t i = 0; i < take; ++i) used[avail[comb[i]]] = true;
                remaining -= take;
                rem = q.primitive_part();
                found_one = true;
                break;
            }
            std::size_t i = take;
            bool advanced = false;
            while (i-- > 0) {
                if (comb[i] != avail.size() - take + i) {
                    ++comb[i];
                    for (std::size_t j = i + 1; j < take; ++j) comb[j] = comb[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
        if (!found_one) ++take;
    }
    if (!rem.is_zero() && !rem.is_constant_w()) shifted_factors.push_back(rem);

    for (const auto& s : shifted_factors) result.push_back(s.shift_z(-z0).primitive_part());
    return result;
}

std::vector<std::pair<BPoly, int>> yun_squarefree(const BPoly& f0) {
    std::vector<std::pair<BPoly, int>> out;
    BPoly f = f0.primitive_part();
    if (f.is_zero() || f.is_constant_w()) return out;
    BPoly fd = f.derivative_w();
    BPoly G = gcd_bi(f, fd);
    if (G.is_constant_w()) {
        out.emplace_back(f, 1);
        return out;
    }
    // No rescaling inside the loop: Yun's D = f'/G - C' identity is exact and
    // unit changes would break it.
    BPoly C = divexact_bi(f, G);
    BPoly D = divexact_bi(fd, G) - C.derivative_w();
    int i = 1;
    while (!C.is_constant_w()) {
        BPoly P = gcd_bi(C, D);
        if (!P.is_constant_w()) out.emplace_back(P.primitive_part(), i);
        C = divexact_bi(C, P);
        D = divexact_bi(D, P) - C.derivative_w();
        ++i;
    }
    return out;
}

SquarefreeDecomposition squarefree_decompose(const WPoly& q) {
    assert(!q.is_zero());
    SquarefreeDecomposition out;
    out.unit = RatFunc(1);
    if (q.is_constant()) {
        out.unit = q.coeff(0);
        return out;
    }
    BPoly b = BPoly::from_wpoly(q);
    for (const auto& [part, mult] : yun_squarefree(b)) {
        for (const auto& irr : factor_squarefree_bivariate(part))
            out.factors.emplace_back(irr.to_wpoly().monic(), mult);
    }
    // Unit: ratio of q to the reconstructed monic product; it lives in Q(z).
    WPoly recon(1);
    for (const auto& [h, e] : out.factors) recon = recon * h.pow(static_cast<unsigned>(e));
    out.unit = q.lc() / recon.lc();
    return out;
}

std::vector<std::pair<WPoly, int>> squarefree_decomposition(const WPoly& q) {
    return squarefree_decompose(q).factors;
}

}  // namespace diffnev
