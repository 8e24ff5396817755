#include "diffnev/fppoly.hpp"

#include <algorithm>
#include <cassert>

namespace diffnev {

std::uint64_t fp_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

std::uint64_t fp_powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = fp_mulmod(r, a, p);
        a = fp_mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) { return fp_powmod(a, p - 2, p); }

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int fp_degree(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly fp_reduce(const IPoly& f, std::uint64_t p) {
    FpPoly r(f.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), static_cast<unsigned long>(p));
    fp_trim(r);
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<__uint128_t>(a[i]) * b[j]) % p;
    }
    fp_trim(r);
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    fp_trim(r);
    return r;
}

FpPoly fp_monic(const FpPoly& f, std::uint64_t p) {
    if (f.empty() || f.back() == 1) return f;
    std::uint64_t inv = fp_inv(f.back(), p);
    FpPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = fp_mulmod(f[i], inv, p);
    return r;
}

std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    assert(!b.empty());
    if (a.size() < b.size()) return {{}, a};
    FpPoly r = a;
    FpPoly q(a.size() - b.size() + 1, 0);
    std::uint64_t inv = fp_inv(b.back(), p);
    for (std::size_t i = a.size() - b.size() + 1; i-- > 0;) {
        std::uint64_t qc = fp_mulmod(r[i + b.size() - 1], inv, p);
        if (qc == 0) continue;
        q[i] = qc;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t t = fp_mulmod(qc, b[j], p);
            r[i + j] = (r[i + j] + p - t) % p;
        }
    }
    fp_trim(r);
    return {q, r};
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        auto r = fp_divrem(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a, p);
}

FpPoly fp_derivative(const FpPoly& f, std::uint64_t p) {
    if (f.size() <= 1) return {};
    FpPoly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i)
        r[i - 1] = fp_mulmod(f[i], static_cast<std::uint64_t>(i % p), p);
    fp_trim(r);
    return r;
}

FpPoly fp_mulmod_poly(const FpPoly& a, const FpPoly& b, const FpPoly& mod, std::uint64_t p) {
    return fp_divrem(fp_mul(a, b, p), mod, p).second;
}

FpPoly fp_powmod_poly(FpPoly base, const Integer& e, const FpPoly& mod, std::uint64_t p) {
    FpPoly r{1};
    base = fp_divrem(base, mod, p).second;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_mulmod_poly(r, base, mod, p);
        base = fp_mulmod_poly(base, base, mod, p);
    }
    return r;
}

bool fp_is_squarefree(const FpPoly& f, std::uint64_t p) {
    if (f.size() <= 1) return true;
    FpPoly d = fp_derivative(f, p);
    if (d.empty()) return false;
    return fp_gcd(f, d, p).size() == 1;
}

namespace {

// Equal-degree splitting of a product of irreducibles of degree d.
void edf(const FpPoly& f, int d, std::uint64_t p, std::mt19937_64& rng,
         std::vector<FpPoly>& out) {
    int n = fp_degree(f);
    if (n == d) {
        out.push_back(fp_monic(f, p));
        return;
    }
    // exponent (p^d - 1) / 2
    Integer e(static_cast<unsigned long>(p));
    mpz_pow_ui(e.get_mpz_t(), e.get_mpz_t(), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    while (true) {
        FpPoly a(static_cast<std::size_t>(n), 0);
        for (auto& c : a) c = rng() % p;
        fp_trim(a);
        if (fp_degree(a) < 1) continue;
        FpPoly b = fp_powmod_poly(a, e, f, p);
        if (b.empty()) continue;
        b[0] = (b[0] + p - 1) % p;
        fp_trim(b);
        FpPoly g = fp_gcd(f, b, p);
        int dg = fp_degree(g);
        if (dg > 0 && dg < n) {
            edf(g, d, p, rng, out);
            edf(fp_divrem(f, g, p).first, d, p, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<FpPoly> fp_factor_squarefree(const FpPoly& f0, std::uint64_t p,
                                         std::mt19937_64& rng) {
    std::vector<FpPoly> out;
    FpPoly f = fp_monic(f0, p);
    if (fp_degree(f) <= 0) return out;
    // Distinct-degree decomposition.
    FpPoly h{0, 1};  // x
    const FpPoly x{0, 1};
    int d = 0;
    while (fp_degree(f) > 0) {
        ++d;
        if (2 * d > fp_degree(f)) {
            out.push_back(f);
            break;
        }
        h = fp_powmod_poly(h, Integer(static_cast<unsigned long>(p)), f, p);
        FpPoly g = fp_gcd(fp_sub(h, x, p), f, p);
        if (fp_degree(g) > 0) {
            edf(g, d, p, rng, out);
            f = fp_divrem(f, g, p).first;
            h = fp_divrem(h, f, p).second;
        }
    }
    return out;
}

}  // namespace diffnev
