#include "diffnev/bpoly.hpp"

#include <algorithm>

namespace diffnev {

namespace {

// Small fixed-prime polynomial helpers for the coprimality certificate.
constexpr unsigned long kCertPrime = 2147483647UL;  // 2^31 - 1

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
    return static_cast<unsigned long>((static_cast<__uint128_t>(a) * b) % p);
}

unsigned long powmod(unsigned long a, unsigned long e, unsigned long p) {
    unsigned long r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

void trim_vec(std::vector<unsigned long>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<unsigned long> fp_rem(std::vector<unsigned long> a,
                                  const std::vector<unsigned long>& b,
                                  unsigned long p) {
    unsigned long inv_lb = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        unsigned long q = mulmod(a.back(), inv_lb, p);
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            unsigned long t = mulmod(q, b[i], p);
            a[off + i] = (a[off + i] + p - t) % p;
        }
        trim_vec(a);
        if (a.empty()) break;
    }
    return a;
}

std::vector<unsigned long> fp_gcd(std::vector<unsigned long> a,
                                  std::vector<unsigned long> b,
                                  unsigned long p) {
    trim_vec(a);
    trim_vec(b);
    while (!b.empty()) {
        auto r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

int BPoly::degree_z() const {
    int d = 0;
    for (const auto& c : c_)
        if (!c.is_zero()) d = std::max(d, c.degree());
    return d;
}

BPoly BPoly::operator-() const {
    std::vector<IPoly> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return BPoly(std::move(r));
}

BPoly operator+(const BPoly& a, const BPoly& b) {
    std::vector<IPoly> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return BPoly(std::move(r));
}

BPoly operator-(const BPoly& a, const BPoly& b) {
    std::vector<IPoly> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
    return BPoly(std::move(r));
}

BPoly operator*(const BPoly& a, const BPoly& b) {
    if (a.is_zero() || b.is_zero()) return BPoly();
    std::vector<IPoly> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
    }
    return BPoly(std::move(r));
}

BPoly BPoly::mul_coeff(const IPoly& s) const {
    if (s.is_zero() || is_zero()) return BPoly();
    std::vector<IPoly> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return BPoly(std::move(r));
}

BPoly BPoly::derivative_w() const {
    if (c_.size() <= 1) return BPoly();
    std::vector<IPoly> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i].mul_scalar(Integer(static_cast<long>(i)));
    return BPoly(std::move(r));
}

BPoly BPoly::shift_z(long n) const {
    std::vector<IPoly> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        // Taylor shift via Horner on z -> z + n.
        const auto& cs = c_[i].coeffs();
        IPoly acc;
        IPoly lin(std::vector<Integer>{Integer(n), Integer(1)});
        for (std::size_t j = cs.size(); j-- > 0;) acc = acc * lin + IPoly(cs[j]);
        r[i] = std::move(acc);
    }
    return BPoly(std::move(r));
}

IPoly BPoly::content_z() const {
    IPoly g;
    for (const auto& c : c_) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (!g.is_zero() && g.degree() == 0 && g.lc() == 1) break;
    }
    return g;
}

BPoly BPoly::primitive_part() const {
    if (is_zero()) return BPoly();
    IPoly g = content_z();
    if (lc().lc() < 0) g = -g;
    std::vector<IPoly> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        r[i] = c_[i].is_zero() ? IPoly() : divexact(c_[i], g);
    return BPoly(std::move(r));
}

std::vector<unsigned long> BPoly::eval_z_mod(unsigned long x, unsigned long p) const {
    std::vector<unsigned long> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].eval_mod(x, p);
    trim_vec(r);
    return r;
}

IPoly BPoly::eval_z(const Integer& x) const {
    std::vector<Integer> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].eval(x);
    return IPoly(std::move(r));
}

WPoly BPoly::to_wpoly() const {
    std::vector<RatFunc> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        r[i] = RatFunc(ZPoly::from_integer(c_[i]));
    return WPoly(std::move(r));
}

BPoly BPoly::from_wpoly(const WPoly& p) {
    RatFunc scale;
    return from_wpoly_scaled(p, scale);
}

BPoly BPoly::from_wpoly_scaled(const WPoly& p, RatFunc& scale) {
    if (p.is_zero()) {
        scale = RatFunc(1);
        return BPoly();
    }
    // Common denominator across all coefficients, then strip content.
    ZPoly common(Rational(1));
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) continue;
        ZPoly g = gcd(common, c.den());
        common = common * divrem(c.den(), g).first;
    }
    std::vector<IPoly> r(p.coeffs().size());
    std::vector<ZPoly> scaled(p.coeffs().size());
    // Scale to Q[z] coefficients, then clear the rational content jointly.
    Integer denlcm(1);
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        const RatFunc& c = p.coeffs()[i];
        if (c.is_zero()) continue;
        scaled[i] = c.num() * divrem(common, c.den()).first;
        for (const auto& q : scaled[i].coeffs())
            mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        if (scaled[i].is_zero()) continue;
        std::vector<Integer> ic(scaled[i].coeffs().size());
        for (std::size_t j = 0; j < ic.size(); ++j) {
            Rational v = scaled[i].coeffs()[j] * Rational(denlcm);
            assert(v.get_den() == 1);
            ic[j] = v.get_num();
        }
        r[i] = IPoly(std::move(ic));
    }
    BPoly cleared(std::move(r));
    IPoly cont = cleared.content_z();
    if (cleared.lc().lc() < 0) cont = -cont;
    std::vector<IPoly> prim(cleared.c_.size());
    for (std::size_t i = 0; i < cleared.c_.size(); ++i)
        prim[i] = cleared.c_[i].is_zero() ? IPoly() : divexact(cleared.c_[i], cont);
    // p = cleared / (common * denlcm) and cleared = cont * result.
    scale = RatFunc(ZPoly::from_integer(cont),
                    common.mul_scalar(Rational(denlcm)));
    return BPoly(std::move(prim));
}

BPoly prem_w(const BPoly& a, const BPoly& b) {
    assert(!b.is_zero());
    if (a.is_zero() || a.degree_w() < b.degree_w()) return a;
    BPoly r = a;
    const int db = b.degree_w();
    const IPoly& lb = b.lc();
    while (!r.is_zero() && r.degree_w() >= db) {
        IPoly top = r.lc();
        int shift = r.degree_w() - db;
        BPoly scaled = r.mul_coeff(lb);
        // top * w^shift * b
        std::vector<IPoly> sub(static_cast<std::size_t>(shift + db) + 1);
        for (int i = 0; i <= db; ++i)
            sub[static_cast<std::size_t>(shift + i)] = top * b.coeff(i);
        r = scaled - BPoly(std::move(sub));
    }
    return r;
}

bool certify_coprime(const BPoly& a, const BPoly& b) {
    if (a.is_zero() || b.is_zero()) return false;
    if (a.is_constant_w() || b.is_constant_w()) return true;
    const unsigned long p = kCertPrime;
    for (unsigned long x = 1; x < 64; ++x) {
        auto fa = a.eval_z_mod(x, p);
        auto fb = b.eval_z_mod(x, p);
        // Leading coefficients must survive the specialization or the gcd
        // degree bound argument does not apply.
        if (static_cast<int>(fa.size()) - 1 != a.degree_w()) continue;
        if (static_cast<int>(fb.size()) - 1 != b.degree_w()) continue;
        auto g = fp_gcd(fa, fb, p);
        if (g.size() == 1) return true;
    }
    return false;
}

BPoly gcd_bi(const BPoly& a, const BPoly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (certify_coprime(a, b)) return BPoly(IPoly(Integer(1)));
    BPoly A = a.primitive_part();
    BPoly B = b.primitive_part();
    if (A.degree_w() < B.degree_w()) std::swap(A, B);
    if (B.is_constant_w()) return BPoly(IPoly(Integer(1)));
    // Primitive PRS; contents are units in Q(z) so the result is the
    // primitive part of the last nonvanishing remainder.
    while (true) {
        BPoly R = prem_w(A, B);
        if (R.is_zero()) return B.primitive_part();
        if (R.is_constant_w()) return BPoly(IPoly(Integer(1)));
        A = std::move(B);
        B = R.primitive_part();
    }
}

bool try_divexact_bi(const BPoly& a, const BPoly& b, BPoly& quotient) {
    assert(!b.is_zero());
    if (a.is_zero()) {
        quotient = BPoly();
        return true;
    }
    if (a.degree_w() < b.degree_w()) return false;
    BPoly r = a;
    const int db = b.degree_w();
    std::vector<IPoly> q(static_cast<std::size_t>(a.degree_w() - db) + 1);
    while (!r.is_zero() && r.degree_w() >= db) {
        IPoly qc;
        if (!try_divexact(r.lc(), b.lc(), qc)) return false;
        int shift = r.degree_w() - db;
        q[static_cast<std::size_t>(shift)] = qc;
        std::vector<IPoly> sub(static_cast<std::size_t>(shift + db) + 1);
        for (int i = 0; i <= db; ++i)
            sub[static_cast<std::size_t>(shift + i)] = qc * b.coeff(i);
        r = r - BPoly(std::move(sub));
        if (!r.is_zero() && r.degree_w() == shift + db) return false;  // no progress
    }
    if (!r.is_zero()) return false;
    quotient = BPoly(std::move(q));
    return true;
}

BPoly divexact_bi(const BPoly& a, const BPoly& b) {
    BPoly q;
    bool ok = try_divexact_bi(a, b, q);
    assert(ok);
    (void)ok;
    return q;
}

}  // namespace diffnev
