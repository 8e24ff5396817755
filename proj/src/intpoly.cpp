#include "diffnev/intpoly.hpp"

#include <algorithm>

#include "diffnev/fppoly.hpp"

namespace diffnev {

IPoly IPoly::operator-() const {
    std::vector<Integer> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return IPoly(std::move(r));
}

IPoly operator+(const IPoly& a, const IPoly& b) {
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IPoly(std::move(r));
}

IPoly operator-(const IPoly& a, const IPoly& b) {
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return IPoly(std::move(r));
}

IPoly operator*(const IPoly& a, const IPoly& b) {
    if (a.is_zero() || b.is_zero()) return IPoly();
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return IPoly(std::move(r));
}

IPoly IPoly::mul_scalar(const Integer& s) const {
    if (s == 0 || is_zero()) return IPoly();
    std::vector<Integer> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return IPoly(std::move(r));
}

IPoly IPoly::mul_xpow(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Integer> r(c_.size() + static_cast<std::size_t>(k), Integer(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + static_cast<std::size_t>(k)] = c_[i];
    return IPoly(std::move(r));
}

Integer IPoly::content() const {
    Integer g(0);
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IPoly IPoly::primitive_part() const {
    if (is_zero()) return IPoly();
    Integer g = content();
    if (lc() < 0) g = -g;
    return div_scalar_exact(g);
}

IPoly IPoly::div_scalar_exact(const Integer& s) const {
    assert(s != 0);
    std::vector<Integer> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        assert(mpz_divisible_p(c_[i].get_mpz_t(), s.get_mpz_t()));
        mpz_divexact(r[i].get_mpz_t(), c_[i].get_mpz_t(), s.get_mpz_t());
    }
    return IPoly(std::move(r));
}

IPoly IPoly::derivative() const {
    if (c_.size() <= 1) return IPoly();
    std::vector<Integer> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Integer(static_cast<long>(i));
    return IPoly(std::move(r));
}

Integer IPoly::eval(const Integer& x) const {
    Integer acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

unsigned long IPoly::eval_mod(unsigned long x, unsigned long p) const {
    unsigned long acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        unsigned long c = mpz_fdiv_ui(c_[i].get_mpz_t(), p);
        acc = (static_cast<unsigned long>(
                  (static_cast<__uint128_t>(acc) * x + c) % p));
    }
    return acc;
}

IPoly prem(const IPoly& a, const IPoly& b) {
    assert(!b.is_zero());
    if (a.is_zero() || a.degree() < b.degree()) {
        // Scaling by lc(b)^(dega-degb+1) is vacuous here; return a itself.
        return a;
    }
    std::vector<Integer> r = a.coeffs();
    const int db = b.degree();
    const Integer& lb = b.lc();
    int da = a.degree();
    // The subresultant bookkeeping needs the exact scaling lb^(da-db+1); a
    // degree drop of more than one per step applies fewer factors, so count
    // them and top the result up afterwards.
    int scalings = 0;
    const int needed = da - db + 1;
    while (da >= db && !(da == 0 && r.empty())) {
        // r = lb*r - r[da]*z^(da-db)*b
        Integer top = r[static_cast<std::size_t>(da)];
        for (auto& c : r) c *= lb;
        ++scalings;
        for (int i = 0; i <= db; ++i)
            r[static_cast<std::size_t>(da - db + i)] -= top * b.coeff(i);
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.empty()) break;
        da = static_cast<int>(r.size()) - 1;
    }
    for (; scalings < needed; ++scalings)
        for (auto& c : r) c *= lb;
    return IPoly(std::move(r));
}

IPoly gcd(const IPoly& a, const IPoly& b) {
    if (a.is_zero() && b.is_zero()) return IPoly();
    if (a.is_zero()) return b.lc() < 0 ? -b : b;
    if (b.is_zero()) return a.lc() < 0 ? -a : a;
    Integer cont;
    mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    IPoly A = a.primitive_part();
    IPoly B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);
    // Modular certificate: if the images mod p keep their degrees and are
    // coprime over F_p, the true gcd is the content alone. This keeps the
    // (common) coprime case cheap for large-degree operands.
    if (B.degree() >= 1) {
        constexpr std::uint64_t kP = 2147483647ULL;  // 2^31 - 1
        FpPoly fa = fp_reduce(A, kP);
        FpPoly fb = fp_reduce(B, kP);
        if (fp_degree(fa) == A.degree() && fp_degree(fb) == B.degree() &&
            fp_gcd(fa, fb, kP).size() == 1)
            return IPoly(cont);
    }
    // Subresultant PRS (Cohen, Alg. 3.3.1).
    Integer g(1), h(1);
    while (true) {
        int delta = A.degree() - B.degree();
        IPoly R = prem(A, B);
        if (R.is_zero()) break;
        if (R.degree() == 0) {
            B = IPoly(Integer(1));
            break;
        }
        A = B;
        Integer ghd = g;
        for (int i = 1; i < delta; ++i) ghd *= h;
        if (delta >= 1)
            ghd *= h;  // g * h^delta
        else
            ghd = g;
        B = R.div_scalar_exact(ghd);
        g = A.lc();
        // h = h^(1-delta) * g^delta
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            Integer gp(1);
            for (int i = 0; i < delta; ++i) gp *= g;
            Integer hp(1);
            for (int i = 0; i < delta - 1; ++i) hp *= h;
            assert(mpz_divisible_p(gp.get_mpz_t(), hp.get_mpz_t()));
            mpz_divexact(h.get_mpz_t(), gp.get_mpz_t(), hp.get_mpz_t());
        }
        if (B.degree() == 0) {
            B = IPoly(Integer(1));
            break;
        }
    }
    return B.primitive_part().mul_scalar(cont);
}

bool try_divexact(const IPoly& a, const IPoly& b, IPoly& quotient) {
    assert(!b.is_zero());
    if (a.is_zero()) {
        quotient = IPoly();
        return true;
    }
    if (a.degree() < b.degree()) return false;
    std::vector<Integer> r = a.coeffs();
    std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Integer(0));
    const int db = b.degree();
    const Integer& lb = b.lc();
    for (int i = a.degree() - db; i >= 0; --i) {
        Integer& top = r[static_cast<std::size_t>(i + db)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
        Integer qc;
        mpz_divexact(qc.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        q[static_cast<std::size_t>(i)] = qc;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i + j)] -= qc * b.coeff(j);
    }
    for (const auto& c : r)
        if (c != 0) return false;
    quotient = IPoly(std::move(q));
    return true;
}

IPoly divexact(const IPoly& a, const IPoly& b) {
    IPoly q;
    bool ok = try_divexact(a, b, q);
    assert(ok);
    (void)ok;
    return q;
}

}  // namespace diffnev
