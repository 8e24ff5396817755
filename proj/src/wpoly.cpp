#include "diffnev/wpoly.hpp"

#include <algorithm>
#include <sstream>

#include "diffnev/bpoly.hpp"
#include "diffnev/errors.hpp"

namespace diffnev {

WPoly WPoly::operator-() const {
    std::vector<RatFunc> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return WPoly(std::move(r));
}

WPoly operator+(const WPoly& a, const WPoly& b) {
    std::vector<RatFunc> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return WPoly(std::move(r));
}

WPoly operator-(const WPoly& a, const WPoly& b) {
    std::vector<RatFunc> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] - b.c_[i];
    return WPoly(std::move(r));
}

WPoly operator*(const WPoly& a, const WPoly& b) {
    if (a.is_zero() || b.is_zero()) return WPoly();
    std::vector<RatFunc> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return WPoly(std::move(r));
}

WPoly WPoly::mul_scalar(const RatFunc& s) const {
    if (s.is_zero() || is_zero()) return WPoly();
    std::vector<RatFunc> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return WPoly(std::move(r));
}

WPoly WPoly::monic() const {
    assert(!is_zero());
    return mul_scalar(lc().inverse());
}

WPoly WPoly::derivative() const {
    if (c_.size() <= 1) return WPoly();
    std::vector<RatFunc> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i] * RatFunc(static_cast<long>(i));
    return WPoly(std::move(r));
}

WPoly WPoly::pow(unsigned n) const {
    WPoly acc(1);
    WPoly base = *this;
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

RatFunc WPoly::eval(const RatFunc& f) const {
    RatFunc acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * f + c_[i];
    return acc;
}

WPoly WPoly::shift_z(long n) const {
    std::vector<RatFunc> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].shift(n);
    return WPoly(std::move(r));
}

int WPoly::root_multiplicity(const RatFunc& a) const {
    assert(!is_zero());
    WPoly p = *this;
    WPoly lin(std::vector<RatFunc>{-a, RatFunc(1)});
    int m = 0;
    while (!p.is_zero() && p.eval(a).is_zero()) {
        auto [q, r] = divrem(p, lin);
        assert(r.is_zero());
        p = q;
        ++m;
    }
    return m;
}

std::pair<WPoly, WPoly> divrem(const WPoly& a, const WPoly& b) {
    assert(!b.is_zero());
    if (a.is_zero() || a.degree() < b.degree()) return {WPoly(), a};
    std::vector<RatFunc> r(a.coeffs());
    std::vector<RatFunc> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const int db = b.degree();
    auto top = [&r]() {
        while (!r.empty() && r.back().is_zero()) r.pop_back();
        return static_cast<int>(r.size()) - 1;
    };
    for (int i = top() - db; i >= 0; i = top() - db) {
        RatFunc qc = r[static_cast<std::size_t>(i + db)] / b.lc();
        q[static_cast<std::size_t>(i)] = qc;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i + j)] = r[static_cast<std::size_t>(i + j)] - qc * b.coeff(j);
        r.resize(static_cast<std::size_t>(i + db));  // leading term cancelled exactly
    }
    return {WPoly(std::move(q)), WPoly(std::move(r))};
}

WPoly gcd_w(const WPoly& a, const WPoly& b) {
    assert(!(a.is_zero() && b.is_zero()));
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    BPoly g = gcd_bi(BPoly::from_wpoly(a), BPoly::from_wpoly(b));
    if (g.is_constant_w()) return WPoly(1);
    return g.to_wpoly().monic();
}

namespace {

// Fraction-free (Bareiss) forward elimination on the first n columns of an
// n x cols matrix of integer polynomials. Entries stay exact minors, so no
// rational-function gcds occur mid-flight. Returns false when the matrix is
// singular; sign tracks row swaps for the determinant.
bool bareiss(std::vector<std::vector<IPoly>>& m, int n, int cols, int& sign) {
    IPoly prev(Integer(1));
    for (int k = 0; k < n; ++k) {
        int piv = k;
        while (piv < n && m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(k)].is_zero())
            ++piv;
        if (piv == n) return false;
        if (piv != k) {
            std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(k)]);
            sign = -sign;
        }
        const auto& pivot = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        for (int i = k + 1; i < n; ++i) {
            auto& row = m[static_cast<std::size_t>(i)];
            const IPoly lead = row[static_cast<std::size_t>(k)];
            for (int j = k + 1; j < cols; ++j) {
                IPoly t = pivot * row[static_cast<std::size_t>(j)] -
                          lead * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                row[static_cast<std::size_t>(j)] = t.is_zero() ? IPoly() : divexact(t, prev);
            }
            row[static_cast<std::size_t>(k)] = IPoly();
        }
        prev = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    return true;
}

RatFunc as_ratfunc(const IPoly& p) { return RatFunc(ZPoly::from_integer(p)); }

}  // namespace

RatFunc resultant(const WPoly& P, const WPoly& Q) {
    assert(!P.is_zero() && !Q.is_zero());
    const int d = P.degree();
    const int e = Q.degree();
    const int n = d + e;
    if (n == 0) return RatFunc(1);
    // Clear denominators: res(P, Q) = sP^e * sQ^d * res(Pb, Qb).
    RatFunc sp, sq;
    BPoly Pb = BPoly::from_wpoly_scaled(P, sp);
    BPoly Qb = BPoly::from_wpoly_scaled(Q, sq);
    std::vector<std::vector<IPoly>> m(static_cast<std::size_t>(n),
                                      std::vector<IPoly>(static_cast<std::size_t>(n)));
    for (int row = 0; row < e; ++row)
        for (int j = 0; j <= d; ++j)
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] = Pb.coeff(d - j);
    for (int row = 0; row < d; ++row)
        for (int j = 0; j <= e; ++j)
            m[static_cast<std::size_t>(e + row)][static_cast<std::size_t>(row + j)] = Qb.coeff(e - j);
    int sign = 1;
    if (!bareiss(m, n, n, sign)) return RatFunc();
    IPoly det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    if (sign < 0) det = -det;
    return sp.pow(e) * sq.pow(d) * as_ratfunc(det);
}

BezoutPair bezout(const WPoly& P, const WPoly& Q) {
    assert(!P.is_zero() && !Q.is_zero());
    const int d = P.degree();
    const int e = Q.degree();
    const int n = d + e;
    if (n == 0)
        return {WPoly(), WPoly(RatFunc(1) / Q.coeff(0)), RatFunc(1)};
    // Solve A'*Pb + B'*Qb = 1 for the denominator-cleared pair, then undo
    // the scaling: A = A'/sP, B = B'/sQ.
    RatFunc sp, sq;
    BPoly Pb = BPoly::from_wpoly_scaled(P, sp);
    BPoly Qb = BPoly::from_wpoly_scaled(Q, sq);
    // Row r (constant term first) of the identity; unknowns are the
    // coefficients of A' (degree < e) then B' (degree < d).
    std::vector<std::vector<IPoly>> m(static_cast<std::size_t>(n),
                                      std::vector<IPoly>(static_cast<std::size_t>(n) + 1));
    for (int row = 0; row < n; ++row) {
        for (int j = 0; j < e; ++j)
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] = Pb.coeff(row - j);
        for (int j = 0; j < d; ++j)
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(e + j)] = Qb.coeff(row - j);
        if (row == 0) m[0][static_cast<std::size_t>(n)] = IPoly(Integer(1));
    }
    int sign = 1;
    if (!bareiss(m, n, n + 1, sign))
        throw CommonFactor("bezout: resultant vanishes, inputs share a factor");
    IPoly det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    if (sign < 0) det = -det;
    // This layout lists the Q block after the P block, which relates its
    // determinant to the Sylvester convention by res(Q, P) = (-1)^{de} res(P, Q).
    if ((d & 1) && (e & 1)) det = -det;
    RatFunc res = sp.pow(e) * sq.pow(d) * as_ratfunc(det);

    // Back substitution over Q(z) on the triangular integer system.
    std::vector<RatFunc> x(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        RatFunc acc = as_ratfunc(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)]);
        for (int j = i + 1; j < n; ++j) {
            const IPoly& mij = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (mij.is_zero() || x[static_cast<std::size_t>(j)].is_zero()) continue;
            acc = acc - as_ratfunc(mij) * x[static_cast<std::size_t>(j)];
        }
        x[static_cast<std::size_t>(i)] =
            acc / as_ratfunc(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
    }
    std::vector<RatFunc> ac(static_cast<std::size_t>(std::max(e, 0)));
    std::vector<RatFunc> bc(static_cast<std::size_t>(std::max(d, 0)));
    RatFunc spi = sp.inverse(), sqi = sq.inverse();
    for (int j = 0; j < e; ++j) ac[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)] * spi;
    for (int j = 0; j < d; ++j) bc[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(e + j)] * sqi;
    return {WPoly(std::move(ac)), WPoly(std::move(bc)), res};
}

WRat::WRat(WPoly num, WPoly den) {
    if (den.is_zero()) throw DivisionByZero("WRat with zero denominator");
    if (num.is_zero()) {
        num_ = WPoly();
        den_ = WPoly(1);
        return;
    }
    if (!num.is_constant() && !den.is_constant()) {
        WPoly g = gcd_w(num, den);
        if (!g.is_constant()) {
            num = divrem(num, g).first;
            den = divrem(den, g).first;
        }
    }
    RatFunc inv = den.lc().inverse();
    num_ = num.mul_scalar(inv);
    den_ = den.mul_scalar(inv);
}

WRat WRat::from_reduced(WPoly num, WPoly den) {
    assert(!den.is_zero());
    WRat r;
    RatFunc inv = den.lc().inverse();
    r.num_ = num.mul_scalar(inv);
    r.den_ = den.mul_scalar(inv);
    return r;
}

int WRat::deg_w() const {
    if (num_.is_zero()) return den_.degree();
    return std::max(num_.degree(), den_.degree());
}

WRat operator+(const WRat& a, const WRat& b) {
    return WRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
WRat operator-(const WRat& a, const WRat& b) {
    return WRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
WRat operator*(const WRat& a, const WRat& b) { return WRat(a.num_ * b.num_, a.den_ * b.den_); }
WRat operator/(const WRat& a, const WRat& b) {
    if (b.is_zero()) throw DivisionByZero();
    return WRat(a.num_ * b.den_, a.den_ * b.num_);
}

WRat WRat::pow(long n) const {
    if (n < 0) {
        if (is_zero()) throw DivisionByZero();
        return WRat(den_, num_).pow(-n);
    }
    WRat acc(WPoly(1));
    WRat base = *this;
    unsigned long k = static_cast<unsigned long>(n);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::optional<RatFunc> WRat::eval(const RatFunc& f) const {
    RatFunc d = den_.eval(f);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(f) / d;
}

std::optional<RatFunc> WRat::eval_at_infinity() const {
    if (num_.is_zero()) return RatFunc(0);
    int dn = num_.degree(), dd = den_.degree();
    if (dn > dd) return std::nullopt;
    if (dn < dd) return RatFunc(0);
    return num_.lc() / den_.lc();
}

std::string to_string(const WPoly& p) {
    if (p.is_zero()) return "0";
    if (p.is_constant()) return to_string(p.coeff(0));
    std::ostringstream out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        RatFunc c = p.coeff(i);
        if (c.is_zero()) continue;
        std::string s = to_string(c);
        bool neg = false;
        if (!s.empty() && s[0] == '-' && s.find(' ') == std::string::npos) {
            neg = true;
            s = s.substr(1);
        }
        bool wrap = s.find(' ') != std::string::npos || s.find('/') != std::string::npos;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            out << (wrap ? "(" : "") << s << (wrap ? ")" : "");
        } else {
            if (s != "1") out << (wrap ? "(" : "") << s << (wrap ? ")" : "") << "*";
            out << "w";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

std::string to_string(const WRat& r) {
    if (r.is_polynomial()) return to_string(r.num());
    std::ostringstream out;
    std::string ns = to_string(r.num());
    std::string ds = to_string(r.den());
    bool wrap_num = ns.find_first_of(" /") != std::string::npos;
    bool wrap_den = ds.find_first_of(" /*") != std::string::npos;
    out << (wrap_num ? "(" : "") << ns << (wrap_num ? ")" : "");
    out << "/";
    out << (wrap_den ? "(" : "") << ds << (wrap_den ? ")" : "");
    return out.str();
}

}  // namespace diffnev
