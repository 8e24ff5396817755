#include "diffnev/composition.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "diffnev/bpoly.hpp"
#include "diffnev/errors.hpp"

namespace diffnev {

namespace {

// A rational map held as lambda * U / V with U, V primitive integer
// bivariate polynomials and lambda the exact Q(z) unit. All chain steps run
// on this representation: integer arithmetic only, no mid-flight gcds.
struct MapState {
    BPoly U, V;
    RatFunc lambda;
};

MapState identity_state() {
    return {BPoly::variable(), BPoly(IPoly(Integer(1))), RatFunc(1)};
}

MapState to_state(const WRat& r) {
    MapState s;
    RatFunc sn, sd;
    s.U = BPoly::from_wpoly_scaled(r.num(), sn);
    s.V = BPoly::from_wpoly_scaled(r.den(), sd);
    s.lambda = sn / sd;
    return s;
}

WRat to_wrat(const MapState& s) {
    if (s.U.is_zero()) return WRat();
    return WRat::from_reduced(s.U.to_wpoly().mul_scalar(s.lambda), s.V.to_wpoly());
}

void shift_state(MapState& s, long n) {
    s.U = s.U.shift_z(n);
    s.V = s.V.shift_z(n);
    s.lambda = s.lambda.shift(n);
}

// Strip the Z[z] content (signed so the leading coefficient stays positive);
// returns the content so the caller can keep the ratio exact.
BPoly strip_content(const BPoly& p, IPoly& content) {
    assert(!p.is_zero());
    content = p.content_z();
    if (p.lc().lc() < 0) content = -content;
    std::vector<IPoly> r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = p.coeffs()[i].is_zero() ? IPoly() : divexact(p.coeffs()[i], content);
    return BPoly(std::move(r));
}

// outer(s), where s = lambda * U / V. Substituting into P/Q homogeneously,
//   P(s) / Q(s) = sum p_i (lambda U)^i V^(d-i)  /  sum q_i (lambda U)^i V^(d-i),
// and the two sums are coprime in Q(z)[w] whenever gcd(P,Q) = gcd(U,V) = 1:
// a common root w0 with V(w0) != 0 would give a common root of P and Q,
// while V(w0) = 0 forces U(w0) != 0 and leaves the lead term p_d U^d (or
// exposes a denominator that vanishes to higher order), never both sums.
MapState compose_step(const WRat& outer, const MapState& s) {
    const int d = outer.deg_w();
    assert(d >= 1);

    // Fold lambda^i into the outer coefficients, then clear denominators.
    std::vector<RatFunc> pc(static_cast<std::size_t>(d) + 1);
    std::vector<RatFunc> qc(static_cast<std::size_t>(d) + 1);
    RatFunc lam_pow(1);
    for (int i = 0; i <= d; ++i) {
        pc[static_cast<std::size_t>(i)] = outer.num().coeff(i) * lam_pow;
        qc[static_cast<std::size_t>(i)] = outer.den().coeff(i) * lam_pow;
        if (i < d) lam_pow = lam_pow * s.lambda;
    }
    RatFunc sp, sq;
    BPoly Pb = BPoly::from_wpoly_scaled(WPoly(std::move(pc)), sp);
    BPoly Qb = BPoly::from_wpoly_scaled(WPoly(std::move(qc)), sq);

    // Homogeneous monomials U^i V^(d-i).
    std::vector<BPoly> upow(static_cast<std::size_t>(d) + 1);
    std::vector<BPoly> vpow(static_cast<std::size_t>(d) + 1);
    upow[0] = BPoly(IPoly(Integer(1)));
    vpow[0] = upow[0];
    for (int i = 1; i <= d; ++i) {
        upow[static_cast<std::size_t>(i)] = upow[static_cast<std::size_t>(i - 1)] * s.U;
        vpow[static_cast<std::size_t>(i)] = vpow[static_cast<std::size_t>(i - 1)] * s.V;
    }
    BPoly N, D;
    for (int i = 0; i <= d; ++i) {
        const BPoly mono = upow[static_cast<std::size_t>(i)] *
                           vpow[static_cast<std::size_t>(d - i)];
        if (!Pb.coeff(i).is_zero()) N = N + mono.mul_coeff(Pb.coeff(i));
        if (!Qb.coeff(i).is_zero()) D = D + mono.mul_coeff(Qb.coeff(i));
    }
    assert(!D.is_zero());

    MapState out;
    IPoly gn(Integer(1)), gd(Integer(1));
    out.U = N.is_zero() ? BPoly() : strip_content(N, gn);
    out.V = strip_content(D, gd);
    out.lambda = sp * RatFunc(ZPoly::from_integer(gn)) /
                 (sq * RatFunc(ZPoly::from_integer(gd)));
#ifndef NDEBUG
    if (!out.U.is_zero() && !out.U.is_constant_w() && !out.V.is_constant_w())
        assert(certify_coprime(out.U, out.V) || gcd_bi(out.U, out.V).is_constant_w());
#endif
    return out;
}

long pow_long(long base, int exp) {
    long r = 1;
    for (int i = 0; i < exp; ++i) {
        assert(r <= (1L << 61) / base && "degree overflow");
        r *= base;
    }
    return r;
}

MapState chain_state(const WRat& R, int k) {
    MapState s = identity_state();
    for (int j = 0; j < k; ++j) {
        shift_state(s, -1);  // sigma^{-1} of the previous chain
        s = compose_step(R, s);
    }
    return s;
}

}  // namespace

WRat compose(const WRat& outer, const WRat& inner) {
    assert(outer.deg_w() >= 1);
    return to_wrat(compose_step(outer, to_state(inner)));
}

CompositionChain compose_chain(const WRat& R, int k, bool forward) {
    assert(R.deg_w() >= 1 && k >= 0);
    CompositionChain chain;
    chain.base = R;
    chain.depth = k;
    chain.forward = forward;
    chain.value = to_wrat(chain_state(R, k));
    if (forward && k >= 1) chain.value = chain.value.shift_z(k - 1);
    assert(chain.value.deg_w() == pow_long(R.deg_w(), k) && "degree law violated");
    return chain;
}

MultiplicityProfile multiplicity_profile(const WRat& R, int k) {
    CompositionChain chain = compose_chain(R, k);
    MultiplicityProfile prof;
    prof.degree = pow_long(R.deg_w(), k);
    const WPoly& Qk = chain.value.den();
    if (Qk.is_constant()) {
        prof.e0 = prof.degree;
        prof.ek = prof.degree;
        return prof;
    }
    prof.factors = squarefree_decomposition(Qk);
    prof.e0 = prof.degree - Qk.degree();
    prof.ek = prof.e0;
    long mass = 0;
    for (const auto& [H, e] : prof.factors) {
        prof.ek = std::max(prof.ek, static_cast<long>(e));
        mass += static_cast<long>(e) * H.degree();
    }
    assert(mass == Qk.degree() && "factorization does not account for deg Qk");
    return prof;
}

std::vector<SpreadRow> spread_sequence(const WRat& R, int kmax) {
    assert(R.deg_w() >= 1 && kmax >= 1);
    if (compose_chain(R, 2).value.is_polynomial())
        throw PolynomialComposite();
    const long d = R.deg_w();
    std::vector<SpreadRow> rows;
    MapState s = identity_state();
    long dk = 1;
    for (int k = 1; k <= kmax; ++k) {
        shift_state(s, -1);
        s = compose_step(R, s);
        dk *= d;
        const long degQ = s.V.is_constant_w() ? 0 : s.V.degree_w();
        SpreadRow row;
        row.k = k;
        row.degree = dk;
        row.e0 = dk - degQ;
        // ek needs only the multiplicities, which Yun delivers without the
        // (much costlier) irreducible splitting of each squarefree part.
        row.ek = row.e0;
        if (!s.V.is_constant_w())
            for (const auto& [part, mult] : yun_squarefree(s.V))
                row.ek = std::max(row.ek, static_cast<long>(mult));
        Rational ratio(row.ek, dk);
        ratio.canonicalize();
        row.ratio = ratio;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<WPoly> squarefree_layers(const WPoly& Qk) {
    assert(!Qk.is_zero());
    if (Qk.is_constant()) return {};
    auto parts = yun_squarefree(BPoly::from_wpoly(Qk));
    int emax = 0;
    for (const auto& [part, mult] : parts) emax = std::max(emax, mult);
    std::vector<WPoly> layers(static_cast<std::size_t>(emax), WPoly(1));
    for (const auto& [part, mult] : parts) {
        WPoly p = part.to_wpoly().monic();
        for (int i = 0; i < mult; ++i)
            layers[static_cast<std::size_t>(i)] = layers[static_cast<std::size_t>(i)] * p;
    }
    return layers;
}

namespace {

// w^D * p(1/w): the coordinate swap used at infinity.
WPoly reverse_pad(const WPoly& p, int D) {
    std::vector<RatFunc> c(static_cast<std::size_t>(D) + 1);
    for (int j = 0; j <= D; ++j) c[static_cast<std::size_t>(j)] = p.coeff(D - j);
    return WPoly(std::move(c));
}

}  // namespace

int ramification_at(const WRat& R, const std::optional<RatFunc>& g) {
    assert(R.deg_w() >= 1);
    if (g) {
        RatFunc dval = R.den().eval(*g);
        if (dval.is_zero()) {
            // R(g) = infinity: the pole order is the local multiplicity
            // (num(g) != 0 because the pair is coprime).
            return R.den().root_multiplicity(*g);
        }
        RatFunc v = R.num().eval(*g) / dval;
        WPoly diff = R.num() - R.den().mul_scalar(v);
        return diff.root_multiplicity(*g);
    }
    auto v = R.eval_at_infinity();
    if (!v) return R.num().degree() - R.den().degree();  // pole order at infinity
    const int D = R.deg_w();
    WRat swapped(reverse_pad(R.num(), D), reverse_pad(R.den(), D));  // R(1/w)
    WPoly diff = swapped.num() - swapped.den().mul_scalar(*v);
    return diff.root_multiplicity(RatFunc(0)) -
           swapped.den().root_multiplicity(RatFunc(0));
}

ExceptionalCycleData exceptional_cycle_data(const WRat& R, int search_bound) {
    assert(R.deg_w() >= 1 && search_bound >= 1);
    MapState s = identity_state();
    for (int j = 1; j <= search_bound; ++j) {
        shift_state(s, -1);
        s = compose_step(R, s);
        const int du = s.U.is_constant_w() ? 0 : s.U.degree_w();
        const int dv = s.V.is_constant_w() ? 0 : s.V.degree_w();
        if (du > dv) {  // the depth-j chain maps infinity to infinity
            ExceptionalCycleData data;
            data.m = j;
            data.ramification = ramification_at(to_wrat(s), std::nullopt);
            data.E = std::pow(static_cast<double>(data.ramification), 1.0 / j);
            return data;
        }
    }
    return {};
}

long rh_fiber_excess(const WRat& R) {
    MultiplicityProfile prof = multiplicity_profile(R, 1);
    long excess = 0;
    for (const auto& [H, e] : prof.factors)
        excess += static_cast<long>(H.degree()) * (e - 1);
    if (prof.e0 > 0) excess += prof.e0 - 1;
    return excess;
}

}  // namespace diffnev
