#include "diffnev/nevanlinna.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "diffnev/classifier.hpp"
#include "diffnev/errors.hpp"

namespace diffnev {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

// ---------------------------------------------------------------------------
// log-polar arithmetic

LogPolar logpolar_of(Complex v) {
    if (v == Complex(0.0, 0.0)) return {kNegInf, 0.0};
    return {std::log(std::abs(v)), std::arg(v)};
}

Complex to_complex(const LogPolar& v) {
    return std::polar(std::exp(v.logmag), v.arg);
}

LogPolar logpolar_add(const LogPolar& a, const LogPolar& b) {
    if (a.logmag == kNegInf) return b;
    if (b.logmag == kNegInf) return a;
    const LogPolar& big = a.logmag >= b.logmag ? a : b;
    const LogPolar& small = a.logmag >= b.logmag ? b : a;
    // s = 1 + e^{small - big}; the exponent has nonpositive real part.
    Complex s = 1.0 + std::polar(std::exp(small.logmag - big.logmag),
                                 small.arg - big.arg);
    if (s == Complex(0.0, 0.0)) return {kNegInf, 0.0};
    return {big.logmag + std::log(std::abs(s)), big.arg + std::arg(s)};
}

LogPolar logpolar_sub(const LogPolar& a, const LogPolar& b) {
    return logpolar_add(a, {b.logmag, b.arg + kPi});
}

LogPolar logpolar_sub_const(const LogPolar& f, Complex a) {
    if (a == Complex(0.0, 0.0)) return f;
    return logpolar_sub(f, logpolar_of(a));
}

// ---------------------------------------------------------------------------
// numeric evaluation of the exact layer

Complex eval_complex(const ZPoly& p, Complex z) {
    if (p.is_zero()) return Complex(0.0, 0.0);
    Complex acc(0.0, 0.0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * z + p.coeff(i).get_d();
    return acc;
}

Complex eval_complex(const RatFunc& g, Complex z) {
    return eval_complex(g.num(), z) / eval_complex(g.den(), z);
}

namespace {

LogPolar logpolar_mul(const LogPolar& a, const LogPolar& b) {
    if (a.logmag == kNegInf || b.logmag == kNegInf) return {kNegInf, 0.0};
    return {a.logmag + b.logmag, a.arg + b.arg};
}

LogPolar horner_logpolar(const WPoly& p, const LogPolar& w,
                         const std::function<Complex(const RatFunc&)>& coeff_value) {
    if (p.is_zero()) return {kNegInf, 0.0};
    LogPolar acc{kNegInf, 0.0};
    for (int i = p.degree(); i >= 0; --i) {
        acc = logpolar_mul(acc, w);
        RatFunc c = p.coeff(i);
        if (!c.is_zero()) acc = logpolar_add(acc, logpolar_of(coeff_value(c)));
    }
    return acc;
}

}  // namespace

LogPolar eval_logpolar(const WRat& R, Complex z, const LogPolar& w) {
    auto at_z = [&](const RatFunc& c) { return eval_complex(c, z); };
    LogPolar n = horner_logpolar(R.num(), w, at_z);
    LogPolar d = horner_logpolar(R.den(), w, at_z);
    return {n.logmag - d.logmag, n.arg - d.arg};
}

LogPolar eval_logpolar_const(const WPoly& H, const LogPolar& w) {
    auto constant = [](const RatFunc& c) { return eval_complex(c, Complex(0.0, 0.0)); };
    return horner_logpolar(H, w, constant);
}

// ---------------------------------------------------------------------------
// solution catalog

namespace {

// All z with c*2^z = u and |z| <= r, for each u in us (u = 0 entries are
// skipped: c*2^z never vanishes). z = (log|u/c| + i(Arg(u/c) + 2*pi*j))/ln 2.
std::vector<ZeroPoint> branches_of_pow2(double c, const std::vector<std::pair<Complex, int>>& us,
                                        double r) {
    std::vector<ZeroPoint> out;
    const double span = r * kLn2;
    for (const auto& [u, mult] : us) {
        if (u == Complex(0.0, 0.0)) continue;
        Complex q = u / c;
        double x = std::log(std::abs(q)) / kLn2;
        if (std::abs(x) > r) continue;
        double base = std::arg(q);
        long jlo = static_cast<long>(std::ceil((-span - base) / (2 * kPi))) - 1;
        long jhi = static_cast<long>(std::floor((span - base) / (2 * kPi))) + 1;
        for (long j = jlo; j <= jhi; ++j) {
            double y = (base + 2 * kPi * static_cast<double>(j)) / kLn2;
            Complex z(x, y);
            if (std::abs(z) <= r) out.push_back({z, mult});
        }
    }
    return out;
}

// u-plane solutions of e^u = a with |u| <= ubound.
std::vector<std::pair<Complex, int>> exp_inverse(Complex a, double ubound) {
    std::vector<std::pair<Complex, int>> us;
    double x = std::log(std::abs(a));
    double base = std::arg(a);
    if (std::abs(x) > ubound) return us;
    long klo = static_cast<long>(std::ceil((-ubound - base) / (2 * kPi))) - 1;
    long khi = static_cast<long>(std::floor((ubound - base) / (2 * kPi))) + 1;
    for (long k = klo; k <= khi; ++k) {
        Complex u(x, base + 2 * kPi * static_cast<double>(k));
        if (std::abs(u) <= ubound) us.push_back({u, 1});
    }
    return us;
}

// u-plane solutions of 2cos u = a with |u| <= ubound. With v = e^{iu} this is
// v^2 - a v + 1 = 0; a = +-2 gives the double root v = a/2 and double zeros.
std::vector<std::pair<Complex, int>> cos_inverse(Complex a, double ubound) {
    Complex s = std::sqrt(a * a - 4.0);
    Complex v1 = (a + s) / 2.0, v2 = (a - s) / 2.0;
    std::vector<std::pair<Complex, int>> vs;
    if (std::abs(v1 - v2) < 1e-12)
        vs.push_back({v1, 2});
    else {
        vs.push_back({v1, 1});
        vs.push_back({v2, 1});
    }
    std::vector<std::pair<Complex, int>> us;
    for (const auto& [v, mult] : vs) {
        // iu = log v, so u = (Arg v + 2*pi*k) - i log|v|.
        double im = -std::log(std::abs(v));
        double base = std::arg(v);
        if (std::abs(im) > ubound) continue;
        long klo = static_cast<long>(std::ceil((-ubound - base) / (2 * kPi))) - 1;
        long khi = static_cast<long>(std::floor((ubound - base) / (2 * kPi))) + 1;
        for (long k = klo; k <= khi; ++k) {
            Complex u(base + 2 * kPi * static_cast<double>(k), im);
            if (std::abs(u) <= ubound) us.push_back({u, mult});
        }
    }
    return us;
}

}  // namespace

SolutionHandle solution_exp2(double c) {
    SolutionHandle h;
    h.name = "exp2";
    // R(z, w) = w^2: exp(c*2^{z+1}) = exp(c*2^z)^2.
    h.equation = WRat(WPoly::variable()) * WRat(WPoly::variable());
    h.evaluator = [c](Complex z) -> LogPolar {
        Complex u = c * std::exp(z * kLn2);
        return {u.real(), u.imag()};
    };
    h.zero_oracle = [c](const Target& a, double r) -> std::optional<std::vector<ZeroPoint>> {
        if (!a) return std::vector<ZeroPoint>{};                       // entire
        if (*a == Complex(0.0, 0.0)) return std::vector<ZeroPoint>{};  // omitted
        double ubound = c * std::exp2(r);
        return branches_of_pow2(c, exp_inverse(*a, ubound), r);
    };
    return h;
}

SolutionHandle solution_cos2(double c) {
    SolutionHandle h;
    h.name = "cos2";
    // R(z, w) = w^2 - 2: 2cos(2u) = (2cos u)^2 - 2.
    h.equation = WRat(WPoly::variable()) * WRat(WPoly::variable()) - WRat(WPoly(RatFunc(2)));
    h.evaluator = [c](Complex z) -> LogPolar {
        Complex u = c * std::exp(z * kLn2);
        // 2cos u = e^{iu} + e^{-iu}.
        Complex iu = Complex(0.0, 1.0) * u;
        LogPolar p1{iu.real(), iu.imag()};
        LogPolar p2{-iu.real(), -iu.imag()};
        return logpolar_add(p1, p2);
    };
    h.zero_oracle = [c](const Target& a, double r) -> std::optional<std::vector<ZeroPoint>> {
        if (!a) return std::vector<ZeroPoint>{};  // entire
        double ubound = c * std::exp2(r);
        return branches_of_pow2(c, cos_inverse(*a, ubound), r);
    };
    return h;
}

SolutionHandle solution_identity() {
    SolutionHandle h;
    h.name = "identity";
    // R(z, w) = w^2 - z^2 + z + 1 fixes f(z) = z: z+1 = z^2 - z^2 + z + 1.
    std::vector<Rational> poly = {Rational(1), Rational(1), Rational(-1)};  // 1 + z - z^2
    WPoly num({RatFunc(ZPoly(poly)), RatFunc(0), RatFunc(1)});
    h.equation = WRat(std::move(num));
    h.evaluator = [](Complex z) { return logpolar_of(z); };
    h.zero_oracle = [](const Target& a, double r) -> std::optional<std::vector<ZeroPoint>> {
        if (!a) return std::vector<ZeroPoint>{};  // entire
        std::vector<ZeroPoint> zs;
        if (std::abs(*a) <= r) zs.push_back({*a, 1});
        return zs;
    };
    return h;
}

SolutionHandle solution_exp() {
    SolutionHandle h;
    h.name = "exp";
    // Classic control; e^{z+1} = e * e^z is not rational over Q(z), so no
    // equation is attached.
    h.evaluator = [](Complex z) -> LogPolar { return {z.real(), z.imag()}; };
    h.zero_oracle = [](const Target& a, double r) -> std::optional<std::vector<ZeroPoint>> {
        if (!a) return std::vector<ZeroPoint>{};
        if (*a == Complex(0.0, 0.0)) return std::vector<ZeroPoint>{};
        std::vector<ZeroPoint> zs;
        double x = std::log(std::abs(*a));
        double base = std::arg(*a);
        long klo = static_cast<long>(std::ceil((-r - base) / (2 * kPi))) - 1;
        long khi = static_cast<long>(std::floor((r - base) / (2 * kPi))) + 1;
        for (long k = klo; k <= khi; ++k) {
            Complex z(x, base + 2 * kPi * static_cast<double>(k));
            if (std::abs(z) <= r) zs.push_back({z, 1});
        }
        return zs;
    };
    return h;
}

SolutionHandle solution_constant(Complex c) {
    SolutionHandle h;
    h.name = "constant";
    h.evaluator = [c](Complex) { return logpolar_of(c); };
    h.zero_oracle = [c](const Target& a, double) -> std::optional<std::vector<ZeroPoint>> {
        if (!a) return std::vector<ZeroPoint>{};
        if (*a == c) return std::nullopt;  // f - a vanishes identically
        return std::vector<ZeroPoint>{};
    };
    return h;
}

SolutionHandle shift_solution(const SolutionHandle& f, long k) {
    SolutionHandle h;
    h.name = f.name + "_shift" + std::to_string(k);
    if (f.equation) h.equation = f.equation->shift_z(k);
    double kd = static_cast<double>(k);
    auto base_eval = f.evaluator;
    h.evaluator = [base_eval, kd](Complex z) { return base_eval(z + kd); };
    auto base_oracle = f.zero_oracle;
    if (base_oracle)
        h.zero_oracle = [base_oracle, kd](const Target& a, double r)
            -> std::optional<std::vector<ZeroPoint>> {
            auto zs = base_oracle(a, r + std::abs(kd));
            if (!zs) return std::nullopt;
            std::vector<ZeroPoint> out;
            for (const auto& p : *zs) {
                Complex w = p.z - kd;
                if (std::abs(w) <= r) out.push_back({w, p.mult});
            }
            return out;
        };
    return h;
}

// ---------------------------------------------------------------------------
// quadrature

namespace {

// Fixed-order compensated (Kahan) accumulator: bit-stable sums regardless of
// how the surrounding rows are scheduled.
struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

double integrand_logplus(const SolutionHandle& f, double r, const Target& a,
                         double theta) {
    LogPolar v = f.evaluator(std::polar(r, theta));
    double lm;
    if (!a)
        lm = v.logmag;
    else
        lm = -logpolar_sub_const(v, *a).logmag;
    if (!std::isfinite(lm)) {
        // A sample landed exactly on a zero/pole; nudge off the node. The
        // singularity is integrable, only the point value is unusable.
        LogPolar w = f.evaluator(std::polar(r, theta + 1e-9));
        lm = !a ? w.logmag : -logpolar_sub_const(w, *a).logmag;
        if (!std::isfinite(lm)) throw NonConvergent("integrand singular on the circle");
    }
    return std::max(lm, 0.0);
}

// Local bisection of one interval whose endpoint samples jumped by more than
// the spike threshold; returns the mean-correction against the straight
// trapezoid on [t0, t1].
double refine_interval(const SolutionHandle& f, double r, const Target& a,
                       double t0, double g0, double t1, double g1,
                       double coarse, double tol, int depth) {
    double tm = 0.5 * (t0 + t1);
    double gm = integrand_logplus(f, r, a, tm);
    double left = 0.25 * (t1 - t0) * (g0 + gm);
    double right = 0.25 * (t1 - t0) * (gm + g1);
    double fine = left + right;
    if (depth <= 0 || std::abs(fine - coarse) < tol) return fine - coarse;
    double corr = fine - coarse;
    corr += refine_interval(f, r, a, t0, g0, tm, gm, left, tol / 2, depth - 1);
    corr += refine_interval(f, r, a, tm, gm, t1, g1, right, tol / 2, depth - 1);
    return corr;
}

}  // namespace

double proximity(const SolutionHandle& f, double r, const Target& a,
                 const QuadratureConfig& cfg) {
    if (r <= 0) throw DegenerateInput("proximity: r must be positive");
    int n = std::max(cfg.nodes, 64);
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        g[static_cast<std::size_t>(i)] = integrand_logplus(f, r, a, 2 * kPi * i / n);
    KahanSum total;
    for (double v : g) total.add(v);
    // Periodic trapezoid rule: the mean of the samples.
    double mean = total.s / n;
    bool converged = false;
    for (int level = 0; level < cfg.refine_depth; ++level) {
        // Doubling the grid keeps all old nodes; only midpoints are new.
        std::vector<double> mid(static_cast<std::size_t>(n));
        KahanSum ms;
        for (int i = 0; i < n; ++i) {
            double v = integrand_logplus(f, r, a, 2 * kPi * (i + 0.5) / n);
            mid[static_cast<std::size_t>(i)] = v;
            ms.add(v);
        }
        double next = (total.s + ms.s) / (2 * n);
        bool close = std::abs(next - mean) < cfg.tolerance;
        mean = next;
        std::vector<double> merged(static_cast<std::size_t>(2 * n));
        for (int i = 0; i < n; ++i) {
            merged[static_cast<std::size_t>(2 * i)] = g[static_cast<std::size_t>(i)];
            merged[static_cast<std::size_t>(2 * i + 1)] = mid[static_cast<std::size_t>(i)];
        }
        g = std::move(merged);
        total = KahanSum();
        for (double v : g) total.add(v);
        n *= 2;
        if (close) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw NonConvergent("proximity: refine_depth exhausted at tolerance " +
                            std::to_string(cfg.tolerance));
    // Spike pass: bisect intervals whose endpoints still jump by more than
    // the spike threshold (near-circle zeros produce integrable log spikes
    // that uniform doubling resolves slowly).
    const double spike = 1.0;
    const double h = 2 * kPi / n;
    KahanSum corr;
    for (int i = 0; i < n; ++i) {
        double g0 = g[static_cast<std::size_t>(i)];
        double g1 = g[static_cast<std::size_t>((i + 1) % n)];
        if (std::abs(g1 - g0) <= spike) continue;
        double t0 = h * i, t1 = h * (i + 1);
        double coarse = 0.5 * h * (g0 + g1);
        corr.add(refine_interval(f, r, a, t0, g0, t1, g1, coarse,
                                 cfg.tolerance * h, 20));
    }
    return mean + corr.s / (2 * kPi);
}

// ---------------------------------------------------------------------------
// counting

namespace {

double weighted_count(const std::vector<ZeroPoint>& zs, double r) {
    KahanSum acc;
    for (const auto& p : zs) {
        double az = std::abs(p.z);
        if (az > r) continue;
        double w = az < 1e-12 ? std::log(r) : std::log(r / az);
        acc.add(p.mult * w);
    }
    return acc.s;
}

// Winding number of F = f - a (or 1/f for a = inf) along the rectangle
// boundary, by phase tracking with adaptive edge refinement.
struct PhaseWalker {
    const SolutionHandle& f;
    const Target& a;
    int evals = 0;

    double phase(Complex z) {
        ++evals;
        LogPolar v = f.evaluator(z);
        if (!a) return -v.arg;  // 1/f: poles of f are its zeros
        return logpolar_sub_const(v, *a).arg;
    }

    static double wrap(double d) {
        while (d > kPi) d -= 2 * kPi;
        while (d < -kPi) d += 2 * kPi;
        return d;
    }

    double segment(Complex z0, double p0, Complex z1, double p1, int depth) {
        double d = wrap(p1 - p0);
        if (std::abs(d) < kPi / 2) return d;
        if (depth <= 0)
            throw WindingUnstable("phase jump unresolved; zero on or near the contour");
        Complex zm = 0.5 * (z0 + z1);
        double pm = phase(zm);
        return segment(z0, p0, zm, pm, depth - 1) + segment(zm, pm, z1, p1, depth - 1);
    }

    long winding(Complex corner, double size) {
        std::vector<Complex> pts;
        const int per_edge = 8;
        Complex cs[4] = {corner, corner + Complex(size, 0),
                         corner + Complex(size, size), corner + Complex(0, size)};
        for (int e = 0; e < 4; ++e) {
            Complex from = cs[e], to = cs[(e + 1) % 4];
            for (int i = 0; i < per_edge; ++i)
                pts.push_back(from + (to - from) * (static_cast<double>(i) / per_edge));
        }
        double total = 0.0;
        double p0 = phase(pts[0]);
        double prev = p0;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            double pi_ = phase(pts[i]);
            total += segment(pts[i - 1], prev, pts[i], pi_, 26);
            prev = pi_;
        }
        total += segment(pts.back(), prev, pts[0], p0, 26);
        return std::lround(total / (2 * kPi));
    }
};

}  // namespace

std::vector<ZeroPoint> zeros_by_winding(const SolutionHandle& f, const Target& a,
                                        double r) {
    PhaseWalker walker{f, a};
    struct Box {
        Complex corner;
        double size;
    };
    // Slightly irrational corner offset so subdivision lines dodge the
    // symmetric zero patterns the catalog tends to produce.
    const double eps = 7.3e-5 * r + 1.9e-7;
    std::vector<Box> work{{Complex(-r - eps, -r - 2 * eps), 2 * (r + 2 * eps)}};
    const double resolution = std::max(1e-5, 1e-6 * r);
    std::vector<ZeroPoint> found;
    while (!work.empty()) {
        Box b = work.back();
        work.pop_back();
        long n = 0;
        bool ok = false;
        for (int attempt = 0; attempt < 3 && !ok; ++attempt) {
            try {
                Box t = b;
                if (attempt > 0) {
                    // Jitter the contour away from a boundary zero.
                    double j = attempt * 3.1e-7 * b.size;
                    t.corner -= Complex(j, j);
                    t.size += 2 * j;
                }
                n = walker.winding(t.corner, t.size);
                ok = true;
            } catch (const WindingUnstable&) {
                if (attempt == 2) throw;
            }
        }
        if (n == 0) continue;
        if (b.size <= resolution) {
            Complex center = b.corner + Complex(b.size / 2, b.size / 2);
            found.push_back({center, static_cast<int>(n)});
            continue;
        }
        double half = b.size / 2;
        work.push_back({b.corner, half});
        work.push_back({b.corner + Complex(half, 0), half});
        work.push_back({b.corner + Complex(0, half), half});
        work.push_back({b.corner + Complex(half, half), half});
    }
    // A zero sitting on a subdivision line can be claimed by both sibling
    // boxes (the instability jitter widens the contour). Cluster the
    // candidates and recount each cluster with a single enclosing box.
    std::vector<ZeroPoint> merged;
    std::vector<bool> used(found.size(), false);
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (used[i]) continue;
        Complex centroid = found[i].z;
        int members = 1;
        for (std::size_t j = i + 1; j < found.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(found[j].z - centroid) < 6 * resolution) {
                used[j] = true;
                centroid = (centroid * static_cast<double>(members) + found[j].z) /
                           static_cast<double>(members + 1);
                ++members;
            }
        }
        if (members == 1) {
            merged.push_back(found[i]);
            continue;
        }
        double half = 8 * resolution;
        long n = 0;
        for (int attempt = 0; attempt < 3; ++attempt) {
            try {
                double j = attempt * 1.7e-2 * half;
                n = walker.winding(centroid - Complex(half + j, half + 1.3 * j),
                                   2 * (half + j));
                break;
            } catch (const WindingUnstable&) {
                if (attempt == 2) throw;
            }
        }
        if (n > 0) merged.push_back({centroid, static_cast<int>(n)});
    }
    std::vector<ZeroPoint> inside;
    for (const auto& p : merged)
        if (std::abs(p.z) <= r) inside.push_back(p);
    std::sort(inside.begin(), inside.end(), [](const ZeroPoint& x, const ZeroPoint& y) {
        if (x.z.real() != y.z.real()) return x.z.real() < y.z.real();
        return x.z.imag() < y.z.imag();
    });
    return inside;
}

double counting(const SolutionHandle& f, double r, const Target& a,
                CountingMode mode) {
    if (r <= 0) throw DegenerateInput("counting: r must be positive");
    if (mode != CountingMode::Winding && f.zero_oracle) {
        auto zs = f.zero_oracle(a, r);
        if (zs) return weighted_count(*zs, r);
        if (mode == CountingMode::Oracle)
            throw OracleUnavailable("zero oracle does not support this target");
    } else if (mode == CountingMode::Oracle) {
        throw OracleUnavailable("no zero oracle attached to " + f.name);
    }
    return weighted_count(zeros_by_winding(f, a, r), r);
}

// ---------------------------------------------------------------------------
// experiment harness

NevanlinnaRow characteristic(const SolutionHandle& f, double r,
                             const QuadratureConfig& cfg) {
    NevanlinnaRow row;
    row.r = r;
    row.m = proximity(f, r, std::nullopt, cfg);
    row.N = counting(f, r, std::nullopt);
    row.T = row.m + row.N;
    row.ratio = row.T > 0 ? row.m / row.T : 1.0;
    return row;
}

NevanlinnaRow target_row(const SolutionHandle& f, double r, const Target& a,
                         const QuadratureConfig& cfg) {
    NevanlinnaRow row;
    row.r = r;
    if (f.zero_oracle) {
        if (auto zs = f.zero_oracle(a, r + 1.0)) {
            for (const auto& p : *zs)
                if (std::abs(std::abs(p.z) - r) < 1e-6) {
                    r += 1e-4;  // integrable singularity, but fatal to fixed nodes
                    row.flags.push_back("r_perturbed");
                    break;
                }
        }
    }
    row.r = r;
    row.m = proximity(f, r, a, cfg);
    row.N = counting(f, r, a);
    row.T = row.m + row.N;
    row.ratio = row.T > 0 ? row.m / row.T : 1.0;
    return row;
}

int thread_budget(int rows) {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("DIFFNEV_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return std::max(1, std::min(rows, hw));
}

namespace {

// Row-parallel map: results land by index, so output is independent of
// scheduling; the first exception wins and is rethrown on the caller.
template <typename Fn>
void parallel_rows(int n, Fn&& fn) {
    int workers = thread_budget(n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto body = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

// Exactness gate for the classifier: only targets that are honestly rational
// in double precision can be checked symbolically.
std::optional<Rational> rational_target(Complex a) {
    if (a.imag() != 0.0) return std::nullopt;
    double x = a.real();
    for (long den = 1; den <= 64; ++den) {
        double scaled = x * static_cast<double>(den);
        double near = std::nearbyint(scaled);
        if (std::abs(scaled - near) < 1e-12) {
            Rational q(static_cast<long>(near), den);
            q.canonicalize();
            return q;
        }
    }
    return std::nullopt;
}

}  // namespace

DefectReport defect_experiment(const SolutionHandle& f, const Target& a,
                               const std::vector<double>& r_grid,
                               const QuadratureConfig& cfg,
                               bool allow_exceptional, double ratio_ceiling) {
    if (r_grid.empty()) throw DegenerateInput("defect_experiment: empty r grid");
    if (a && f.equation && f.equation->deg_w() >= 2) {
        if (auto q = rational_target(*a)) {
            auto verdict = is_shift_exceptional(*f.equation, RatFunc(ZPoly(*q)));
            if (verdict.is_exceptional && !allow_exceptional)
                throw DegenerateInput(
                    "target is shift-exceptional for the equation; pass the "
                    "override flag for a contrast run");
        }
    }
    DefectReport report;
    report.rows.resize(r_grid.size());
    parallel_rows(static_cast<int>(r_grid.size()), [&](int i) {
        report.rows[static_cast<std::size_t>(i)] =
            target_row(f, r_grid[static_cast<std::size_t>(i)], a, cfg);
    });
    double first = report.rows.front().ratio;
    double last = report.rows.back().ratio;
    report.pass = last < ratio_ceiling && last < first;
    return report;
}

std::vector<ValironRow> valiron_check(const SolutionHandle& f,
                                      const std::vector<double>& r_grid,
                                      const QuadratureConfig& cfg) {
    if (!f.equation || f.equation->deg_w() < 2)
        throw DegenerateInput("valiron_check: needs an attached equation with deg_w >= 2");
    const int d = f.equation->deg_w();
    SolutionHandle g = shift_solution(f, 1);
    std::vector<ValironRow> rows(r_grid.size());
    parallel_rows(static_cast<int>(r_grid.size()), [&](int i) {
        double r = r_grid[static_cast<std::size_t>(i)];
        ValironRow row;
        row.r = r;
        row.T_shift = characteristic(g, r, cfg).T;
        row.dT = d * characteristic(f, r, cfg).T;
        row.ratio = row.dT > 0 ? row.T_shift / row.dT : 0.0;
        rows[static_cast<std::size_t>(i)] = row;
    });
    return rows;
}

SteinmetzReport steinmetz_check(const SolutionHandle& f, const WPoly& H,
                                const std::vector<double>& r_grid,
                                const QuadratureConfig& cfg, double min_fraction) {
    if (H.is_zero() || H.degree() < 1)
        throw DegenerateInput("steinmetz_check: H must be nonconstant");
    for (const auto& c : H.coeffs())
        if (!c.is_zero() && !c.is_constant())
            throw DegenerateInput("steinmetz_check: H must have constant coefficients");
    if (!gcd_w(H, H.derivative()).is_constant())
        throw DegenerateInput("steinmetz_check: H must be squarefree");
    // Evaluator for H(f), fed to the proximity of 1/H(f) via target 0.
    SolutionHandle hf;
    hf.name = "H(" + f.name + ")";
    auto base = f.evaluator;
    hf.evaluator = [base, H](Complex z) { return eval_logpolar_const(H, base(z)); };
    SteinmetzReport report;
    report.rows.resize(r_grid.size());
    parallel_rows(static_cast<int>(r_grid.size()), [&](int i) {
        double r = r_grid[static_cast<std::size_t>(i)];
        SteinmetzRow row;
        row.r = r;
        double m_inf = proximity(f, r, std::nullopt, cfg);
        double m_h = proximity(hf, r, Target(Complex(0.0, 0.0)), cfg);
        row.lhs = m_inf + m_h;
        row.rhs = 3.0 * characteristic(f, r, cfg).T;
        row.holds = row.lhs <= row.rhs + 1e-9;
        report.rows[static_cast<std::size_t>(i)] = row;
    });
    int held = 0;
    for (const auto& row : report.rows) held += row.holds ? 1 : 0;
    report.hold_fraction = static_cast<double>(held) / static_cast<double>(report.rows.size());
    report.pass = report.hold_fraction >= min_fraction;
    return report;
}

FirstMainReport first_main_check(const SolutionHandle& f, Complex a,
                                 const std::vector<double>& r_grid,
                                 const QuadratureConfig& cfg, double slack) {
    if (r_grid.size() < 3)
        throw DegenerateInput("first_main_check: need at least three radii");
    FirstMainReport report;
    report.rows.resize(r_grid.size());
    parallel_rows(static_cast<int>(r_grid.size()), [&](int i) {
        double r = r_grid[static_cast<std::size_t>(i)];
        FirstMainRow row;
        row.r = r;
        row.T_a = target_row(f, r, Target(a), cfg).T;
        row.T = characteristic(f, r, cfg).T;
        row.dev = std::abs(row.T_a - row.T);
        report.rows[static_cast<std::size_t>(i)] = row;
    });
    for (const auto& row : report.rows) report.max_dev = std::max(report.max_dev, row.dev);
    std::size_t n = report.rows.size();
    std::size_t third = std::max<std::size_t>(1, n / 3);
    double head = 0.0, tail = 0.0;
    for (std::size_t i = 0; i < third; ++i) head = std::max(head, report.rows[i].dev);
    for (std::size_t i = n - third; i < n; ++i) tail = std::max(tail, report.rows[i].dev);
    double t_max = report.rows.back().T;
    report.pass = tail <= head + slack * std::max(t_max, 1.0);
    return report;
}

}  // namespace diffnev
