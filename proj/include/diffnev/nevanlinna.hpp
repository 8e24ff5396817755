#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "diffnev/wpoly.hpp"

namespace diffnev {

using Complex = std::complex<double>;

// Value of a meromorphic function in log-polar form: f = exp(logmag + i*arg).
// log-space is mandatory: the catalog functions reach |f| ~ e^256 well inside
// the radii of interest, which no fixed-width float survives.
struct LogPolar {
    double logmag = 0.0;
    double arg = 0.0;
};

LogPolar logpolar_of(Complex v);
Complex to_complex(const LogPolar& v);  // may overflow; callers guard logmag
// log(e^a + e^b) and log(e^a - e^b), stable for arbitrary magnitudes.
LogPolar logpolar_add(const LogPolar& a, const LogPolar& b);
LogPolar logpolar_sub(const LogPolar& a, const LogPolar& b);
// log-polar of f - a for a finite constant target.
LogPolar logpolar_sub_const(const LogPolar& f, Complex a);

// A target value in C united with infinity; nullopt encodes infinity.
using Target = std::optional<Complex>;

// A zero (or pole) of f - a inside a disc, with multiplicity.
struct ZeroPoint {
    Complex z;
    int mult = 1;
};

// A concrete global solution of f(z+1) = R(z, f(z)) given by closed-form
// evaluation. zero_oracle(a, r) enumerates the solutions of f = a (poles for
// a = infinity) in |z| <= r, or nullopt when the target is unsupported.
struct SolutionHandle {
    std::string name;
    std::optional<WRat> equation;
    std::function<LogPolar(Complex)> evaluator;
    std::function<std::optional<std::vector<ZeroPoint>>(const Target&, double)> zero_oracle;
};

// Catalog (v1). Global closed forms only: backward iteration from a seed
// strip never leaves a half-plane and cannot feed centered discs.
SolutionHandle solution_exp2(double c = 1.0);     // exp(c*2^z), solves w^2
SolutionHandle solution_cos2(double c = 1.0);     // 2cos(c*2^z), solves w^2-2
SolutionHandle solution_identity();               // f(z)=z, solves w^2-z^2+z+1
SolutionHandle solution_exp();                    // e^z, classic control
SolutionHandle solution_constant(Complex c);      // f == c
// g(z) = f(z + k), sharing f's closed form and oracle.
SolutionHandle shift_solution(const SolutionHandle& f, long k);

struct QuadratureConfig {
    int nodes = 256;        // initial theta-samples (>= 64)
    int refine_depth = 14;  // doubling passes allowed past the initial grid
    double tolerance = 1e-6;
};

struct NevanlinnaRow {
    double r = 0.0;
    double m = 0.0;
    double N = 0.0;
    double T = 0.0;      // m + N by construction
    double ratio = 0.0;  // m / T
    std::vector<std::string> flags;
};

// m_f(r; a): trapezoidal quadrature of log+|1/(f-a)| (log+|f| for a = inf)
// on |z| = r, with node doubling until the inter-level change drops below
// cfg.tolerance. Throws NonConvergent when refine_depth is exhausted first.
double proximity(const SolutionHandle& f, double r, const Target& a,
                 const QuadratureConfig& cfg);

enum class CountingMode { Auto, Oracle, Winding };

// N_f(r; a) = sum over zeros of ord+ * log(r/|z|) (+ ord_0+ * log r).
// Oracle mode requires f.zero_oracle support; Winding counts zeros of f - a
// by the argument principle over a subdivided box cover of the disc.
double counting(const SolutionHandle& f, double r, const Target& a,
                CountingMode mode = CountingMode::Auto);

// The winding-number zero list itself, exposed for cross-validation against
// the semi-analytic oracles.
std::vector<ZeroPoint> zeros_by_winding(const SolutionHandle& f, const Target& a,
                                        double r);

// T_f(r) = m_f(r) + N_f(r) at target infinity.
NevanlinnaRow characteristic(const SolutionHandle& f, double r,
                             const QuadratureConfig& cfg);

// One row of a target-a experiment: m = m_f(r; a), N = N_f(r; a),
// T = T_f(r; a) = m + N, ratio = m / T (the defect ratio, by the First Main
// Theorem T_f(r; a) = T_f(r) + O(1)). Radii within 1e-6 of a zero of f - a
// are perturbed by +1e-4 and flagged.
NevanlinnaRow target_row(const SolutionHandle& f, double r, const Target& a,
                         const QuadratureConfig& cfg);

struct DefectReport {
    std::vector<NevanlinnaRow> rows;
    bool pass = false;
};

// Defect-decay experiment: the m/T column should decay along r_grid for an
// ordinary target. Exceptional targets (per the classifier) are rejected
// unless allow_exceptional is set for a contrast run. Verdict: final ratio
// below ratio_ceiling and below the ratio at the smallest r.
DefectReport defect_experiment(const SolutionHandle& f, const Target& a,
                               const std::vector<double>& r_grid,
                               const QuadratureConfig& cfg,
                               bool allow_exceptional = false,
                               double ratio_ceiling = 0.5);

struct ValironRow {
    double r = 0.0;
    double T_shift = 0.0;  // T_{f(.+1)}(r)
    double dT = 0.0;       // deg_w(R) * T_f(r)
    double ratio = 0.0;    // T_shift / dT
};

// Valiron-Mohon'ko trend: T_{R(z,f(z))}(r) = d*T_f(r) + S(f,r), via the
// shifted evaluator g(z) = f(z+1). Requires f.equation with deg_w >= 2.
std::vector<ValironRow> valiron_check(const SolutionHandle& f,
                                      const std::vector<double>& r_grid,
                                      const QuadratureConfig& cfg);

struct SteinmetzRow {
    double r = 0.0;
    double lhs = 0.0;  // m_f(r; inf) + m_{1/H(f)}(r)
    double rhs = 0.0;  // 3 * T_f(r)  (delta = 1)
    bool holds = false;
};

struct SteinmetzReport {
    std::vector<SteinmetzRow> rows;
    double hold_fraction = 0.0;
    bool pass = false;  // holds on at least min_fraction of the grid
};

// Steinmetz-type inequality with delta = 1. H must be squarefree with
// constant (in z) coefficients; isolated violating radii are reported, not failed, because
// the theorem excludes a finite-measure set of r.
SteinmetzReport steinmetz_check(const SolutionHandle& f, const WPoly& H,
                                const std::vector<double>& r_grid,
                                const QuadratureConfig& cfg,
                                double min_fraction = 0.9);

struct FirstMainRow {
    double r = 0.0;
    double T_a = 0.0;  // T_f(r; a)
    double T = 0.0;    // T_f(r)
    double dev = 0.0;  // |T_a - T|
};

struct FirstMainReport {
    std::vector<FirstMainRow> rows;
    double max_dev = 0.0;
    bool pass = false;  // bounded-difference test along the grid
};

// First Main Theorem: T_f(r; a) = T_f(r) + O_a(1). PASS when the deviation
// does not grow: last-third max <= first-third max + slack * T_f(r_max).
FirstMainReport first_main_check(const SolutionHandle& f, Complex a,
                                 const std::vector<double>& r_grid,
                                 const QuadratureConfig& cfg,
                                 double slack = 0.05);

// Numeric evaluation of the exact layer, for the functional-equation check
// f(z+1) = R(z, f(z)) and for building H(f) evaluators.
Complex eval_complex(const ZPoly& p, Complex z);
Complex eval_complex(const RatFunc& g, Complex z);
LogPolar eval_logpolar(const WRat& R, Complex z, const LogPolar& w);
// log-polar Horner evaluation of a WPoly with constant coefficients.
LogPolar eval_logpolar_const(const WPoly& H, const LogPolar& w);

// Number of worker threads for row-parallel experiments: min(rows, hardware),
// capped by the DIFFNEV_THREADS environment variable.
int thread_budget(int rows);

}  // namespace diffnev
