#ifndef BAKERDIM_DIMENSION_HPP
#define BAKERDIM_DIMENSION_HPP

#include <vector>

#include "bakerdim/pressure.hpp"
#include "bakerdim/symbolic.hpp"

namespace bakerdim {

// gamma_c^- = gamma(mu_SRB^-) = int_0^1 log(c + cos(2 pi v)) dv, by adaptive
// quadrature to absolute error <= 1e-10 (independent of u and a; for baker
// maps the backward and forward SRB measures are both Lebesgue).
double gamma_c(double a, double c);

struct GammaSummary {
    double gamma_c = 0.0;
    double gamma_min_est = 0.0;
    double gamma_max_est = 0.0;
    SymbolWord witness_min;
    SymbolWord witness_max;
    int scan_period = 0;
};

struct ScanOptions {
    std::uint64_t enumeration_budget = 1ULL << 20;
};

// Periodic-orbit scan up to max_period: inner approximations of gamma_min and
// gamma_max over invariant measures, with witness words.
GammaSummary gamma_extremes(double a, double c, int max_period = 12,
                            const ScanOptions& opts = {});

struct SolveOptions {
    double newton_tol = 1e-10;
    double fd_step = 1e-4;     // central-difference step for the second-derivative row
    int max_iterations = 50;
    double q_cap = 200.0;      // |q| beyond this signals t too close to gamma_min/max
    int window = 14;           // pressure window for the final Newton phase
    int window_warm = 12;      // cheaper window for the first phase
    double power_tol = 1e-13;
    int power_iter_cap = 200000;
};

struct CurvePoint {
    double t = 0.0;
    double D = 0.0;
    double q = 0.0;
    double residual_Q = 0.0;
    double residual_dQdq = 0.0;
    double mu_u = 0.0;       // mu(u) = -dQ/ddelta at the solution
    int m = 0;               // pressure window used
    bool converged = false;
};

// Solve the pressure equation system Q(D,q,t) = 0, dQ/dq(D,q,t) = 0 by Newton
// iteration: analytic first-derivative row from the eigen-data, central finite
// differences of dQ_dq for the second-derivative row. The window is fixed per
// phase (warm then final) rather than adapted per evaluation: differencing
// across window changes would corrupt the Jacobian, and near q = 0 a gap-based
// window choice under-resolves dQ/dq while Q_m is exactly window-independent.
// Throws NonConvergence after max_iterations, BoundaryBlowup when |q| > q_cap.
CurvePoint solve_Dq(double t, double init_D, double init_q, const PotentialWindow& base,
                    const SolveOptions& opts = {});

struct TraceConfig {
    double gamma_c = 0.0;
    double gamma_min_est = 0.0;
    double gamma_max_est = 0.0;
    double margin_frac = 0.01; // usable window shrinks by this fraction per side
    PotentialWindow window;    // m field is overridden by solve options
    SolveOptions solve;
};

// Continuation trace of (D(t), q(t)) over an ordered grid: starts at the grid
// point nearest gamma_c with the proved seed (D,q) = (1,0) and continues
// outward in both directions, warm-starting each solve from its neighbor.
// Failing points are recorded unconverged; the sweep is not aborted.
// Throws GammaDegenerate when the grid does not fit in the usable window.
std::vector<CurvePoint> trace_curve(const std::vector<double>& t_grid, const TraceConfig& cfg);

enum class Regime { Subcritical, Critical, Supercritical };

struct DimensionReport {
    double t = 0.0;
    Regime regime = Regime::Critical;
    double D = 0.0;
    // theorem-backed dimensions; quantities not defined in a regime are < 0
    double dimH_Nt = -1.0;          // D+1 for t <= gamma_c
    double dimP_Nt = -1.0;          // 2 throughout the window
    double dimH_complement = -1.0;  // D+1 for t >= gamma_c (also the packing value)
    double dimP_complement = -1.0;
    double dim_St = -1.0;           // D+1
    double dim_attractor = -1.0;    // 3 below gamma_c, D+2 above
};

// Pure formula substitution per the dimension theorems; rejects unconverged
// input with ConfigError.
DimensionReport dimension_report(const CurvePoint& point, const GammaSummary& gamma,
                                 double critical_eps = 1e-9);

} // namespace bakerdim

#endif
