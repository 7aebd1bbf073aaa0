#include "bakerdim/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace bakerdim {

namespace {

// Adaptive Simpson with Richardson correction. The integrand for c near 1 has
// a sharp logarithmic dip at v = 1/2, so the panel count is seeded high enough
// that the estimator sees it before deciding anything converged.
double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                        double tol, int seed_panels = 8, int max_depth = 52) {
    struct Rec {
        const std::function<double(double)>& f;
        double operator()(double a, double b, double fa, double fm, double fb, double whole,
                          double tol, int depth) const {
            const double m = 0.5 * (a + b);
            const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            const double flm = f(lm), frm = f(rm);
            const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            const double delta = left + right - whole;
            if (depth <= 0 || std::abs(delta) < 15.0 * tol)
                return left + right + delta / 15.0;
            return (*this)(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
                   (*this)(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
        }
    } rec{f};
    double total = 0.0;
    const double h = (hi - lo) / seed_panels;
    for (int i = 0; i < seed_panels; ++i) {
        const double a = lo + i * h, b = lo + (i + 1) * h, m = 0.5 * (a + b);
        const double fa = f(a), fm = f(m), fb = f(b);
        const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        total += rec(a, b, fa, fm, fb, whole, tol / seed_panels, max_depth);
    }
    return total;
}

} // namespace

double gamma_c(double a, double c) {
    if (!(a > 0.0 && a < 1.0)) throw ConfigError("gamma_c: a must be in (0,1)");
    if (!(c > 1.0)) throw PositivityViolation("gamma_c: c <= 1 lets g vanish");
    return adaptive_simpson([c](double v) { return std::log(c + std::cos(2.0 * M_PI * v)); },
                            0.0, 1.0, 1e-11);
}

GammaSummary gamma_extremes(double a, double c, int max_period, const ScanOptions& opts) {
    if (max_period < 1) throw ConfigError("gamma_extremes: max_period >= 1");
    if (max_period >= 63 || (std::uint64_t{1} << max_period) > opts.enumeration_budget)
        throw ResourceLimit("gamma_extremes: 2^max_period exceeds the enumeration budget");

    GammaSummary out;
    out.gamma_c = gamma_c(a, c);
    out.scan_period = max_period;
    double lo = HUGE_VAL, hi = -HUGE_VAL;
    SymbolWord word;
    for (int p = 1; p <= max_period; ++p) {
        const std::uint64_t count = std::uint64_t{1} << p;
        for (std::uint64_t bits = 0; bits < count; ++bits) {
            word.resize(static_cast<size_t>(p));
            for (int j = 0; j < p; ++j) word[static_cast<size_t>(j)] = (bits >> j) & 1;
            if (!is_canonical_rotation(word) || !is_primitive_word(word)) continue;
            const double avg = periodic_orbit_logg_average(word, a, c);
            if (avg < lo) { lo = avg; out.witness_min = word; }
            if (avg > hi) { hi = avg; out.witness_max = word; }
        }
    }
    out.gamma_min_est = lo;
    out.gamma_max_est = hi;
    return out;
}

namespace {

struct Eval {
    double Q, dQ_dq, dQ_ddelta;
    int sweeps;
};

Eval eval_pressure(double q, double delta, double t, const PotentialWindow& win,
                   const SolveOptions& opts) {
    const PressureResult r = pressure_transfer(q, delta, t, win, opts.power_tol, opts.power_iter_cap);
    return {r.value, r.dQ_dq, r.dQ_ddelta, r.power_iterations};
}

// Newton on F(D,q) = (Q, dQ/dq) at one fixed window. Row one of the Jacobian
// is analytic (dQ/ddelta, dQ/dq); row two is a central difference of dQ/dq.
// Damped steps: halve while ||F|| grows, which widens the seed basin without
// changing the converged root.
struct NewtonOut {
    double D, q, rQ, rdq, mu_u;
    bool converged;
    int used_iterations;
};

NewtonOut newton_fixed_window(double t, double D, double q, const PotentialWindow& win,
                              const SolveOptions& opts, int iter_budget, double tol) {
    NewtonOut out{D, q, HUGE_VAL, HUGE_VAL, 0.0, false, 0};
    const double h = opts.fd_step;
    if (std::abs(q) > opts.q_cap)
        throw BoundaryBlowup("solve_Dq: |q| exceeded cap; t too close to gamma_min/gamma_max");
    Eval c0 = eval_pressure(q, D, t, win, opts);
    for (int it = 0; it < iter_budget; ++it) {
        out.D = D; out.q = q; out.rQ = c0.Q; out.rdq = c0.dQ_dq; out.mu_u = -c0.dQ_ddelta;
        out.used_iterations = it;
        if (std::abs(c0.Q) < tol && std::abs(c0.dQ_dq) < tol) {
            out.converged = true;
            return out;
        }
        const Eval dp = eval_pressure(q, D + h, t, win, opts);
        const Eval dm = eval_pressure(q, D - h, t, win, opts);
        const Eval qp = eval_pressure(q + h, D, t, win, opts);
        const Eval qm = eval_pressure(q - h, D, t, win, opts);
        const double J11 = c0.dQ_ddelta, J12 = c0.dQ_dq;
        const double J21 = (dp.dQ_dq - dm.dQ_dq) / (2.0 * h);
        const double J22 = (qp.dQ_dq - qm.dQ_dq) / (2.0 * h);
        const double det = J11 * J22 - J12 * J21;
        if (det == 0.0 || !std::isfinite(det))
            throw NonConvergence("solve_Dq: singular Jacobian");
        const double stepD = -(J22 * c0.Q - J12 * c0.dQ_dq) / det;
        const double stepq = -(-J21 * c0.Q + J11 * c0.dQ_dq) / det;
        const double f0 = std::max(std::abs(c0.Q), std::abs(c0.dQ_dq));
        double scale = 1.0;
        for (int half = 0; half < 8; ++half) {
            const double Dn = D + scale * stepD, qn = q + scale * stepq;
            if (std::abs(qn) > opts.q_cap)
                throw BoundaryBlowup("solve_Dq: |q| exceeded cap; t too close to gamma_min/gamma_max");
            const Eval trial = eval_pressure(qn, Dn, t, win, opts);
            if (std::max(std::abs(trial.Q), std::abs(trial.dQ_dq)) < f0 || half == 7) {
                D = Dn; q = qn; c0 = trial;
                break;
            }
            scale *= 0.5;
        }
    }
    return out;
}

} // namespace

CurvePoint solve_Dq(double t, double init_D, double init_q, const PotentialWindow& base,
                    const SolveOptions& opts) {
    if (!std::isfinite(init_D) || !std::isfinite(init_q))
        throw ConfigError("solve_Dq: initial guess must be finite");
    CurvePoint pt;
    pt.t = t;
    pt.m = opts.window;

    double D = init_D, q = init_q;
    int budget = opts.max_iterations;
    if (opts.window_warm > 0 && opts.window_warm < opts.window) {
        const PotentialWindow warm(opts.window_warm, base.a, base.c, base.anchor);
        // loose warm phase; its only job is a good seed for the final window
        const NewtonOut w = newton_fixed_window(t, D, q, warm, opts, budget / 2, 1e-8);
        D = w.D; q = w.q;
        budget -= w.used_iterations + 1;
    }
    const PotentialWindow fin(opts.window, base.a, base.c, base.anchor);
    const NewtonOut f = newton_fixed_window(t, D, q, fin, opts, std::max(budget, 5), opts.newton_tol);
    pt.D = f.D;
    pt.q = f.q;
    pt.residual_Q = f.rQ;
    pt.residual_dQdq = f.rdq;
    pt.mu_u = f.mu_u;
    pt.converged = f.converged;
    if (!f.converged)
        throw NonConvergence("solve_Dq: Newton iteration cap reached");
    return pt;
}

std::vector<CurvePoint> trace_curve(const std::vector<double>& t_grid, const TraceConfig& cfg) {
    if (t_grid.size() < 2) throw ConfigError("trace_curve: need at least 2 grid points");
    for (size_t i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1])) throw ConfigError("trace_curve: grid must be increasing");

    const double width = cfg.gamma_max_est - cfg.gamma_min_est;
    const double margin = cfg.margin_frac * width;
    const double usable_lo = cfg.gamma_min_est + margin;
    const double usable_hi = cfg.gamma_max_est - margin;
    const double spacing = t_grid[1] - t_grid[0];
    if (!(width > 0.0) || usable_hi - usable_lo < spacing)
        throw GammaDegenerate("trace_curve: usable gamma window is below grid resolution");
    if (t_grid.front() < usable_lo || t_grid.back() > usable_hi)
        throw GammaDegenerate("trace_curve: grid extends outside the usable gamma window");

    std::vector<CurvePoint> pts(t_grid.size());
    size_t i0 = 0;
    for (size_t i = 1; i < t_grid.size(); ++i)
        if (std::abs(t_grid[i] - cfg.gamma_c) < std::abs(t_grid[i0] - cfg.gamma_c)) i0 = i;

    const auto solve_at = [&](size_t i, double D0, double q0) {
        try {
            pts[i] = solve_Dq(t_grid[i], D0, q0, cfg.window, cfg.solve);
        } catch (const NumericError&) {
            pts[i].t = t_grid[i];
            pts[i].D = D0;
            pts[i].q = q0;
            pts[i].m = cfg.solve.window;
            pts[i].converged = false;
        }
        return pts[i].converged;
    };

    // anchored at the proved point (D,q) = (1,0) at gamma_c, then continuation
    solve_at(i0, 1.0, 0.0);
    double D0 = pts[i0].converged ? pts[i0].D : 1.0;
    double q0 = pts[i0].converged ? pts[i0].q : 0.0;
    double D = D0, q = q0;
    for (size_t i = i0 + 1; i < t_grid.size(); ++i)
        if (solve_at(i, D, q)) { D = pts[i].D; q = pts[i].q; }
    D = D0; q = q0;
    for (size_t i = i0; i-- > 0;)
        if (solve_at(i, D, q)) { D = pts[i].D; q = pts[i].q; }
    return pts;
}

DimensionReport dimension_report(const CurvePoint& point, const GammaSummary& gamma,
                                 double critical_eps) {
    if (!point.converged) throw ConfigError("dimension_report: point is not converged");
    DimensionReport rep;
    rep.t = point.t;
    rep.D = point.D;
    const double d = point.D;
    if (std::abs(point.t - gamma.gamma_c) <= critical_eps) {
        rep.regime = Regime::Critical;
        rep.dimH_Nt = d + 1.0;
        rep.dimP_Nt = 2.0;
        rep.dim_St = d + 1.0;
        rep.dim_attractor = 3.0;
        rep.dimH_complement = d + 1.0;
        rep.dimP_complement = d + 1.0;
    } else if (point.t < gamma.gamma_c) {
        rep.regime = Regime::Subcritical;
        rep.dimH_Nt = d + 1.0;
        rep.dimP_Nt = 2.0;
        rep.dim_St = d + 1.0;
        rep.dim_attractor = 3.0;
    } else {
        rep.regime = Regime::Supercritical;
        rep.dimH_complement = d + 1.0;
        rep.dimP_complement = d + 1.0;
        rep.dimP_Nt = 2.0;
        rep.dim_St = d + 1.0;
        rep.dim_attractor = d + 2.0;
    }
    return rep;
}

} // namespace bakerdim
