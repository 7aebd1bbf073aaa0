#ifndef BAKERDIM_BAKER_HPP
#define BAKERDIM_BAKER_HPP

#include <cmath>
#include <span>
#include <vector>

#include "bakerdim/errors.hpp"

namespace bakerdim {

// A point of the unit square, the driving phase space.
struct BakerPoint {
    double u = 0.0; // expanding coordinate
    double v = 0.0; // contracting coordinate
};

enum class Direction { Forward, Inverse };

// B_a(u,v) = (u/a, a v) for u < a, ((u-a)/(1-a), a+(1-a)v) for u >= a.
// The inverse exchanges the expanding and contracting roles.
BakerPoint baker_map(const BakerPoint& p, double a, Direction dir = Direction::Forward);

// log ||dB_a|E^s|| at p: log a on [0,a) x [0,1), log(1-a) on [a,1) x [0,1).
double stable_log_contraction(const BakerPoint& p, double a);

// Multiplicative forcing g. The cosine family g(v) = c + cos(2 pi v) is the
// model of record; the constant mode exists only as an oracle hook for tests
// with closed-form fixed points.
struct Forcing {
    enum class Kind { Cosine, Constant };
    Kind kind = Kind::Cosine;
    double c = 1.001;  // cosine offset, requires c > 1
    double g0 = 2.0;   // constant value, requires g0 > 0

    static Forcing cosine(double c) {
        if (!(c > 1.0)) throw PositivityViolation("Forcing: need c > 1 so that min g = c-1 > 0");
        Forcing f; f.kind = Kind::Cosine; f.c = c; return f;
    }
    static Forcing constant(double g0) {
        if (!(g0 > 0.0)) throw PositivityViolation("Forcing: constant g must be positive");
        Forcing f; f.kind = Kind::Constant; f.g0 = g0; return f;
    }

    double operator()(const BakerPoint& p) const {
        return kind == Kind::Cosine ? c + std::cos(2.0 * M_PI * p.v) : g0;
    }
    double sup() const { return kind == Kind::Cosine ? c + 1.0 : g0; }
    double inf() const { return kind == Kind::Cosine ? c - 1.0 : g0; }
};

// Model parameters of the skew product T_t(theta,x) = (B_a theta, f_t(theta,x)),
// f_t(theta,x) = e^{-t} g(theta) h(x) with h(x) = x/(1+x).
// cap = M_t = e^{-t} sup g, which satisfies f_t(theta, M_t) < M_t since h < 1.
struct FibreParams {
    double a;
    double t;
    Forcing forcing;
    double r;   // e^{-t}
    double cap; // M_t

    FibreParams(double a_, double t_, Forcing f)
        : a(a_), t(t_), forcing(f), r(std::exp(-t_)), cap(std::exp(-t_) * f.sup()) {
        if (!(a > 0.0 && a < 1.0)) throw ConfigError("FibreParams: a must be in (0,1)");
    }
    static FibreParams cosine(double a, double t, double c) { return {a, t, Forcing::cosine(c)}; }
    static FibreParams constant(double a, double t, double g0) { return {a, t, Forcing::constant(g0)}; }
};

// One fibre step e^{-t} g(p) h(x). h is evaluated as x/(1+x) before scaling;
// in that order the float map is monotone in x, so pullback sequences are
// non-increasing exactly, not just up to rounding.
inline double fibre_step(double x, const BakerPoint& p, const FibreParams& params) {
    const double gt = params.r * params.forcing(p);
    return gt * (x / (1.0 + x));
}

// Backward orbit B^{-1}p, B^{-2}p, ..., B^{-n}p.
std::vector<BakerPoint> backward_orbit(const BakerPoint& p, double a, int n);

enum class Classification { Zero, Positive, Undetermined };

struct PullbackResult {
    double value = 0.0;         // psi_{t,n} at the stopping index
    int n_used = 0;
    Classification classification = Classification::Undetermined;
};

struct PullbackOptions {
    int n_max = 100000;
    double zero_threshold = 1e-12;
    double rel_tol = 1e-9;
};

// psi_{t,n}(p): iterate fibre_step forward from cap along the last n points of
// the backward orbit. `past` must hold at least n points, past[k] = B^{-(k+1)}p.
double pullback_value(std::span<const BakerPoint> past, const FibreParams& params, int n);
double pullback_value(const BakerPoint& p, const FibreParams& params, int n);

// Pullback approximation of the maximal invariant graph phi_t = inf_n psi_{t,n}.
// Evaluates psi at n = 1, 2, 4, ... (and finally n_max); the sequence is
// non-increasing in n. Stops Zero when the value falls below zero_threshold,
// Positive when the relative change over a doubling of n drops below rel_tol,
// Undetermined at n_max otherwise (a valid outcome near critical parameters).
PullbackResult pullback_graph(const BakerPoint& p, const FibreParams& params,
                              const PullbackOptions& opts = {});

// Same, along a caller-supplied backward orbit (past[k] = B^{-(k+1)}p, at
// least opts.n_max points). Lets invariance checks evaluate phi at p and at
// B p along one shared orbit; independently generated orbits decorrelate in
// the expanding direction after ~ -53 log 2 / log max(a,1-a) steps, which any
// pointwise comparison of pullback limits must respect.
PullbackResult pullback_graph(std::span<const BakerPoint> past, const FibreParams& params,
                              const PullbackOptions& opts = {});

// Backward Birkhoff average Gamma^(n)(p) = (1/n) sum_{k=1..n} log g(B^{-k}p).
double backward_birkhoff(const BakerPoint& p, const FibreParams& params, int n);
double backward_birkhoff(std::span<const BakerPoint> past, const FibreParams& params, int n);

} // namespace bakerdim

#endif
