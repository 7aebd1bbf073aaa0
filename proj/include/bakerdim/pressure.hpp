#ifndef BAKERDIM_PRESSURE_HPP
#define BAKERDIM_PRESSURE_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "bakerdim/errors.hpp"
#include "bakerdim/symbolic.hpp"

namespace bakerdim {

// Finite-window discretization of the potential q(Phi - t) - delta u on the
// full 2-shift, where Phi = log g through the reconstructed v-coordinate and
// u = -log||dB_a|E^s||. The two-sided potential is shifted so that it becomes
// a function of m+1 forward symbols; pressure is shift-invariant, so the only
// error is the window truncation of v.
struct PotentialWindow {
    int m = 8;            // past-window length
    double a = 0.45;
    double c = 1.001;
    double anchor = 0.5;  // v-reconstruction anchor; 1/2 puts the node at the
                          // cylinder midpoint, which gains an order of accuracy

    PotentialWindow() = default;
    PotentialWindow(int m_, double a_, double c_, double anchor_ = 0.5)
        : m(m_), a(a_), c(c_), anchor(anchor_) {
        if (m < 1) throw ConfigError("PotentialWindow: m >= 1 required");
        if (!(a > 0.0 && a < 1.0)) throw ConfigError("PotentialWindow: a must be in (0,1)");
        if (!(c > 1.0)) throw PositivityViolation("PotentialWindow: need c > 1");
        if (!(anchor >= 0.0 && anchor <= 1.0)) throw ConfigError("PotentialWindow: anchor in [0,1]");
    }
};

struct PressureResult {
    double value = 0.0;       // Q(delta, q, t)
    double dQ_dq = 0.0;       // equilibrium average mu(Phi - t)
    double dQ_ddelta = 0.0;   // -mu(u), always negative
    int m = 0;                // window used
    int power_iterations = 0;
    double est_error = 0.0;   // window truncation bound (or measured gap, see pressure_adaptive)
};

// Potential value of one (m+1)-symbol word (chronological, word[m] newest):
// q (log(c + cos(2 pi v_hat)) - t) + delta log r(word[m]), with v_hat the
// reconstruction from the reversed first m symbols and r(0)=a, r(1)=1-a.
double window_potential(const SymbolWord& word, double q, double delta, double t,
                        const PotentialWindow& win);

// Pressure as log of the spectral radius of the weighted transition operator
// on m-cylinders (2^m states, two successors each). Power iteration with
// Collatz-Wielandt brackets to relative tolerance `tol`; first derivatives
// come from the left/right principal eigenvectors via the transition measure.
// Throws NonConvergence if the iteration cap is exceeded.
PressureResult pressure_transfer(double q, double delta, double t, const PotentialWindow& win,
                                 double tol = 1e-13, int iter_cap = 200000);

struct PeriodicOptions {
    std::uint64_t enumeration_budget = 1ULL << 20; // max number of periodic words
};

// Periodic-orbit cross-estimator (1/n) log sum_{sigma^n w = w} exp(S_n potential),
// summing the window_potential around each of the 2^n cycles. Exactly equal to
// (1/n) log tr(M^n) for the same windowed potential. Requires n >= win.m + 1.
// Throws ResourceLimit if 2^n exceeds the enumeration budget.
double pressure_periodic(double q, double delta, double t, int n, const PotentialWindow& win,
                         const PeriodicOptions& opts = {});

struct AdaptiveOptions {
    int m_max = 16;
    double tol = 1e-9;
};

// Refines the window until |Q_m - Q_{m+1}| < tol; returns the validated-m
// result with est_error set to the measured gap. Throws ResourceLimit if
// m_max is reached without meeting tol. Note: at the model parameters c near
// 1 the gap decays like max(a,1-a)^m with a large Lipschitz factor, so tight
// tolerances are only reachable for well-conditioned c.
PressureResult pressure_adaptive(double q, double delta, double t, double tol,
                                 const PotentialWindow& base, int m_max = 16);

namespace detail {

// Cached per-(m,a,c,anchor) tables: phi[s] = log g(v_hat(s)) over the 2^m
// m-bit states (bit j of s = symbol j, chronological), plus log r per branch.
// Shared across pressure evaluations; safe for concurrent readers.
struct TransferTables {
    int m;
    double a, c, anchor;
    std::vector<double> phi;  // size 2^m
    double log_r[2];
};

std::shared_ptr<const TransferTables> transfer_tables(const PotentialWindow& win);

} // namespace detail

} // namespace bakerdim

#endif
