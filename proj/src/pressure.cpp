#include "bakerdim/pressure.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <tuple>

namespace bakerdim {

namespace detail {

namespace {

std::uint64_t bits_of(double x) {
    std::uint64_t b;
    static_assert(sizeof(b) == sizeof(x));
    std::memcpy(&b, &x, sizeof(b));
    return b;
}

using TableKey = std::tuple<int, std::uint64_t, std::uint64_t, std::uint64_t>;

std::mutex table_mutex;
std::map<TableKey, std::shared_ptr<const TransferTables>> table_cache;

} // namespace

std::shared_ptr<const TransferTables> transfer_tables(const PotentialWindow& win) {
    const TableKey key{win.m, bits_of(win.a), bits_of(win.c), bits_of(win.anchor)};
    {
        std::lock_guard<std::mutex> lock(table_mutex);
        auto it = table_cache.find(key);
        if (it != table_cache.end()) return it->second;
    }
    auto tab = std::make_shared<TransferTables>();
    tab->m = win.m;
    tab->a = win.a;
    tab->c = win.c;
    tab->anchor = win.anchor;
    tab->log_r[0] = std::log(win.a);
    tab->log_r[1] = std::log(1.0 - win.a);
    const std::size_t states = std::size_t{1} << win.m;
    tab->phi.resize(states);
    for (std::size_t s = 0; s < states; ++s) {
        // v_hat(s): anchor pushed through the branches in chronological order
        double v = win.anchor;
        for (int j = 0; j < win.m; ++j)
            v = ((s >> j) & 1) ? win.a + (1.0 - win.a) * v : win.a * v;
        tab->phi[s] = std::log(win.c + std::cos(2.0 * M_PI * v));
    }
    std::lock_guard<std::mutex> lock(table_mutex);
    auto [it, inserted] = table_cache.emplace(key, std::move(tab));
    (void)inserted;
    return it->second;
}

} // namespace detail

double window_potential(const SymbolWord& word, double q, double delta, double t,
                        const PotentialWindow& win) {
    validate_word(word);
    if (static_cast<int>(word.size()) != win.m + 1)
        throw ConfigError("window_potential: word length must be m+1");
    SymbolWord past(word.rbegin() + 1, word.rend()); // first m symbols, most recent first
    const double v_hat = reconstruct_v(past, win.a, win.anchor);
    const double log_r = word.back() == 0 ? std::log(win.a) : std::log(1.0 - win.a);
    return q * (std::log(win.c + std::cos(2.0 * M_PI * v_hat)) - t) + delta * log_r;
}

namespace {

constexpr double weight_floor = 1e-300; // keeps the operator strictly positive

struct EigData {
    double Q = 0.0;
    double dQ_dq = 0.0;
    double dQ_ddelta = 0.0;
    int sweeps = 0;
};

// Power iteration with Collatz-Wielandt brackets: for positive v and positive
// M, min_s (Mv)_s/v_s <= lambda <= max_s (Mv)_s/v_s, and the bracket contracts
// geometrically. `weights` is indexed by the (m+1)-bit edge word.
EigData transfer_core(double q, double delta, double t, const detail::TransferTables& tab,
                      double tol, int iter_cap, bool need_derivs) {
    const int m = tab.m;
    const std::size_t states = std::size_t{1} << m;
    const std::size_t half = states >> 1;

    std::vector<double> weights(2 * states);
    double pot_max = -HUGE_VAL;
    for (std::size_t w = 0; w < 2 * states; ++w) {
        const std::size_t s = w & (states - 1);
        const int b = static_cast<int>(w >> m);
        const double pot = q * (tab.phi[s] - t) + delta * tab.log_r[b];
        weights[w] = pot;
        pot_max = std::max(pot_max, pot);
    }
    for (auto& w : weights) w = std::max(std::exp(w - pot_max), weight_floor);

    EigData out;
    std::vector<double> v(states, 1.0), vn(states);
    double lam = 0.0;
    int sweeps = 0;
    const auto right_sweep = [&](std::vector<double>& src, std::vector<double>& dst) {
        // successor of state s via bit b is (s>>1) | (b << (m-1)); m == 1 makes
        // the successor index just b.
        double rmin = HUGE_VAL, rmax = -HUGE_VAL, vmax = 0.0;
        for (std::size_t s = 0; s < states; ++s) {
            const std::size_t base = s >> 1;
            const double x = weights[s] * src[base] + weights[s + states] * src[base | half];
            dst[s] = x;
            const double r = x / src[s];
            rmin = std::min(rmin, r);
            rmax = std::max(rmax, r);
            vmax = std::max(vmax, x);
        }
        for (auto& x : dst) x /= vmax;
        return std::pair{rmin, rmax};
    };
    bool converged = false;
    for (int it = 0; it < iter_cap; ++it) {
        auto [rmin, rmax] = right_sweep(v, vn);
        std::swap(v, vn);
        ++sweeps;
        lam = 0.5 * (rmin + rmax);
        if (std::isfinite(rmin) && rmax - rmin <= tol * lam) { converged = true; break; }
    }
    if (!converged)
        throw NonConvergence("pressure_transfer: power iteration (right) exceeded cap");
    out.Q = std::log(lam) + pot_max;
    out.sweeps = sweeps;
    if (!need_derivs) return out;

    std::vector<double> u(states, 1.0), un(states);
    converged = false;
    for (int it = 0; it < iter_cap; ++it) {
        // predecessors of s' are w = (s'<<1)|x over the edge-word space
        double rmin = HUGE_VAL, rmax = -HUGE_VAL, umax = 0.0;
        for (std::size_t sp = 0; sp < states; ++sp) {
            const std::size_t w0 = (sp << 1) & (2 * states - 1);
            const std::size_t w1 = w0 | 1;
            const double x = weights[w0] * u[w0 & (states - 1)] + weights[w1] * u[w1 & (states - 1)];
            un[sp] = x;
            const double r = x / u[sp];
            rmin = std::min(rmin, r);
            rmax = std::max(rmax, r);
            umax = std::max(umax, x);
        }
        for (auto& x : un) x /= umax;
        std::swap(u, un);
        ++sweeps;
        if (std::isfinite(rmin) && rmax - rmin <= tol * 0.5 * (rmin + rmax)) { converged = true; break; }
    }
    if (!converged)
        throw NonConvergence("pressure_transfer: power iteration (left) exceeded cap");
    out.sweeps = sweeps;

    // transition measure pi(w) = u[s] W[w] v[s'] / (lam <u,v>); first
    // derivatives of Q are pi-averages of the potential's partials.
    double pairing = 0.0;
    for (std::size_t s = 0; s < states; ++s) pairing += u[s] * v[s];
    const double norm = lam * pairing;
    double acc_q = 0.0, acc_d = 0.0;
    for (std::size_t w = 0; w < 2 * states; ++w) {
        const std::size_t s = w & (states - 1);
        const std::size_t sp = (s >> 1) | ((w >> m) << (m - 1));
        const double pi = u[s] * weights[w] * v[sp] / norm;
        acc_q += pi * (tab.phi[s] - t);
        acc_d += pi * tab.log_r[w >> m];
    }
    out.dQ_dq = acc_q;
    out.dQ_ddelta = acc_d;
    return out;
}

double truncation_bound(double q, const PotentialWindow& win) {
    const double lip = 2.0 * M_PI / (win.c - 1.0); // Lipschitz constant of v -> log g(v)
    return std::abs(q) * lip * std::pow(std::max(win.a, 1.0 - win.a), win.m);
}

} // namespace

PressureResult pressure_transfer(double q, double delta, double t, const PotentialWindow& win,
                                 double tol, int iter_cap) {
    const auto tab = detail::transfer_tables(win);
    const EigData e = transfer_core(q, delta, t, *tab, tol, iter_cap, true);
    PressureResult res;
    res.value = e.Q;
    res.dQ_dq = e.dQ_dq;
    res.dQ_ddelta = e.dQ_ddelta;
    res.m = win.m;
    res.power_iterations = e.sweeps;
    res.est_error = truncation_bound(q, win);
    return res;
}

double pressure_periodic(double q, double delta, double t, int n, const PotentialWindow& win,
                         const PeriodicOptions& opts) {
    if (n < win.m + 1) throw ConfigError("pressure_periodic: need n >= m+1");
    if (n >= 63 || (std::uint64_t{1} << n) > opts.enumeration_budget)
        throw ResourceLimit("pressure_periodic: 2^n exceeds the enumeration budget");
    const auto tab = detail::transfer_tables(win);
    const std::uint64_t words = std::uint64_t{1} << n;
    const std::uint64_t smask = (std::uint64_t{1} << win.m) - 1;

    std::vector<double> birkhoff(words);
    double smax = -HUGE_VAL;
    for (std::uint64_t word = 0; word < words; ++word) {
        // cyclic (m+1)-window ending at position k; advance by shifting in the
        // next symbol at bit m
        std::uint64_t w = 0;
        for (int j = 0; j <= win.m; ++j) {
            const int pos = ((0 - win.m + j) % n + n) % n;
            w |= ((word >> pos) & 1) << j;
        }
        double S = 0.0;
        for (int k = 0; k < n; ++k) {
            S += q * (tab->phi[w & smask] - t) + delta * tab->log_r[w >> win.m];
            const int next = (k + 1) % n;
            w = (w >> 1) | (((word >> next) & 1) << win.m);
        }
        birkhoff[word] = S;
        smax = std::max(smax, S);
    }
    double sum = 0.0;
    for (double S : birkhoff) sum += std::exp(S - smax);
    return (smax + std::log(sum)) / n;
}

PressureResult pressure_adaptive(double q, double delta, double t, double tol,
                                 const PotentialWindow& base, int m_max) {
    if (!(tol > 0.0)) throw ConfigError("pressure_adaptive: tol > 0 required");
    const auto value_at = [&](int m) {
        const PotentialWindow win(m, base.a, base.c, base.anchor);
        const auto tab = detail::transfer_tables(win);
        return transfer_core(q, delta, t, *tab, 1e-13, 200000, false).Q;
    };
    double q_prev = value_at(1);
    for (int m = 1; m < m_max; ++m) {
        const double q_next = value_at(m + 1);
        const double gap = std::abs(q_next - q_prev);
        if (gap < tol) {
            const PotentialWindow win(m, base.a, base.c, base.anchor);
            PressureResult res = pressure_transfer(q, delta, t, win);
            res.est_error = gap;
            return res;
        }
        q_prev = q_next;
    }
    throw ResourceLimit("pressure_adaptive: window limit reached before meeting tol");
}

} // namespace bakerdim
