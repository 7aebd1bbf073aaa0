#include "bakerdim/baker.hpp"

#include <cmath>

namespace bakerdim {

BakerPoint baker_map(const BakerPoint& p, double a, Direction dir) {
    if (!(a > 0.0 && a < 1.0)) throw ConfigError("baker_map: a must be in (0,1)");
    if (dir == Direction::Forward) {
        if (p.u < a) return {p.u / a, a * p.v};
        return {(p.u - a) / (1.0 - a), a + (1.0 - a) * p.v};
    }
    if (p.v < a) return {a * p.u, p.v / a};
    return {a + (1.0 - a) * p.u, (p.v - a) / (1.0 - a)};
}

double stable_log_contraction(const BakerPoint& p, double a) {
    if (!(a > 0.0 && a < 1.0)) throw ConfigError("stable_log_contraction: a must be in (0,1)");
    return p.u < a ? std::log(a) : std::log(1.0 - a);
}

std::vector<BakerPoint> backward_orbit(const BakerPoint& p, double a, int n) {
    std::vector<BakerPoint> past;
    past.reserve(static_cast<size_t>(n));
    BakerPoint q = p;
    for (int k = 0; k < n; ++k) {
        q = baker_map(q, a, Direction::Inverse);
        past.push_back(q);
    }
    return past;
}

double pullback_value(std::span<const BakerPoint> past, const FibreParams& params, int n) {
    if (n < 1 || static_cast<size_t>(n) > past.size())
        throw ConfigError("pullback_value: need 1 <= n <= orbit length");
    double x = params.cap;
    for (int k = n - 1; k >= 0; --k) {
        const double gt = params.r * params.forcing(past[static_cast<size_t>(k)]);
        x = gt * (x / (1.0 + x)); // this order keeps the float step monotone in x
    }
    return x;
}

double pullback_value(const BakerPoint& p, const FibreParams& params, int n) {
    const auto past = backward_orbit(p, params.a, n);
    return pullback_value(past, params, n);
}

namespace {

PullbackResult pullback_classify(std::span<const BakerPoint> past, const FibreParams& params,
                                 const PullbackOptions& opts) {
    if (opts.n_max < 1) throw ConfigError("pullback_graph: n_max >= 1");
    if (!(opts.zero_threshold > 0.0) || !(opts.rel_tol > 0.0))
        throw ConfigError("pullback_graph: tolerances must be positive");

    PullbackResult res;
    double prev = -1.0;
    int n = 1;
    bool last_round = false;
    while (true) {
        if (n >= opts.n_max) {
            n = opts.n_max;
            last_round = true;
        }
        const double x = pullback_value(past, params, n);
        res.value = x;
        res.n_used = n;
        if (x < opts.zero_threshold) {
            res.classification = Classification::Zero;
            return res;
        }
        if (prev >= 0.0 && std::abs(x - prev) <= opts.rel_tol * x) {
            res.classification = Classification::Positive;
            return res;
        }
        if (last_round) {
            res.classification = Classification::Undetermined;
            return res;
        }
        prev = x;
        n *= 2;
    }
}

} // namespace

PullbackResult pullback_graph(std::span<const BakerPoint> past, const FibreParams& params,
                              const PullbackOptions& opts) {
    if (past.size() < static_cast<size_t>(opts.n_max))
        throw ConfigError("pullback_graph: orbit shorter than n_max");
    return pullback_classify(past, params, opts);
}

PullbackResult pullback_graph(const BakerPoint& p, const FibreParams& params,
                              const PullbackOptions& opts) {
    const auto past = backward_orbit(p, params.a, opts.n_max);
    return pullback_classify(past, params, opts);
}

double backward_birkhoff(std::span<const BakerPoint> past, const FibreParams& params, int n) {
    if (n < 1 || static_cast<size_t>(n) > past.size())
        throw ConfigError("backward_birkhoff: need 1 <= n <= orbit length");
    double sum = 0.0;
    for (int k = 0; k < n; ++k) sum += std::log(params.forcing(past[static_cast<size_t>(k)]));
    return sum / n;
}

double backward_birkhoff(const BakerPoint& p, const FibreParams& params, int n) {
    const auto past = backward_orbit(p, params.a, n);
    return backward_birkhoff(past, params, n);
}

} // namespace bakerdim
