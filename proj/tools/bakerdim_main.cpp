// bakerdim: dimension theory of baker-map-driven concave skew products.
// Subcommands: curve, zeroset, pressure, gamma, verify.

#include <cstdio>
#include <functional>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "bakerdim/baker.hpp"
#include "bakerdim/dimension.hpp"
#include "bakerdim/errors.hpp"
#include "bakerdim/io.hpp"
#include "bakerdim/pressure.hpp"
#include "bakerdim/rng.hpp"
#include "bakerdim/run_config.hpp"
#include "bakerdim/verify.hpp"

namespace {

using bakerdim::RunConfig;

struct FlagSet {
    RunConfig cli;           // values bound to CLI11 options
    std::string config_path;
    std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&, const RunConfig&)>>> binds;

    template <typename T>
    void bind(CLI::App* cmd, const std::string& flag, T RunConfig::*field, const char* help) {
        CLI::Option* opt = cmd->add_option(flag, cli.*field, help);
        binds.emplace_back(opt, [field](RunConfig& dst, const RunConfig& src) {
            dst.*field = src.*field;
        });
    }

    void add_common(CLI::App* cmd) {
        bind(cmd, "--a", &RunConfig::a, "partition parameter in (0,1)");
        bind(cmd, "--c", &RunConfig::c, "forcing offset, g = c + cos(2 pi v), c > 1");
        bind(cmd, "--seed", &RunConfig::seed, "RNG seed (echoed in outputs)");
        cmd->add_option("--config", config_path, "JSON config file; flags override file values");
    }

    // flags override file values, file overrides defaults
    RunConfig resolve() const {
        RunConfig final;
        if (!config_path.empty()) bakerdim::apply_json_file(final, config_path);
        for (const auto& [opt, copy] : binds)
            if (opt->count() > 0) copy(final, cli);
        bakerdim::validate_and_fill(final);
        return final;
    }
};

bakerdim::TraceConfig trace_config(const RunConfig& cfg, const bakerdim::GammaSummary& gamma) {
    bakerdim::TraceConfig tc;
    tc.gamma_c = gamma.gamma_c;
    tc.gamma_min_est = gamma.gamma_min_est;
    tc.gamma_max_est = gamma.gamma_max_est;
    tc.margin_frac = cfg.margin_frac;
    tc.window = bakerdim::PotentialWindow(cfg.window, cfg.a, cfg.c);
    tc.solve.newton_tol = cfg.newton_tol;
    tc.solve.window = cfg.window;
    tc.solve.window_warm = cfg.window_warm;
    return tc;
}

int run_curve(const RunConfig& cfg) {
    const auto gamma = bakerdim::gamma_extremes(cfg.a, cfg.c, cfg.max_period);
    std::vector<double> grid(static_cast<size_t>(cfg.steps));
    for (int i = 0; i < cfg.steps; ++i)
        grid[static_cast<size_t>(i)] =
            cfg.t_min + (cfg.t_max - cfg.t_min) * i / static_cast<double>(cfg.steps - 1);
    const auto pts = bakerdim::trace_curve(grid, trace_config(cfg, gamma));

    int converged = 0;
    for (const auto& p : pts) converged += p.converged ? 1 : 0;
    if (!cfg.out.empty()) bakerdim::write_curve_csv(cfg.out, cfg, gamma, pts);
    if (!cfg.svg.empty()) bakerdim::write_curve_svg(cfg.svg, pts, gamma.gamma_c);

    size_t imax = 0;
    for (size_t i = 0; i < pts.size(); ++i)
        if (pts[i].converged && pts[i].D > pts[imax].D) imax = i;
    std::printf("curve: %d/%d points converged; max D = %s at t = %s (gamma_c = %s)\n", converged,
                cfg.steps, bakerdim::format_g17(pts[imax].D).c_str(),
                bakerdim::format_g17(pts[imax].t).c_str(),
                bakerdim::format_g17(gamma.gamma_c).c_str());
    if (converged * 2 < cfg.steps) {
        std::fprintf(stderr, "error: fewer than 50%% of grid points converged\n");
        return bakerdim::exit_numeric;
    }
    return bakerdim::exit_ok;
}

int run_zeroset(const RunConfig& cfg) {
    const auto gamma = bakerdim::gamma_extremes(cfg.a, cfg.c, cfg.max_period);
    const bakerdim::FibreParams params = bakerdim::FibreParams::cosine(cfg.a, cfg.t, cfg.c);
    bakerdim::PullbackOptions opts;
    opts.n_max = cfg.n;
    opts.zero_threshold = cfg.zero_threshold;
    opts.rel_tol = cfg.rel_tol;

    bakerdim::SplitMix64 rng(cfg.seed);
    std::vector<bakerdim::ZerosetRow> rows(static_cast<size_t>(cfg.samples));
    int zero = 0, undet = 0;
    for (auto& row : rows) {
        row.p = {rng.next_unit(), rng.next_unit()};
        const auto past = bakerdim::backward_orbit(row.p, cfg.a, cfg.n);
        const std::span<const bakerdim::BakerPoint> sp(past);
        const auto res = bakerdim::pullback_graph(sp, params, opts);
        row.classification = res.classification;
        row.gamma_n = bakerdim::backward_birkhoff(sp, params, cfg.n);
        if (res.classification == bakerdim::Classification::Zero) ++zero;
        if (res.classification == bakerdim::Classification::Undetermined) ++undet;
    }
    const double fraction_zero = static_cast<double>(zero) / cfg.samples;
    const double fraction_undet = static_cast<double>(undet) / cfg.samples;
    if (!cfg.out.empty())
        bakerdim::write_zeroset_csv(cfg.out, cfg, gamma, cfg.t, rows, fraction_zero, fraction_undet);
    std::printf("zeroset: t = %s, fraction_zero = %s, fraction_undetermined = %s (%d samples, n = %d, seed = %llu)\n",
                bakerdim::format_g17(cfg.t).c_str(), bakerdim::format_g17(fraction_zero).c_str(),
                bakerdim::format_g17(fraction_undet).c_str(), cfg.samples, cfg.n,
                static_cast<unsigned long long>(cfg.seed));
    return bakerdim::exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bifurcation/dimension theory of baker-map-driven concave skew products"};
    app.require_subcommand(1);

    FlagSet curve_flags, zero_flags, verify_flags;
    double q = 0.0, delta = 1.0, t_press = 0.0;
    int m_press = 8, n_periodic = 0;
    bool skip_mc = false;
    double a_gamma = 0.45, c_gamma = 1.001;
    int max_period = 12;

    CLI::App* curve = app.add_subcommand("curve", "trace the dimension curve D(t) and emit CSV/SVG");
    curve_flags.add_common(curve);
    curve_flags.bind(curve, "--t-min", &RunConfig::t_min, "grid start (default gamma_c - 0.6)");
    curve_flags.bind(curve, "--t-max", &RunConfig::t_max, "grid end (default gamma_c + 1.2)");
    curve_flags.bind(curve, "--steps", &RunConfig::steps, "grid points (default 80)");
    curve_flags.bind(curve, "--window", &RunConfig::window, "pressure window m (default 14)");
    curve_flags.bind(curve, "--max-period", &RunConfig::max_period, "gamma scan depth (default 12)");
    curve_flags.bind(curve, "--newton-tol", &RunConfig::newton_tol, "Newton residual tolerance");
    curve_flags.bind(curve, "--margin-frac", &RunConfig::margin_frac, "usable-window margin fraction");
    curve_flags.bind(curve, "-o,--out", &RunConfig::out, "CSV output path");
    curve_flags.bind(curve, "--svg", &RunConfig::svg, "SVG output path");

    CLI::App* zeroset = app.add_subcommand("zeroset", "sample pullback classifications at one t");
    zero_flags.add_common(zeroset);
    zero_flags.bind(zeroset, "--t", &RunConfig::t, "parameter t (default gamma_c)");
    zero_flags.bind(zeroset, "--samples", &RunConfig::samples, "sample count (default 1000)");
    zero_flags.bind(zeroset, "--n", &RunConfig::n, "pullback length (default 5000)");
    zero_flags.bind(zeroset, "--zero-threshold", &RunConfig::zero_threshold, "zero classification threshold");
    zero_flags.bind(zeroset, "--rel-tol", &RunConfig::rel_tol, "stabilization tolerance");
    zero_flags.bind(zeroset, "-o,--out", &RunConfig::out, "CSV output path");

    CLI::App* pressure = app.add_subcommand("pressure", "one pressure query Q(delta,q,t) as JSON");
    pressure->add_option("--q", q, "potential coefficient q");
    pressure->add_option("--delta", delta, "potential coefficient delta");
    pressure->add_option("--t", t_press, "parameter t");
    pressure->add_option("--m", m_press, "window length (default 8)");
    pressure->add_option("--a", a_gamma, "partition parameter");
    pressure->add_option("--c", c_gamma, "forcing offset");
    pressure->add_option("--periodic-n", n_periodic,
                         "also print the period-n orbit estimator (0 = off)");

    CLI::App* gamma_cmd = app.add_subcommand("gamma", "gamma_c and periodic-orbit extremes as JSON");
    gamma_cmd->add_option("--a", a_gamma, "partition parameter");
    gamma_cmd->add_option("--c", c_gamma, "forcing offset");
    gamma_cmd->add_option("--max-period", max_period, "scan depth (default 12)");

    CLI::App* verify = app.add_subcommand("verify", "run the property-verification suite");
    verify_flags.add_common(verify);
    verify_flags.bind(verify, "--window", &RunConfig::window, "pressure window m (default 14)");
    verify_flags.bind(verify, "--samples", &RunConfig::samples, "Monte Carlo sample count");
    verify_flags.bind(verify, "--n", &RunConfig::n, "zero-set pullback length");
    verify->add_flag("--skip-montecarlo", skip_mc, "run only the deterministic checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (curve->parsed()) return run_curve(curve_flags.resolve());
        if (zeroset->parsed()) return run_zeroset(zero_flags.resolve());
        if (pressure->parsed()) {
            const bakerdim::PotentialWindow win(m_press, a_gamma, c_gamma);
            const auto res = bakerdim::pressure_transfer(q, delta, t_press, win);
            std::cout << bakerdim::pressure_result_json(res) << "\n";
            if (n_periodic > 0) {
                const double pp = bakerdim::pressure_periodic(q, delta, t_press, n_periodic, win);
                std::printf("periodic estimate (n=%d): %s\n", n_periodic,
                            bakerdim::format_g17(pp).c_str());
            }
            return bakerdim::exit_ok;
        }
        if (gamma_cmd->parsed()) {
            const auto g = bakerdim::gamma_extremes(a_gamma, c_gamma, max_period);
            std::cout << bakerdim::gamma_summary_json(g) << "\n";
            return bakerdim::exit_ok;
        }
        if (verify->parsed()) {
            const RunConfig cfg = verify_flags.resolve();
            bakerdim::VerifyOptions vopts;
            vopts.skip_montecarlo = skip_mc;
            const auto results = bakerdim::run_verify_suite(cfg, vopts);
            std::cout << bakerdim::format_check_table(results);
            for (const auto& r : results)
                if (!r.pass) {
                    std::fprintf(stderr, "verify: first failing check: %s\n", r.name.c_str());
                    return bakerdim::exit_check_failed;
                }
            return bakerdim::exit_ok;
        }
    } catch (const bakerdim::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return bakerdim::exit_config;
    } catch (const bakerdim::NumericError& e) {
        std::fprintf(stderr, "numeric error: %s\n", e.what());
        return bakerdim::exit_numeric;
    } catch (const bakerdim::ResourceLimit& e) {
        std::fprintf(stderr, "resource limit: %s\n", e.what());
        return bakerdim::exit_resource;
    }
    return bakerdim::exit_ok;
}
