#include "bakerdim/run_config.hpp"

#include <fstream>

#include <json.hpp>

#include "bakerdim/dimension.hpp"
#include "bakerdim/errors.hpp"

namespace bakerdim {

void validate_and_fill(RunConfig& cfg) {
    if (!(cfg.a > 0.0 && cfg.a < 1.0)) throw ConfigError("config: a must be in (0,1)");
    if (!(cfg.c > 1.0)) throw PositivityViolation("config: c must exceed 1");
    if (cfg.steps < 2) throw ConfigError("config: steps >= 2 required");
    if (cfg.samples < 1) throw ConfigError("config: samples >= 1 required");
    if (cfg.n < 1) throw ConfigError("config: n >= 1 required");
    if (cfg.window < 1 || cfg.window > 20) throw ConfigError("config: window must be in 1..20");
    if (cfg.max_period < 1) throw ConfigError("config: max_period >= 1 required");
    if (!(cfg.newton_tol > 0.0) || !(cfg.zero_threshold > 0.0) || !(cfg.rel_tol > 0.0))
        throw ConfigError("config: tolerances must be positive");

    const double gc = gamma_c(cfg.a, cfg.c);
    if (std::isnan(cfg.t_min)) cfg.t_min = gc - 0.6;
    if (std::isnan(cfg.t_max)) cfg.t_max = gc + 1.2;
    if (std::isnan(cfg.t)) cfg.t = gc;
    if (!(cfg.t_min < cfg.t_max)) throw ConfigError("config: t_min < t_max required");
}

void apply_json_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config: invalid JSON in " + path + ": " + e.what());
    }
    const auto get = [&](const char* key, auto& field) {
        if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    get("a", cfg.a);
    get("c", cfg.c);
    get("t_min", cfg.t_min);
    get("t_max", cfg.t_max);
    get("steps", cfg.steps);
    get("t", cfg.t);
    get("samples", cfg.samples);
    get("n", cfg.n);
    get("seed", cfg.seed);
    get("window", cfg.window);
    get("window_warm", cfg.window_warm);
    get("max_period", cfg.max_period);
    get("newton_tol", cfg.newton_tol);
    get("zero_threshold", cfg.zero_threshold);
    get("rel_tol", cfg.rel_tol);
    get("margin_frac", cfg.margin_frac);
    get("out", cfg.out);
    get("svg", cfg.svg);
}

} // namespace bakerdim
