#ifndef BAKERDIM_RUN_CONFIG_HPP
#define BAKERDIM_RUN_CONFIG_HPP

#include <cmath>
#include <cstdint>
#include <string>

namespace bakerdim {

// Shared CLI/run configuration. Unset t-values are filled from gamma_c at
// validation time (curve defaults reproduce the Figure-1 experiment window).
struct RunConfig {
    double a = 0.45;
    double c = 1.001;
    double t_min = NAN;        // curve grid; defaults to gamma_c - 0.6
    double t_max = NAN;        //             defaults to gamma_c + 1.2
    int steps = 80;
    double t = NAN;            // zeroset parameter; defaults to gamma_c
    int samples = 1000;
    int n = 5000;              // zeroset pullback length
    std::uint64_t seed = 0;
    int window = 14;           // solver pressure window
    int window_warm = 12;
    int max_period = 12;       // gamma_extremes scan depth
    double newton_tol = 1e-10;
    double zero_threshold = 1e-12;
    double rel_tol = 1e-9;
    double margin_frac = 0.01;
    std::string out;           // CSV path
    std::string svg;           // optional SVG path
};

// Throws ConfigError on violated bounds; fills NAN t-fields from gamma_c.
void validate_and_fill(RunConfig& cfg);

// Reads a JSON file and overwrites only the fields present in it.
void apply_json_file(RunConfig& cfg, const std::string& path);

} // namespace bakerdim

#endif
