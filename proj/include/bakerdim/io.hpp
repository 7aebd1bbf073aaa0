#ifndef BAKERDIM_IO_HPP
#define BAKERDIM_IO_HPP

#include <string>
#include <vector>

#include "bakerdim/baker.hpp"
#include "bakerdim/dimension.hpp"
#include "bakerdim/run_config.hpp"

namespace bakerdim {

// 17 significant digits; round-trips any double and keeps CSV output
// byte-stable across runs.
std::string format_g17(double x);

std::string classification_name(Classification c);

struct ZerosetRow {
    BakerPoint p;
    double gamma_n = 0.0;
    Classification classification = Classification::Undetermined;
};

// CSV layout: '#'-prefixed comment header (config echo, seed, gamma summary),
// then an RFC-4180-style table. No timestamps; identical runs produce
// identical bytes.
void write_curve_csv(const std::string& path, const RunConfig& cfg, const GammaSummary& gamma,
                     const std::vector<CurvePoint>& points);

void write_zeroset_csv(const std::string& path, const RunConfig& cfg, const GammaSummary& gamma,
                       double t, const std::vector<ZerosetRow>& rows, double fraction_zero,
                       double fraction_undetermined);

// Self-contained SVG 1.1 line plot of D(t) with a vertical marker at gamma_c.
void write_curve_svg(const std::string& path, const std::vector<CurvePoint>& points,
                     double gamma_c_value);

std::string pressure_result_json(const PressureResult& r);
std::string gamma_summary_json(const GammaSummary& g);

} // namespace bakerdim

#endif
