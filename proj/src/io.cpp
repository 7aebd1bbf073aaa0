#include "bakerdim/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bakerdim/errors.hpp"

namespace bakerdim {

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string classification_name(Classification c) {
    switch (c) {
        case Classification::Zero: return "zero";
        case Classification::Positive: return "positive";
        default: return "undetermined";
    }
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary); // binary: byte-stable across platforms
    if (!out) throw ConfigError("io: cannot open output file " + path);
    return out;
}

void write_config_echo(std::ofstream& out, const RunConfig& cfg, const GammaSummary& gamma) {
    out << "# config: a=" << format_g17(cfg.a) << " c=" << format_g17(cfg.c)
        << " window=" << cfg.window << " newton_tol=" << format_g17(cfg.newton_tol)
        << " zero_threshold=" << format_g17(cfg.zero_threshold)
        << " rel_tol=" << format_g17(cfg.rel_tol) << " seed=" << cfg.seed << "\n";
    out << "# gamma: gamma_c=" << format_g17(gamma.gamma_c)
        << " gamma_min_est=" << format_g17(gamma.gamma_min_est)
        << " gamma_max_est=" << format_g17(gamma.gamma_max_est) << "\n";
}

} // namespace

void write_curve_csv(const std::string& path, const RunConfig& cfg, const GammaSummary& gamma,
                     const std::vector<CurvePoint>& points) {
    auto out = open_out(path);
    out << "# bakerdim curve\n";
    write_config_echo(out, cfg, gamma);
    out << "# grid: t_min=" << format_g17(cfg.t_min) << " t_max=" << format_g17(cfg.t_max)
        << " steps=" << cfg.steps << "\n";
    out << "t,D,q,residual_Q,residual_dQdq,window,mu_u,converged\n";
    for (const auto& p : points) {
        out << format_g17(p.t) << ',' << format_g17(p.D) << ',' << format_g17(p.q) << ','
            << format_g17(p.residual_Q) << ',' << format_g17(p.residual_dQdq) << ',' << p.m << ','
            << format_g17(p.mu_u) << ',' << (p.converged ? 1 : 0) << "\n";
    }
}

void write_zeroset_csv(const std::string& path, const RunConfig& cfg, const GammaSummary& gamma,
                       double t, const std::vector<ZerosetRow>& rows, double fraction_zero,
                       double fraction_undetermined) {
    auto out = open_out(path);
    out << "# bakerdim zeroset\n";
    write_config_echo(out, cfg, gamma);
    out << "# t=" << format_g17(t) << " samples=" << rows.size() << " n=" << cfg.n << "\n";
    out << "# fraction_zero=" << format_g17(fraction_zero)
        << " fraction_undetermined=" << format_g17(fraction_undetermined) << "\n";
    out << "u,v,Gamma_n,classification\n";
    for (const auto& r : rows) {
        out << format_g17(r.p.u) << ',' << format_g17(r.p.v) << ',' << format_g17(r.gamma_n)
            << ',' << classification_name(r.classification) << "\n";
    }
}

void write_curve_svg(const std::string& path, const std::vector<CurvePoint>& points,
                     double gamma_c_value) {
    auto out = open_out(path);
    const int W = 800, H = 520;
    const int ml = 70, mr = 25, mt = 25, mb = 55;
    double t_lo = HUGE_VAL, t_hi = -HUGE_VAL;
    for (const auto& p : points) {
        t_lo = std::min(t_lo, p.t);
        t_hi = std::max(t_hi, p.t);
    }
    if (!(t_hi > t_lo)) { t_lo -= 0.5; t_hi += 0.5; }
    const double D_lo = 0.0, D_hi = 1.05;
    const auto X = [&](double t) { return ml + (t - t_lo) / (t_hi - t_lo) * (W - ml - mr); };
    const auto Y = [&](double d) { return H - mb - (d - D_lo) / (D_hi - D_lo) * (H - mt - mb); };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W
        << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n"
        << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
        << H - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
        << "\" stroke=\"black\"/>\n";
    char buf[64];
    for (int i = 0; i <= 6; ++i) {
        const double tv = t_lo + (t_hi - t_lo) * i / 6.0;
        std::snprintf(buf, sizeof(buf), "%.3f", tv);
        out << "<line x1=\"" << X(tv) << "\" y1=\"" << H - mb << "\" x2=\"" << X(tv) << "\" y2=\""
            << H - mb + 5 << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << X(tv) << "\" y=\"" << H - mb + 20
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << buf
            << "</text>\n";
    }
    for (int i = 0; i <= 5; ++i) {
        const double dv = D_lo + (D_hi - D_lo) * i / 5.0;
        std::snprintf(buf, sizeof(buf), "%.2f", dv);
        out << "<line x1=\"" << ml - 5 << "\" y1=\"" << Y(dv) << "\" x2=\"" << ml << "\" y2=\""
            << Y(dv) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << ml - 9 << "\" y=\"" << Y(dv) + 4
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">" << buf
            << "</text>\n";
    }
    out << "<text x=\"" << (ml + W - mr) / 2 << "\" y=\"" << H - 12
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">t</text>\n";
    out << "<text x=\"18\" y=\"" << (mt + H - mb) / 2
        << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << (mt + H - mb) / 2 << ")\">D(t)</text>\n";
    // gamma_c marker
    out << "<line x1=\"" << X(gamma_c_value) << "\" y1=\"" << mt << "\" x2=\"" << X(gamma_c_value)
        << "\" y2=\"" << H - mb
        << "\" stroke=\"#888888\" stroke-dasharray=\"5,4\"/>\n"
        << "<text x=\"" << X(gamma_c_value) + 4 << "\" y=\"" << mt + 14
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#555555\">gamma_c</text>\n";
    // curve through converged points
    out << "<polyline fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1.6\" points=\"";
    bool first = true;
    for (const auto& p : points) {
        if (!p.converged) continue;
        std::snprintf(buf, sizeof(buf), "%.2f,%.2f", X(p.t), Y(p.D));
        if (!first) out << ' ';
        out << buf;
        first = false;
    }
    out << "\"/>\n</svg>\n";
}

std::string pressure_result_json(const PressureResult& r) {
    nlohmann::ordered_json j;
    j["value"] = r.value;
    j["dQ_dq"] = r.dQ_dq;
    j["dQ_ddelta"] = r.dQ_ddelta;
    j["m"] = r.m;
    j["power_iterations"] = r.power_iterations;
    j["est_error"] = r.est_error;
    return j.dump(2);
}

std::string gamma_summary_json(const GammaSummary& g) {
    nlohmann::ordered_json j;
    j["gamma_c"] = g.gamma_c;
    j["gamma_min_est"] = g.gamma_min_est;
    j["gamma_max_est"] = g.gamma_max_est;
    j["witness_min"] = g.witness_min;
    j["witness_max"] = g.witness_max;
    j["scan_period"] = g.scan_period;
    return j.dump(2);
}

} // namespace bakerdim
