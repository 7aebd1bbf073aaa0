#include "bakerdim/symbolic.hpp"

#include <cmath>

#include "bakerdim/baker.hpp"

namespace bakerdim {

void validate_word(const SymbolWord& w) {
    if (w.empty()) throw ConfigError("SymbolWord: length >= 1 required");
    for (auto s : w)
        if (s > 1) throw ConfigError("SymbolWord: entries must be 0 or 1");
}

std::pair<SymbolWord, SymbolWord>
encode_point(const BakerPoint& p, double a, int n_past, int n_future) {
    ContractionSystem cs(a); // validates a
    if (n_past < 0 || n_future < 0) throw ConfigError("encode_point: window sizes must be >= 0");

    SymbolWord past, future;
    past.reserve(static_cast<size_t>(n_past));
    future.reserve(static_cast<size_t>(n_future));

    BakerPoint q = p;
    for (int k = 0; k < n_future; ++k) {
        future.push_back(q.u < a ? 0 : 1);
        q = baker_map(q, a, Direction::Forward);
    }
    // v(B^{-k} p) < a  iff the symbol consumed entering that point was 0,
    // so reading v along the backward orbit yields the past most-recent-first.
    q = p;
    for (int k = 0; k < n_past; ++k) {
        past.push_back(q.v < a ? 0 : 1);
        q = baker_map(q, a, Direction::Inverse);
    }
    return {past, future};
}

double reconstruct_v(const SymbolWord& past, double a, double anchor) {
    validate_word(past);
    ContractionSystem cs(a);
    double v = anchor;
    for (size_t k = past.size(); k-- > 0;) v = cs.branch(past[k], v);
    return v;
}

double periodic_orbit_logg_average(const SymbolWord& word, double a, double c) {
    validate_word(word);
    ContractionSystem cs(a);
    if (!(c > 1.0))
        throw PositivityViolation("periodic_orbit_logg_average: c <= 1 lets g vanish");

    const int p = static_cast<int>(word.size());
    double sum = 0.0;
    for (int j = 0; j < p; ++j) {
        // v_j is the fixed point of c_{w_{j-1}} o ... o c_{w_{j-p}};
        // fold chronologically so the composition is built inside-out.
        Affine acc;
        for (int k = j - p; k < j; ++k) {
            const std::uint8_t s = word[static_cast<size_t>(((k % p) + p) % p)];
            const Affine step{cs.slope(s), s == 0 ? 0.0 : a};
            acc = Affine::compose(step, acc);
        }
        const double v = acc.fixed_point();
        sum += std::log(c + std::cos(2.0 * M_PI * v));
    }
    return sum / p;
}

bool is_primitive_word(const SymbolWord& word) {
    const size_t p = word.size();
    for (size_t d = 1; d < p; ++d) {
        if (p % d != 0) continue;
        bool repeats = true;
        for (size_t i = d; i < p && repeats; ++i) repeats = (word[i] == word[i - d]);
        if (repeats) return false;
    }
    return true;
}

bool is_canonical_rotation(const SymbolWord& word) {
    const size_t p = word.size();
    for (size_t r = 1; r < p; ++r) {
        for (size_t i = 0; i < p; ++i) {
            const std::uint8_t rot = word[(i + r) % p];
            if (rot < word[i]) return false;
            if (rot > word[i]) break;
        }
    }
    return true;
}

} // namespace bakerdim
