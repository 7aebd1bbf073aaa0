#ifndef BAKERDIM_SYMBOLIC_HPP
#define BAKERDIM_SYMBOLIC_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "bakerdim/errors.hpp"

namespace bakerdim {

struct BakerPoint; // baker.hpp

// A finite 0/1 word indexing cylinders of the full 2-shift.
// Entries are stored chronologically unless a function documents otherwise.
using SymbolWord = std::vector<std::uint8_t>;

void validate_word(const SymbolWord& w); // throws ConfigError on non-binary entry or empty word

// The two affine branches c_0(x) = a x and c_1(x) = a + (1-a) x that invert
// the baker map's vertical expansion. Both map [0,1] into [0,1]; their images
// [0,a) and [a,1) are the cylinders of the coding partition.
struct ContractionSystem {
    double a;

    explicit ContractionSystem(double a_) : a(a_) {
        if (!(a > 0.0 && a < 1.0)) throw ConfigError("ContractionSystem: a must be in (0,1)");
    }

    double branch(std::uint8_t symbol, double x) const {
        return symbol == 0 ? a * x : a + (1.0 - a) * x;
    }
    double slope(std::uint8_t symbol) const { return symbol == 0 ? a : 1.0 - a; }
};

// Affine map x -> slope*x + offset; composition is again affine, which gives
// exact (iteration-free) periodic points below.
struct Affine {
    double slope = 1.0;
    double offset = 0.0;
    // outer(inner(x))
    static Affine compose(const Affine& outer, const Affine& inner) {
        return {outer.slope * inner.slope, outer.slope * inner.offset + outer.offset};
    }
    double fixed_point() const { return offset / (1.0 - slope); }
};

// Itinerary coding of p under the partition [0,a) / [a,1).
//   future[k] = 0  iff  u(B^k p)     < a,  k = 0..n_future-1
//   past[k]   = 0  iff  v(B^{-k} p)  < a,  k = 0..n_past-1   (most recent first)
// Boundary points resolve by the half-open convention (coord < a -> symbol 0).
std::pair<SymbolWord, SymbolWord>
encode_point(const BakerPoint& p, double a, int n_past, int n_future);

// Finite-window reconstruction of the v-coordinate from a past itinerary
// (most recent first): c_{past[0]}(c_{past[1]}(...c_{past[m-1]}(anchor)...)).
// The true v on that cylinder is within max(a,1-a)^m of the result.
double reconstruct_v(const SymbolWord& past, double a, double anchor = 0.5);

// Exact orbit average (1/p) sum_k log g(v_k) over the period-p orbit whose
// repeating itinerary block is `word`, with g(v) = c + cos(2 pi v). The v_k
// are closed-form fixed points of p-fold affine branch compositions.
// Throws PositivityViolation if c <= 1.
double periodic_orbit_logg_average(const SymbolWord& word, double a, double c);

// Enumeration helpers for periodic-word scans: `word` interpreted as the
// repeating block. A word is primitive if it is not a power of a shorter
// block; canonical if it is the lexicographically least among its rotations.
bool is_primitive_word(const SymbolWord& word);
bool is_canonical_rotation(const SymbolWord& word);

} // namespace bakerdim

#endif
