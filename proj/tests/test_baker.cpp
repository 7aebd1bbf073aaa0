#include <doctest.h>

#include <cmath>
#include <span>

#include "bakerdim/baker.hpp"
#include "bakerdim/rng.hpp"

using namespace bakerdim;

TEST_CASE("baker map branches") {
    const double a = 0.45;
    BakerPoint p = baker_map({0.2, 0.3}, a);
    CHECK(p.u == doctest::Approx(0.2 / 0.45).epsilon(1e-15));
    CHECK(p.v == doctest::Approx(0.135).epsilon(1e-15));

    p = baker_map({0.7, 0.5}, a);
    CHECK(p.u == doctest::Approx(0.25 / 0.55).epsilon(1e-15));
    CHECK(p.v == doctest::Approx(0.725).epsilon(1e-15));

    p = baker_map({0.2 / 0.45, 0.135}, a, Direction::Inverse);
    CHECK(p.u == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(p.v == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("conjugacy roundtrip within 1e-15") {
    SplitMix64 rng(3);
    for (double a : {0.3, 0.45, 0.5}) {
        for (int trial = 0; trial < 500; ++trial) {
            const BakerPoint p{rng.next_unit(), rng.next_unit()};
            const BakerPoint r1 = baker_map(baker_map(p, a), a, Direction::Inverse);
            const BakerPoint r2 = baker_map(baker_map(p, a, Direction::Inverse), a);
            CHECK(std::abs(r1.u - p.u) <= 1e-15);
            CHECK(std::abs(r1.v - p.v) <= 1e-15);
            CHECK(std::abs(r2.u - p.u) <= 1e-15);
            CHECK(std::abs(r2.v - p.v) <= 1e-15);
        }
    }
}

TEST_CASE("stable contraction rate") {
    CHECK(stable_log_contraction({0.2, 0.9}, 0.45) == doctest::Approx(std::log(0.45)).epsilon(1e-15));
    CHECK(stable_log_contraction({0.7, 0.1}, 0.45) == doctest::Approx(std::log(0.55)).epsilon(1e-15));
    CHECK(stable_log_contraction({0.12, 0.5}, 0.5) == doctest::Approx(std::log(0.5)).epsilon(1e-15));
    CHECK(stable_log_contraction({0.99, 0.5}, 0.5) == doctest::Approx(std::log(0.5)).epsilon(1e-15));
}

TEST_CASE("fibre step basics") {
    const FibreParams params = FibreParams::cosine(0.45, 0.0, 1.001);
    CHECK(fibre_step(0.0, {0.3, 0.7}, params) == 0.0);
    // v = 1/4 kills the cosine: f(1) = 1.001 * (1/2)
    CHECK(fibre_step(1.0, {0.3, 0.25}, params) == doctest::Approx(0.5005).epsilon(1e-12));

    // finite-difference oracle for h'(0) = 1: df/dx at 0 equals e^{-t} g
    SplitMix64 rng(5);
    for (double t : {-0.4, 0.0, 0.7}) {
        const FibreParams pt = FibreParams::cosine(0.45, t, 1.001);
        for (int trial = 0; trial < 50; ++trial) {
            const BakerPoint p{rng.next_unit(), rng.next_unit()};
            const double h = 1e-8;
            const double fd = (fibre_step(h, p, pt) - fibre_step(0.0, p, pt)) / h;
            const double exact = pt.r * pt.forcing(p);
            CHECK(std::abs(fd - exact) / exact <= 1e-6);
        }
    }
}

TEST_CASE("cap bounds the fibre dynamics") {
    SplitMix64 rng(6);
    for (double t : {-0.8, 0.0, 1.3}) {
        const FibreParams params = FibreParams::cosine(0.45, t, 1.001);
        for (int trial = 0; trial < 100; ++trial) {
            const BakerPoint p{rng.next_unit(), rng.next_unit()};
            const double x = rng.next_unit() * params.cap;
            CHECK(fibre_step(x, p, params) < params.cap);
        }
    }
}

TEST_CASE("pullback with constant forcing has closed-form limits") {
    // e^{-t} g x/(1+x) = x has the positive root e^{-t} g - 1 when that is > 0
    const FibreParams sup = FibreParams::constant(0.45, 0.0, 2.0);
    const PullbackResult pos = pullback_graph(BakerPoint{0.37, 0.81}, sup);
    CHECK(pos.classification == Classification::Positive);
    CHECK(pos.value == doctest::Approx(1.0).epsilon(1e-8));

    const FibreParams sub = FibreParams::constant(0.45, std::log(2.0) + 0.1, 2.0);
    const PullbackResult zero = pullback_graph(BakerPoint{0.37, 0.81}, sub);
    CHECK(zero.classification == Classification::Zero);
    CHECK(zero.value < 1e-12);
}

TEST_CASE("pullback values are monotone in n and in t") {
    const double a = 0.45, c = 1.001;
    SplitMix64 rng(7);
    const FibreParams pt1 = FibreParams::cosine(a, -0.9, c);
    const FibreParams pt2 = FibreParams::cosine(a, -0.7, c);
    for (int trial = 0; trial < 50; ++trial) {
        const BakerPoint p{rng.next_unit(), rng.next_unit()};
        const auto past = backward_orbit(p, a, 512);
        double prev = HUGE_VAL;
        for (int n = 1; n <= 64; ++n) {
            const double x = pullback_value(past, pt1, n);
            CHECK(x <= prev);
            prev = x;
            // t-monotonicity at matched n: smaller t dominates
            CHECK(x >= pullback_value(past, pt2, n));
        }
    }
}

TEST_CASE("pullback argument validation") {
    const FibreParams params = FibreParams::cosine(0.45, 0.0, 1.001);
    CHECK_THROWS_AS(pullback_value(BakerPoint{0.5, 0.5}, params, 0), ConfigError);
    PullbackOptions bad;
    bad.n_max = 0;
    CHECK_THROWS_AS(pullback_graph(BakerPoint{0.5, 0.5}, params, bad), ConfigError);
    CHECK_THROWS_AS(FibreParams::cosine(0.45, 0.0, 1.0), PositivityViolation);
    CHECK_THROWS_AS(FibreParams::cosine(1.2, 0.0, 2.0), ConfigError);
}

TEST_CASE("trichotomy: backward averages gate the classification") {
    // if Gamma^(n) < t - 0.1 the point should be classified Zero, and
    // Positive if Gamma^(n) > t + 0.1, for at least 95% of samples
    const double a = 0.45, c = 1.001;
    const double gc = -0.6484295469516393;
    SplitMix64 rng(31);
    for (double t : {gc - 0.1, gc + 0.1}) {
        const FibreParams params = FibreParams::cosine(a, t, c);
        PullbackOptions opts;
        opts.n_max = 5000;
        int zero_gate = 0, zero_ok = 0, pos_gate = 0, pos_ok = 0;
        for (int s = 0; s < 200; ++s) {
            const BakerPoint p{rng.next_unit(), rng.next_unit()};
            const auto past = backward_orbit(p, a, 5000);
            const std::span<const BakerPoint> sp(past);
            const double avg = backward_birkhoff(sp, params, 5000);
            const Classification cls = pullback_graph(sp, params, opts).classification;
            if (avg < t - 0.1) {
                ++zero_gate;
                zero_ok += (cls == Classification::Zero);
            } else if (avg > t + 0.1) {
                ++pos_gate;
                pos_ok += (cls == Classification::Positive);
            }
        }
        if (zero_gate > 0) CHECK(zero_ok >= static_cast<int>(0.95 * zero_gate));
        if (pos_gate > 0) CHECK(pos_ok >= static_cast<int>(0.95 * pos_gate));
        CHECK(zero_gate + pos_gate > 0);
    }
}

TEST_CASE("backward Birkhoff averages") {
    const FibreParams params = FibreParams::cosine(0.45, 0.0, 1.001);
    // the corners are fixed points with g = c + 1
    CHECK(backward_birkhoff(BakerPoint{0.0, 0.0}, params, 7) ==
          doctest::Approx(std::log(2.001)).epsilon(1e-13));
    CHECK(backward_birkhoff(BakerPoint{1.0, 1.0}, params, 11) ==
          doctest::Approx(std::log(2.001)).epsilon(1e-13));

    SplitMix64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const BakerPoint p{rng.next_unit(), rng.next_unit()};
        const double g = backward_birkhoff(p, params, 200);
        CHECK(g >= std::log(0.001) - 1e-12);
        CHECK(g <= std::log(2.001) + 1e-12);
    }
}
