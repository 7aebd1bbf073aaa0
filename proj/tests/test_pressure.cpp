#include <doctest.h>

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "bakerdim/pressure.hpp"
#include "bakerdim/rng.hpp"

using namespace bakerdim;

TEST_CASE("window potential examples") {
    const PotentialWindow w1(1, 0.45, 1.001);
    // frozen from direct evaluation of q (log(c + cos(2 pi c_0(1/2))) - t)
    CHECK(window_potential({0, 0}, 1.0, 0.0, 0.0, w1) ==
          doctest::Approx(0.146205887699584).epsilon(1e-12));
    CHECK(window_potential({1, 0}, 0.0, 1.0, 0.3, w1) ==
          doctest::Approx(std::log(0.45)).epsilon(1e-14));
    CHECK(window_potential({0, 1}, 0.0, 1.0, 0.3, w1) ==
          doctest::Approx(std::log(0.55)).epsilon(1e-14));
    CHECK(window_potential({1, 1}, 0.0, 0.0, 0.9, w1) == 0.0);
    CHECK_THROWS_AS(window_potential({0, 0, 0}, 1, 1, 0, w1), ConfigError);
}

TEST_CASE("transfer pressure closed forms at q = 0") {
    for (double a : {0.3, 0.45, 0.5}) {
        for (int m : {1, 4, 8, 12}) {
            const PotentialWindow win(m, a, 1.001);
            for (double delta : {0.0, 0.5, 1.0, 2.0}) {
                const double closed = std::log(std::pow(a, delta) + std::pow(1.0 - a, delta));
                const PressureResult r = pressure_transfer(0.0, delta, 0.37, win);
                CHECK(std::abs(r.value - closed) <= 1e-12);
            }
        }
    }
    // named values: entropy of the full 2-shift and the SRB equation P(-u) = 0
    const PotentialWindow win(8, 0.45, 1.001);
    CHECK(pressure_transfer(0, 0, 0, win).value == doctest::Approx(std::log(2.0)).epsilon(1e-13));
    CHECK(std::abs(pressure_transfer(0, 1, 0, win).value) <= 1e-12);
    CHECK(pressure_transfer(0, 2, 0, win).value ==
          doctest::Approx(std::log(0.505)).epsilon(1e-12));
}

TEST_CASE("pressure is convex in q") {
    const PotentialWindow win(8, 0.45, 1.001);
    const double h = 0.25;
    double prev2 = 0, prev1 = 0;
    int have = 0;
    for (double q = -1.0; q <= 1.0 + 1e-9; q += h) {
        const double v = pressure_transfer(q, 1.0, 0.1, win).value;
        if (have >= 2) CHECK(prev2 - 2.0 * prev1 + v >= -1e-10);
        prev2 = prev1;
        prev1 = v;
        ++have;
    }
}

TEST_CASE("eigen derivatives match finite differences") {
    const PotentialWindow win(8, 0.45, 1.001);
    const double h = 1e-5;
    for (double q : {-1.0, 0.5}) {
        for (double delta : {0.0, 1.5}) {
            const PressureResult r = pressure_transfer(q, delta, -0.2, win);
            const double fq = (pressure_transfer(q + h, delta, -0.2, win).value -
                               pressure_transfer(q - h, delta, -0.2, win).value) / (2 * h);
            const double fd = (pressure_transfer(q, delta + h, -0.2, win).value -
                               pressure_transfer(q, delta - h, -0.2, win).value) / (2 * h);
            CHECK(std::abs(fq - r.dQ_dq) <= 1e-7);
            CHECK(std::abs(fd - r.dQ_ddelta) <= 1e-7);
        }
    }
}

TEST_CASE("dQ/ddelta lies between the branch contraction rates") {
    SplitMix64 rng(17);
    const PotentialWindow win(7, 0.45, 1.001);
    for (int trial = 0; trial < 20; ++trial) {
        const double q = 2.0 * rng.next_unit() - 1.0;
        const double delta = 2.0 * rng.next_unit();
        const double t = rng.next_unit() - 0.5;
        const PressureResult r = pressure_transfer(q, delta, t, win);
        CHECK(r.dQ_ddelta < 0.0);
        CHECK(r.dQ_ddelta >= std::log(0.45) - 1e-12);
        CHECK(r.dQ_ddelta <= std::log(0.55) + 1e-12);
    }
}

TEST_CASE("power iteration cap raises NonConvergence") {
    const PotentialWindow win(8, 0.45, 1.001);
    CHECK_THROWS_AS(pressure_transfer(1.0, 1.0, 0.0, win, 1e-13, 2), NonConvergence);
}

TEST_CASE("periodic estimator identities") {
    const PotentialWindow win(8, 0.45, 1.001);
    // zero potential: 2^10 periodic words, so the estimator is exactly log 2
    CHECK(pressure_periodic(0, 0, 0, 10, win) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    // binomial identity: sum over words of prod r(w_k) = (a + 1-a)^n = 1
    CHECK(std::abs(pressure_periodic(0, 1, 0, 10, win)) <= 1e-12);
    // oracle for the same identity, summed independently over counts
    double binom = 0.0;
    for (int k = 0; k <= 10; ++k) {
        double term = std::pow(0.45, k) * std::pow(0.55, 10 - k);
        double choose = 1.0;
        for (int i = 0; i < k; ++i) choose = choose * (10 - i) / (i + 1);
        binom += choose * term;
    }
    CHECK(binom == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(pressure_periodic(0, 0, 0, 8, win), ConfigError); // n < m+1
    PeriodicOptions tiny;
    tiny.enumeration_budget = 1 << 4;
    CHECK_THROWS_AS(pressure_periodic(0, 0, 0, 12, win, tiny), ResourceLimit);
}

TEST_CASE("transfer and periodic estimators agree at a well-conditioned window") {
    // at c near 1 the subdominant spectrum makes the n = 12 trace correction
    // of order 1e-2; at c = 10 the two estimators must agree to 1e-4
    const PotentialWindow win(8, 0.45, 10.0);
    const double tr = pressure_transfer(0.5, 0.8, 0.1, win).value;
    const double pp = pressure_periodic(0.5, 0.8, 0.1, 12, win);
    CHECK(std::abs(tr - pp) <= 1e-4);
}

TEST_CASE("adaptive window selection") {
    const PotentialWindow base(1, 0.45, 1.001);
    // q = 0: the potential ignores the past window entirely
    const PressureResult r0 = pressure_adaptive(0.0, 1.3, 0.2, 1e-10, base);
    CHECK(r0.m == 1);
    CHECK(r0.est_error <= 1e-15);
    CHECK(std::abs(r0.value - std::log(std::pow(0.45, 1.3) + std::pow(0.55, 1.3))) <= 1e-12);

    // well-conditioned forcing: truncation decays fast enough for 1e-8 by m <= 14
    const PotentialWindow easy(1, 0.45, 20.0);
    const PressureResult r1 = pressure_adaptive(1.0, 1.0, 0.0, 1e-8, easy);
    CHECK(r1.m <= 14);
    CHECK(r1.est_error < 1e-8);

    // at c = 1.001 the same request cannot be met within the window cap: the
    // gap decays like 0.55^m against a Lipschitz factor 2 pi / (c-1)
    CHECK_THROWS_AS(pressure_adaptive(1.0, 1.0, 0.0, 1e-8, base), ResourceLimit);
    // unattainable tolerance
    CHECK_THROWS_AS(pressure_adaptive(1.0, 1.0, 0.0, 1e-30, easy), ResourceLimit);
}

TEST_CASE("pressure evaluation is safe for concurrent callers") {
    // the table cache is shared; hammer one window from several threads
    const PotentialWindow win(9, 0.45, 1.001);
    const double expect = pressure_transfer(0.3, 1.1, 0.2, win).value;
    std::vector<std::thread> pool;
    std::atomic<int> mismatches{0};
    for (int k = 0; k < 4; ++k)
        pool.emplace_back([&] {
            for (int i = 0; i < 8; ++i)
                if (pressure_transfer(0.3, 1.1, 0.2, win).value != expect) ++mismatches;
        });
    for (auto& th : pool) th.join();
    CHECK(mismatches == 0);
}

TEST_CASE("window truncation bound is reported") {
    const PotentialWindow win(10, 0.45, 1.001);
    const PressureResult r = pressure_transfer(0.5, 1.0, 0.0, win);
    const double bound = 0.5 * (2.0 * M_PI / 0.001) * std::pow(0.55, 10);
    CHECK(r.est_error == doctest::Approx(bound).epsilon(1e-12));
    CHECK(pressure_transfer(0.0, 1.0, 0.0, win).est_error == 0.0);
}
