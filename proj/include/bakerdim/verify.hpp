#ifndef BAKERDIM_VERIFY_HPP
#define BAKERDIM_VERIFY_HPP

#include <string>
#include <vector>

#include "bakerdim/run_config.hpp"

namespace bakerdim {

struct CheckResult {
    std::string name;
    bool pass = false;
    double observed = 0.0;  // worst measured quantity
    double threshold = 0.0;
    std::string detail;
};

struct VerifyOptions {
    bool skip_montecarlo = false; // drop the sampling-based checks
};

// Executable property suite tying the dynamics to the dimension theory.
// Deterministic checks: pressure closed forms, derivative consistency,
// estimator agreement, anchor solve and its basin, curve shape, sign law,
// D' reconstruction, gamma extremes, pullback monotonicity in n.
// Monte Carlo checks (skippable): zero-set transition, invariance residual,
// backward Birkhoff vs gamma_c, filtration monotonicity in t.
std::vector<CheckResult> run_verify_suite(const RunConfig& cfg, const VerifyOptions& opts = {});

// The Bowen/SRB identity check with the transfer side and the closed-form
// side parameterized separately, so the harness itself can be fault-tested
// (evaluating the closed form at a different a must fail the check).
CheckResult bowen_identity_check(double a_transfer, double a_oracle, double c, int m,
                                 double tol = 1e-12);

bool all_passed(const std::vector<CheckResult>& results);
std::string format_check_table(const std::vector<CheckResult>& results);

} // namespace bakerdim

#endif
