#ifndef BAKERDIM_ERRORS_HPP
#define BAKERDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bakerdim {

// Error taxonomy. The CLI maps each class to a distinct exit code:
//   ConfigError (and subclasses)  -> 2
//   NumericError (and subclasses) -> 3
//   ResourceLimit                 -> 4

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// g must map into (0, inf); violated e.g. by c <= 1 in g = c + cos(2 pi v).
struct PositivityViolation : ConfigError {
    explicit PositivityViolation(const std::string& msg) : ConfigError(msg) {}
};

// The usable parameter window (gamma_min_est, gamma_max_est) is empty or
// finer than the requested grid can resolve.
struct GammaDegenerate : ConfigError {
    explicit GammaDegenerate(const std::string& msg) : ConfigError(msg) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// An iteration (power method, Newton) exceeded its cap without meeting tolerance.
struct NonConvergence : NumericError {
    explicit NonConvergence(const std::string& msg) : NumericError(msg) {}
};

// |q| exceeded the solver cap; t is too close to gamma_min/gamma_max.
struct BoundaryBlowup : NumericError {
    explicit BoundaryBlowup(const std::string& msg) : NumericError(msg) {}
};

struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& msg) : std::runtime_error(msg) {}
};

enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_config = 2,
    exit_numeric = 3,
    exit_resource = 4,
};

} // namespace bakerdim

#endif
