#pragma once

#include <stdexcept>
#include <string>

namespace disclose {

// Thrown when find_root is handed an interval without a sign change.
// Callers that probe FOC endpoints first should never see this; if they
// do, it means a monotonicity assumption failed.
struct NoBracket : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Self-consistent liability share needs lambda*g(1) > log 2, otherwise the
// fixed point gamma1 = 1/(e^{lambda g(1)} - 1) lands at or above 1.
struct InfeasibleSchedule : std::domain_error {
    using std::domain_error::domain_error;
};

// Sparing behaviour never pays when lambda*h(0) <= 1/kappa - 1; there is no
// charge threshold c_bar to look for.
struct NoSwitchingRegime : std::domain_error {
    using std::domain_error::domain_error;
};

// Adaptive quadrature ran out of depth budget. Carries the best estimate so
// a caller can still inspect how far off it plausibly is.
struct QuadratureError : std::runtime_error {
    double best_estimate;
    QuadratureError(const std::string& msg, double best)
        : std::runtime_error(msg), best_estimate(best) {}
};

}  // namespace disclose
