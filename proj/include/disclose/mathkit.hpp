#pragma once

#include <functional>

#include "disclose/errors.hpp"

namespace disclose::mathkit {

struct Tolerance {
    double abs_tol = 1e-10;
    double rel_tol = 0.0;
    int max_iter = 200;
};

double normal_cdf(double x);
double normal_pdf(double x);

// Time kernel of the disclosure-intensity ODE. h(t) = 2*Phi((sigma/2)*sqrt(1-t)) - 1
// is the probability that a signal drawn at time t beats the silent-firm value,
// decreasing from h(0) to 0 at the mandatory date.
struct Kernel {
    explicit Kernel(double sigma_);
    double sigma;
};

double h_rate(double t, const Kernel& k);

// Cumulative kernel g(t) = integral of h over [0,t]. Uses the closed form
// g = 2*H(t, sigma/2); H's time derivative is Phi(a*sqrt(1-t)) - 1/2 = h/2,
// and H(0,a) = 0, so the two routes agree (checked in the test suite).
// For very small sigma the a^2 division in H cancels badly and we integrate
// h directly instead.
double g_cum(double t, const Kernel& k);

// Adaptive Simpson with |error| <= max(abs_tol, rel_tol*|value|).
// Throws QuadratureError (carrying the best estimate) if some subinterval
// cannot meet its share of the tolerance within the depth budget.
double integrate(const std::function<double(double)>& f, double a, double b,
                 Tolerance tol = {});

// Bracketing root finder (Brent: bisection safeguarded by inverse quadratic /
// secant steps). Requires f(lo)*f(hi) <= 0, otherwise throws NoBracket.
// Returns r with |f(r)| <= abs_tol or bracket width below tolerance.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 Tolerance tol = {});

}  // namespace disclose::mathkit
