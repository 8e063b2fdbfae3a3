#include "disclose/valuation.hpp"

#include <algorithm>
#include <cmath>

namespace disclose::valuation {

void DamagesQuote::validate() const {
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::domain_error("rho must lie in [0,1)");
    if (!(gamma1 > 0.0 && gamma1 <= 1.0))
        throw std::domain_error("gamma1 must lie in (0,1]");
    if (!(y > 0.0) || !std::isfinite(y))
        throw std::domain_error("y must be positive and finite");
    if (!(t >= 0.0 && t <= 1.0))
        throw std::domain_error("t must lie in [0,1]");
}

double call_value(double y, double strike, double ttm, double sigma) {
    if (!(y > 0.0)) throw std::domain_error("call_value: y must be positive");
    if (!(strike > 0.0))
        throw std::domain_error("call_value: strike must be positive");
    if (!(ttm >= 0.0)) throw std::domain_error("call_value: ttm must be >= 0");
    if (!(sigma > 0.0))
        throw std::domain_error("call_value: sigma must be positive");
    if (ttm == 0.0) return std::max(y - strike, 0.0);
    const double sq = sigma * std::sqrt(ttm);
    const double d_plus = std::log(y / strike) / sq + 0.5 * sq;
    const double d_minus = d_plus - sq;
    return y * mathkit::normal_cdf(d_plus) - strike * mathkit::normal_cdf(d_minus);
}

double put_value(double y, double strike, double ttm, double sigma) {
    // parity keeps the two legs consistent by construction
    return call_value(y, strike, ttm, sigma) + strike - y;
}

double partial_expectation_below(double gamma1, double sigma) {
    if (!(gamma1 > 0.0))
        throw std::domain_error(
            "partial_expectation_below: gamma1 must be positive");
    if (!(sigma > 0.0))
        throw std::domain_error(
            "partial_expectation_below: sigma must be positive");
    const double eta = 0.5 * sigma + std::log(gamma1) / sigma;
    return mathkit::normal_cdf(eta - sigma);
}

double expected_shortfall_S1(const equilibrium::ModelParams& p,
                             const equilibrium::LiabilitySchedule& s) {
    const double gamma1 = equilibrium::gamma1_sparing(p, s);
    return gamma1 - partial_expectation_below(gamma1, p.sigma);
}

double bankruptcy_threshold(double rho, double gamma1) {
    return rho * gamma1 / (1.0 + rho);
}

double net_of_damages(double y, double rho, double gamma1) {
    const double damages = rho * std::max(gamma1 - y, 0.0);
    // limited liability: damages cannot exceed the firm itself
    return std::max(y - damages, 0.0);
}

double nondisclosure_gap(double y, double t, double rho, double gamma1,
                         double sigma) {
    if (!(y > 0.0 && y < gamma1))
        throw std::domain_error("nondisclosure_gap: requires 0 < y < gamma1");
    if (!(t >= 0.0 && t < 1.0))
        throw std::domain_error("nondisclosure_gap: requires 0 <= t < 1");
    const double call = call_value(y, gamma1, 1.0 - t, sigma);
    return rho * (gamma1 + call - y);
}

}  // namespace disclose::valuation
