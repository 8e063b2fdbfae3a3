#include "disclose/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include "disclose/switching.hpp"

namespace disclose::stochastic {

using equilibrium::ModelParams;
using equilibrium::Regime;

void SimConfig::validate() const {
    if (samples < 1)
        throw std::domain_error("samples must be >= 1");
    params.validate();
}

double min_cdf_drifted(double a, double mu, double T) {
    if (!(T > 0.0))
        throw std::domain_error("min_cdf_drifted: T must be positive");
    if (a > 0.0)
        throw std::domain_error("min_cdf_drifted: a must be <= 0");
    if (a == 0.0) return 1.0;  // the path starts at the level
    const double sq = std::sqrt(T);
    const double direct = mathkit::normal_cdf((a - mu * T) / sq);
    const double tail = mathkit::normal_cdf((a + mu * T) / sq);
    // guard the reflection weight: exp may overflow once the tail is 0
    const double reflected = (tail == 0.0) ? 0.0 : std::exp(2.0 * mu * a) * tail;
    return std::clamp(direct + reflected, 0.0, 1.0);
}

double max_cdf_drifted(double a, double mu, double T) {
    if (!(T > 0.0))
        throw std::domain_error("max_cdf_drifted: T must be positive");
    if (a < 0.0)
        throw std::domain_error("max_cdf_drifted: a must be >= 0");
    if (a == 0.0) return 0.0;  // the path starts at the level
    const double sq = std::sqrt(T);
    const double direct = mathkit::normal_cdf((a - mu * T) / sq);
    const double tail = mathkit::normal_cdf((-a - mu * T) / sq);
    const double reflected = (tail == 0.0) ? 0.0 : std::exp(2.0 * mu * a) * tail;
    return std::clamp(direct - reflected, 0.0, 1.0);
}

double mills_ratio_BC(const ModelParams& p) {
    p.validate();
    const double x = p.lambda * mathkit::g_cum(1.0, p.kernel()) / p.sigma;
    return mathkit::normal_cdf(0.5 * p.sigma - x) /
           mathkit::normal_cdf(x - 0.5 * p.sigma);
}

double admissible_lambda_bound(Regime regime, const ModelParams& p) {
    p.validate();
    const auto k = p.kernel();
    if (regime == Regime::sparing_first)
        return (1.0 / p.kappa - 1.0) / mathkit::h_rate(0.0, k);
    return -std::log(p.kappa) / mathkit::g_cum(1.0, k);
}

namespace {

// Switching time of the no-litigation problem plus the derived first-passage
// geometry: horizon and threshold for the scienter event in each regime.
struct ScienterFrame {
    double horizon;
    double level;
};

ScienterFrame scienter_frame(Regime regime, const ModelParams& p) {
    const auto zero = equilibrium::LiabilitySchedule::zero();
    const auto k = p.kernel();
    if (regime == Regime::sparing_first) {
        const double theta = switching::theta_sparing_first(p, zero).theta;
        return {theta, -p.lambda * mathkit::g_cum(theta, k) / p.sigma};
    }
    const double theta = switching::theta_candid_first(p, zero).theta;
    const double gap = mathkit::g_cum(1.0, k) - mathkit::g_cum(theta, k);
    return {1.0 - theta, -p.lambda * gap / p.sigma};
}

void check_admissible(Regime regime, const ModelParams& p) {
    const double bound = admissible_lambda_bound(regime, p);
    if (p.lambda + 1e-9 * (1.0 + p.lambda) < bound) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "lambda = %.12g is below the %s admissibility bound "
                      "%.12g (no switching window)",
                      p.lambda,
                      regime == Regime::sparing_first ? "sparing-first"
                                                      : "candid-first",
                      bound);
        throw std::domain_error(msg);
    }
}

}  // namespace

double scienter_prob_closed(Regime regime, const ModelParams& p) {
    p.validate();
    check_admissible(regime, p);
    const ScienterFrame fr = scienter_frame(regime, p);
    if (fr.horizon <= 0.0) return 0.0;  // empty monitoring window
    return min_cdf_drifted(fr.level, -0.5 * p.sigma, fr.horizon) *
           (-std::expm1(-p.lambda * fr.horizon));
}

double poisson_min_sample(double mu, double T, double lambda,
                          rng::Stream& stream) {
    if (!(T > 0.0))
        throw std::domain_error("poisson_min_sample: T must be positive");
    if (!(lambda > 0.0))
        throw std::domain_error("poisson_min_sample: lambda must be positive");
    const std::uint64_t n = stream.next_poisson(lambda * T);
    if (n == 0) return std::numeric_limits<double>::infinity();
    std::vector<double> arrivals(n);
    for (auto& tau : arrivals) tau = T * stream.next_uniform();
    std::sort(arrivals.begin(), arrivals.end());
    double w = 0.0, prev = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (const double tau : arrivals) {
        const double dt = tau - prev;
        w += mu * dt + std::sqrt(dt) * stream.next_normal();
        best = std::min(best, w);
        prev = tau;
    }
    return best;
}

SimResult scienter_prob_mc(const SimConfig& cfg, bool conditional) {
    cfg.validate();
    const ModelParams& p = cfg.params;
    check_admissible(cfg.mode, p);
    SimResult out;
    out.samples = cfg.samples;
    out.seed = cfg.seed;

    const ScienterFrame fr = scienter_frame(cfg.mode, p);
    if (fr.horizon <= 0.0) return out;  // switching at the boundary: no window

    const double mu = -0.5 * p.sigma;
    constexpr std::uint64_t kBlock = 4096;
    std::uint64_t hits = 0;
    for (std::uint64_t start = 0; start < cfg.samples; start += kBlock) {
        // one stream per block keeps runs reproducible however the blocks
        // are scheduled
        rng::Stream stream(cfg.seed, start / kBlock);
        const std::uint64_t stop = std::min(start + kBlock, cfg.samples);
        for (std::uint64_t i = start; i < stop; ++i) {
            double x;
            if (conditional) {
                do {
                    x = poisson_min_sample(mu, fr.horizon, p.lambda, stream);
                } while (std::isinf(x));
            } else {
                x = poisson_min_sample(mu, fr.horizon, p.lambda, stream);
            }
            if (x < fr.level) ++hits;
        }
    }
    const double n = static_cast<double>(cfg.samples);
    const double phat = static_cast<double>(hits) / n;
    const double se = std::sqrt(phat * (1.0 - phat) / n);
    const double scale =
        conditional ? -std::expm1(-p.lambda * fr.horizon) : 1.0;
    out.estimate = scale * phat;
    out.std_error = scale * se;
    return out;
}

}  // namespace disclose::stochastic
