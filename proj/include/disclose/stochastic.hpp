#pragma once

#include <cstdint>

#include "disclose/equilibrium.hpp"
#include "disclose/rng.hpp"

namespace disclose::stochastic {

using equilibrium::ModelParams;
using equilibrium::Regime;

struct SimConfig {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 42;
    Regime mode = Regime::sparing_first;
    ModelParams params;

    void validate() const;
};

struct SimResult {
    double estimate = 0.0;
    double std_error = 0.0;  // sqrt(p(1-p)/n)
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

// Pr[min over [0,T] of (mu t + W_t) <= a] for a <= 0:
//   Phi((a - mu T)/sqrt(T)) + e^{2 mu a} Phi((a + mu T)/sqrt(T)).
// a = 0 returns exactly 1 (the minimum starts at 0).
double min_cdf_drifted(double a, double mu, double T);

// Pr[max over [0,T] of (mu t + W_t) <= a] for a >= 0:
//   Phi((a - mu T)/sqrt(T)) - e^{2 mu a} Phi((-a - mu T)/sqrt(T)).
// a = 0 returns exactly 0.
double max_cdf_drifted(double a, double mu, double T);

// Ratio of silent firms finishing below vs above the terminal cutoff:
// Phi(sigma/2 - lambda g(1)/sigma) / Phi(lambda g(1)/sigma - sigma/2).
// Equals 1 when lambda g(1)/sigma = sigma/2; decreasing in lambda,
// increasing in sigma.
double mills_ratio_BC(const ModelParams& p);

// One draw of the minimum of the drifted Brownian path observed only at
// Poisson(lambda) arrival times on [0,T]. No arrivals -> +infinity sentinel
// (the event "some arrival lies below a" then fails for every finite a,
// which is exactly the 1 - e^{-lambda T} factor of the closed form).
double poisson_min_sample(double mu, double T, double lambda, rng::Stream& stream);

// Scienter probability: the firm observes a signal below the terminal cutoff
// at some monitoring time inside its sparing window and stays silent.
// Zero-schedule switching times throughout (the no-litigation benchmark):
//   sparing_first: window [0,theta],   threshold a = -lambda g(theta)/sigma
//   candid_first:  window [theta,1],   threshold a = -lambda [g(1)-g(theta)]/sigma
// Direct MC: N=0 draws count as non-events. The conditional flag instead
// redraws N until N >= 1 and multiplies by 1 - e^{-lambda T} (variance
// comparison; same mean).
SimResult scienter_prob_mc(const SimConfig& cfg, bool conditional = false);

// Continuous-monitoring bound: min_cdf_drifted at the same threshold times
// the Poisson arrival factor. Domain error naming the admissibility bound
// when lambda sits below it.
double scienter_prob_closed(Regime mode, const ModelParams& p);

// Smallest lambda at which the regime's switching time is defined:
// (1/kappa - 1)/h(0) for sparing_first, -log(kappa)/g(1) for candid_first.
double admissible_lambda_bound(Regime mode, const ModelParams& p);

}  // namespace disclose::stochastic
