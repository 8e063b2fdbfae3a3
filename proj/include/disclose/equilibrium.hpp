#pragma once

#include <cstdint>
#include <vector>

#include "disclose/errors.hpp"
#include "disclose/mathkit.hpp"

namespace disclose::equilibrium {

// Model primitives. lambda: Poisson intensity of private observations;
// sigma: volatility of the value process; kappa: pay-for-performance ratio,
// 0 < kappa < 1; beta: penalty weight in the manager's objective
// (alpha = (1-kappa)*beta implied).
//
// lambda = 0 is admitted as the degenerate no-observation case (curves are
// constant 1); the switching layer has stricter own preconditions.
struct ModelParams {
    double lambda = 3.0;
    double sigma = 3.0;
    double kappa = 0.7;
    double beta = 1.0;

    void validate() const;  // throws std::domain_error naming the bad field
    mathkit::Kernel kernel() const { return mathkit::Kernel{sigma}; }
};

// Liability schedule rho_t: the share of the shortfall (gamma_1 - Y) awarded
// as damages.
//   Zero           no litigation
//   Constant(rho)  time-invariant share, rho in [0,1)
//   Charge(c)      rho_t * gamma_t = c held constant, c in (0,1)
//   SelfConsistent the Charge(gamma_1^2) schedule pinned down by rho_1 = gamma_1
class LiabilitySchedule {
  public:
    enum class Kind { zero, constant, charge, self_consistent };

    static LiabilitySchedule zero() { return {Kind::zero, 0.0}; }
    static LiabilitySchedule constant(double rho);
    static LiabilitySchedule charge(double c);
    static LiabilitySchedule self_consistent() { return {Kind::self_consistent, 0.0}; }

    Kind kind() const { return kind_; }
    // The constant share (Constant) or the charge level (Charge).
    double level() const { return level_; }

  private:
    LiabilitySchedule(Kind k, double v) : kind_(k), level_(v) {}
    Kind kind_;
    double level_;
};

enum class Regime { candid_first, sparing_first };

// Terminal trend value gamma_1 (left limit at the mandatory date) of the pure
// sparing curve under schedule s.
double gamma1_sparing(const ModelParams& p, const LiabilitySchedule& s);

// gamma_1 of the self-consistent schedule, 1/(e^{lambda g(1)} - 1).
// Requires lambda*g(1) > log 2 so that gamma_1 < 1; throws InfeasibleSchedule
// otherwise. Verifies the fixed point Charge(gamma_1^2) at t=1 == gamma_1.
double gamma1_selfconsistent(const ModelParams& p);

// rho_t for schedule s at time t. Charge(c) gives c/gamma_t, the closed form
// c/(c+(1-c)e^{-lambda g(t)}); always in [0,1).
double liability_share(const LiabilitySchedule& s, double t, const ModelParams& p);

// Trend value gamma_t of the silent firm under sparing behaviour throughout:
//   Zero          e^{-lambda g(t)}
//   Constant(rho) e^{-lambda (1-rho) g(t)}
//   Charge(c)     c + (1-c) e^{-lambda g(t)}   (convex combination form)
//   SelfConsistent = Charge(gamma_1^2)
double trend_sparing(double t, const ModelParams& p, const LiabilitySchedule& s);

// Trend value with one switch at theta.
// sparing_first: sparing curve up to theta, frozen at gamma_theta afterwards.
// candid_first: 1 on [0,theta], then the sparing solution restarted at theta,
// i.e. the closed forms with g(t)-g(theta) in place of g(t) (the dynamics
// reset their origin at the switch; for Zero this is e^{-lambda[g(t)-g(theta)]}).
double trend_with_switch(double t, double theta, Regime regime,
                         const ModelParams& p, const LiabilitySchedule& s);

struct TrendCurve {
    std::vector<double> t;
    std::vector<double> gamma;
    double gamma1 = 1.0;  // value at the last sample
};

// Fixed-step RK4 integration of gamma' = -lambda*gamma*(1-rho_t)*h(t),
// gamma_0 = 1, with rho_t taken from the state (Charge: c/gamma). Cross-check
// oracle for the closed forms; not used by any production path.
TrendCurve trend_ode_oracle(const ModelParams& p, const LiabilitySchedule& s,
                            int grid);

}  // namespace disclose::equilibrium
