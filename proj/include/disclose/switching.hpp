#pragma once

#include "disclose/equilibrium.hpp"

namespace disclose::switching {

using equilibrium::LiabilitySchedule;
using equilibrium::ModelParams;
using equilibrium::Regime;

enum class Corner { none, at_zero, at_one };

struct SwitchSolution {
    double theta = 0.0;          // corner value when no interior root exists
    Regime regime = Regime::sparing_first;
    double foc_residual = 0.0;   // FOC value at theta (exact 0 impossible; see tol)
    bool exists = false;         // interior (or boundary-touching) root found
    Corner corner = Corner::none;  // which corner the FOC sign pattern selects
};

// rho_1 entering the FOC bequest terms, per schedule on the standardized
// interval: Zero -> 0, Constant -> rho, Charge(c) -> c/gamma1(c),
// SelfConsistent -> gamma1.
double rho1_terminal(const ModelParams& p, const LiabilitySchedule& s);

// Candid-first optimum: theta solves gamma_sparing(theta) = kappa - rho1*S1/beta.
// The left side falls from 1 to gamma1, so an interior root exists iff
// gamma1 <= rhs <= 1; otherwise the switch sits at theta = 1 (candid
// throughout). Zero schedule reduces to g(theta) = log(1/kappa)/lambda.
SwitchSolution theta_candid_first(const ModelParams& p, const LiabilitySchedule& s);

// Sparing-first optimum: theta solves
//   lambda*(1-rho_theta)*h(theta)*(1-theta) = (1/kappa - 1) + (1/kappa)*rho1*S1/(gamma_theta*beta).
// Left side strictly decreasing to 0, right side nondecreasing, so the root
// is unique when the left side starts above the right; otherwise theta = 0
// (sparing never pays, candid-only). Zero schedule reduces to
// (1-theta)h(theta) = (1/kappa - 1)/lambda.
SwitchSolution theta_sparing_first(const ModelParams& p, const LiabilitySchedule& s);

// Largest charge at which a sparing-first switch still exists: the root in
// (0,1) of the quadratic-plus-shortfall expression obtained by multiplying
// the theta=0 existence margin by gamma1(c). Positive at c=0, negative at
// c=1 whenever lambda*h(0) > 1/kappa - 1; throws NoSwitchingRegime otherwise.
double c_bar(const ModelParams& p);

// The quadratic form itself (exposed for tests and the zone layer).
double c_bar_quadratic(double c, const ModelParams& p);

// Central-difference dtheta/dc of the sparing-first switch under Charge(c).
// Both neighbours must admit a switch; throws NoBracket otherwise.
double theta_prime(double c, const ModelParams& p, double step = 1e-4);

}  // namespace disclose::switching
