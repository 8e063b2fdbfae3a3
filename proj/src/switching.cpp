#include "disclose/switching.hpp"

#include <cmath>

#include "disclose/valuation.hpp"

namespace disclose::switching {

using equilibrium::LiabilitySchedule;
using equilibrium::ModelParams;
using equilibrium::Regime;

double rho1_terminal(const ModelParams& p, const LiabilitySchedule& s) {
    switch (s.kind()) {
        case LiabilitySchedule::Kind::zero:
            return 0.0;
        case LiabilitySchedule::Kind::constant:
            return s.level();
        case LiabilitySchedule::Kind::charge:
            return equilibrium::liability_share(s, 1.0, p);
        case LiabilitySchedule::Kind::self_consistent:
            return equilibrium::gamma1_selfconsistent(p);
    }
    throw std::logic_error("rho1_terminal: unreachable schedule kind");
}

namespace {

// The litigation term kappa^{-1} * rho_1 * S_1 / beta shows up in both FOCs.
double litigation_load(const ModelParams& p, const LiabilitySchedule& s) {
    return rho1_terminal(p, s) * valuation::expected_shortfall_S1(p, s) / p.beta;
}

}  // namespace

SwitchSolution theta_candid_first(const ModelParams& p,
                                  const LiabilitySchedule& s) {
    p.validate();
    SwitchSolution out;
    out.regime = Regime::candid_first;

    // FOC: gamma_theta = kappa - rho_1 S_1 / beta, with the left side the
    // sparing curve, strictly decreasing from 1 down to gamma_1.
    const double target = p.kappa - litigation_load(p, s);
    const auto f = [&](double theta) {
        return equilibrium::trend_sparing(theta, p, s) - target;
    };
    const double f1 = f(1.0);
    if (f1 > 0.0) {
        // curve never falls to the target: switching is never worthwhile
        out.theta = 1.0;
        out.exists = false;
        out.corner = Corner::at_one;
        out.foc_residual = f1;
        return out;
    }
    out.theta = (f1 == 0.0)
                    ? 1.0
                    : mathkit::find_root(f, 0.0, 1.0, {1e-12, 0.0, 200});
    out.exists = true;
    out.corner = Corner::none;
    out.foc_residual = f(out.theta);
    return out;
}

SwitchSolution theta_sparing_first(const ModelParams& p,
                                   const LiabilitySchedule& s) {
    p.validate();
    SwitchSolution out;
    out.regime = Regime::sparing_first;

    // FOC: lambda (1-rho_theta) h(theta) (1-theta)
    //        = (kappa^{-1}-1) + kappa^{-1} gamma_theta^{-1} rho_1 S_1 / beta.
    // Left side strictly decreasing to 0, right side nondecreasing, so at
    // most one root; it exists exactly when the left side starts on top.
    const double inv_kappa = 1.0 / p.kappa;
    const double load = litigation_load(p, s);
    const auto k = p.kernel();
    const auto f = [&](double theta) {
        const double rho = equilibrium::liability_share(s, theta, p);
        const double gamma = equilibrium::trend_sparing(theta, p, s);
        const double lhs =
            p.lambda * (1.0 - rho) * mathkit::h_rate(theta, k) * (1.0 - theta);
        const double rhs = (inv_kappa - 1.0) + inv_kappa * load / gamma;
        return lhs - rhs;
    };
    const double f0 = f(0.0);
    if (f0 < 0.0) {
        // sparing is never worth opening with: candid-only
        out.theta = 0.0;
        out.exists = false;
        out.corner = Corner::at_zero;
        out.foc_residual = f0;
        return out;
    }
    out.theta = (f0 == 0.0)
                    ? 0.0
                    : mathkit::find_root(f, 0.0, 1.0, {1e-12, 0.0, 200});
    out.exists = true;
    out.corner = Corner::none;
    out.foc_residual = f(out.theta);
    return out;
}

double c_bar_quadratic(double c, const ModelParams& p) {
    p.validate();
    if (!(c >= 0.0 && c <= 1.0))
        throw std::domain_error("c_bar_quadratic: c must lie in [0,1]");
    const double E = std::exp(-p.lambda * mathkit::g_cum(1.0, p.kernel()));
    const double lh0 = p.lambda * mathkit::h_rate(0.0, p.kernel());
    const double inv_kappa = 1.0 / p.kappa;
    const double gamma1 = c + (1.0 - c) * E;
    const double S1 =
        gamma1 - valuation::partial_expectation_below(gamma1, p.sigma);
    return lh0 * (c * c * (E - 1.0) + c * (1.0 - 2.0 * E)) -
           c * (inv_kappa - 1.0) * (1.0 - E) -
           c * inv_kappa * S1 / p.beta +
           (lh0 - (inv_kappa - 1.0)) * E;
}

double c_bar(const ModelParams& p) {
    p.validate();
    const double lh0 = p.lambda * mathkit::h_rate(0.0, p.kernel());
    if (!(lh0 > 1.0 / p.kappa - 1.0))
        throw NoSwitchingRegime(
            "c_bar: requires lambda*h(0) > 1/kappa - 1 (no sparing switch "
            "even without litigation)");
    // positive at c=0, negative at c=1, single crossing in between
    return mathkit::find_root([&](double c) { return c_bar_quadratic(c, p); },
                              0.0, 1.0, {1e-12, 0.0, 200});
}

double theta_prime(double c, const ModelParams& p, double step) {
    if (!(step > 0.0) || !(c - step > 0.0) || !(c + step < 1.0))
        throw std::domain_error(
            "theta_prime: needs c - step and c + step inside (0,1)");
    const auto at = [&](double cc) {
        const auto sol = theta_sparing_first(p, LiabilitySchedule::charge(cc));
        if (!sol.exists)
            throw NoBracket("theta_prime: no sparing-first switch at the "
                            "probe charge");
        return sol.theta;
    };
    return (at(c + step) - at(c - step)) / (2.0 * step);
}

}  // namespace disclose::switching
