#include "disclose/equilibrium.hpp"

#include <algorithm>
#include <cmath>

namespace disclose::equilibrium {

namespace {

constexpr double kLog2 = 0.6931471805599453094;

void check_time(double t, const char* who) {
    if (!(t >= -1e-12 && t <= 1.0 + 1e-12))
        throw std::domain_error(std::string(who) + ": t must lie in [0,1]");
}

}  // namespace

void ModelParams::validate() const {
    // lambda = 0 is allowed: it is the no-observation limit, and several
    // reductions (Charge(0) == Zero checks, candid corner cases) rely on it
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw std::domain_error("lambda must be nonnegative and finite");
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::domain_error("sigma must be positive and finite");
    if (!(kappa > 0.0 && kappa < 1.0))
        throw std::domain_error("kappa must lie in (0,1)");
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::domain_error("beta must be positive and finite");
}

LiabilitySchedule LiabilitySchedule::constant(double rho) {
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::domain_error("constant share must lie in [0,1)");
    return {Kind::constant, rho};
}

LiabilitySchedule LiabilitySchedule::charge(double c) {
    if (!(c > 0.0 && c < 1.0))
        throw std::domain_error("charge must lie in (0,1)");
    return {Kind::charge, c};
}

double gamma1_selfconsistent(const ModelParams& p) {
    p.validate();
    const double x = p.lambda * mathkit::g_cum(1.0, p.kernel());
    if (!(x > kLog2))
        throw InfeasibleSchedule(
            "self-consistent schedule needs lambda*g(1) > log 2 so that "
            "gamma_1 < 1");
    const double gamma1 = 1.0 / std::expm1(x);
    // fixed point: the Charge(gamma_1^2) curve must end at gamma_1 itself
    const double c = gamma1 * gamma1;
    const double roundtrip = c + (1.0 - c) * std::exp(-x);
    if (std::abs(roundtrip - gamma1) > 1e-10)
        throw std::logic_error("gamma1_selfconsistent: fixed point failed");
    return gamma1;
}

double trend_sparing(double t, const ModelParams& p,
                     const LiabilitySchedule& s) {
    p.validate();
    check_time(t, "trend_sparing");
    const double decay = std::exp(-p.lambda * mathkit::g_cum(t, p.kernel()));
    switch (s.kind()) {
        case LiabilitySchedule::Kind::zero:
            return decay;
        case LiabilitySchedule::Kind::constant:
            return std::pow(decay, 1.0 - s.level());
        case LiabilitySchedule::Kind::charge:
            return s.level() + (1.0 - s.level()) * decay;
        case LiabilitySchedule::Kind::self_consistent: {
            const double g1 = gamma1_selfconsistent(p);
            const double c = g1 * g1;
            return c + (1.0 - c) * decay;
        }
    }
    throw std::logic_error("trend_sparing: unreachable schedule kind");
}

double gamma1_sparing(const ModelParams& p, const LiabilitySchedule& s) {
    return trend_sparing(1.0, p, s);
}

double liability_share(const LiabilitySchedule& s, double t,
                       const ModelParams& p) {
    p.validate();
    check_time(t, "liability_share");
    switch (s.kind()) {
        case LiabilitySchedule::Kind::zero:
            return 0.0;
        case LiabilitySchedule::Kind::constant:
            return s.level();
        case LiabilitySchedule::Kind::charge:
            return s.level() / trend_sparing(t, p, s);
        case LiabilitySchedule::Kind::self_consistent: {
            const double g1 = gamma1_selfconsistent(p);
            return g1 * g1 / trend_sparing(t, p, s);
        }
    }
    throw std::logic_error("liability_share: unreachable schedule kind");
}

namespace {

// Sparing closed form run from a shifted origin: g(t) - g(theta) replaces
// g(t). Used for the post-switch leg of candid-first curves.
double trend_restarted(double gshift, const ModelParams& p,
                       const LiabilitySchedule& s, double gtotal) {
    const double decay = std::exp(-p.lambda * gshift);
    switch (s.kind()) {
        case LiabilitySchedule::Kind::zero:
            return decay;
        case LiabilitySchedule::Kind::constant:
            return std::pow(decay, 1.0 - s.level());
        case LiabilitySchedule::Kind::charge:
            return s.level() + (1.0 - s.level()) * decay;
        case LiabilitySchedule::Kind::self_consistent: {
            // self-consistency is imposed on the restarted dynamics, so the
            // feasibility bound shifts with the remaining mass g(1)-g(theta)
            const double x = p.lambda * gtotal;
            if (!(x > kLog2))
                throw InfeasibleSchedule(
                    "self-consistent schedule needs lambda*(g(1)-g(theta)) > "
                    "log 2 after a candid opening");
            const double g1 = 1.0 / std::expm1(x);
            const double c = g1 * g1;
            return c + (1.0 - c) * decay;
        }
    }
    throw std::logic_error("trend_restarted: unreachable schedule kind");
}

}  // namespace

double trend_with_switch(double t, double theta, Regime regime,
                         const ModelParams& p, const LiabilitySchedule& s) {
    p.validate();
    check_time(t, "trend_with_switch");
    check_time(theta, "trend_with_switch (theta)");
    if (regime == Regime::sparing_first)
        return trend_sparing(std::min(t, theta), p, s);
    if (t <= theta) return 1.0;
    const auto k = p.kernel();
    const double gtheta = mathkit::g_cum(theta, k);
    const double gshift = mathkit::g_cum(t, k) - gtheta;
    const double gtotal = mathkit::g_cum(1.0, k) - gtheta;
    return trend_restarted(gshift, p, s, gtotal);
}

TrendCurve trend_ode_oracle(const ModelParams& p, const LiabilitySchedule& s,
                            int grid) {
    p.validate();
    if (grid < 2) throw std::domain_error("trend_ode_oracle: grid must be >= 2");

    // resolve the self-consistent schedule to its equivalent fixed charge;
    // the ODE then only ever sees state-dependent rho = c/gamma
    double charge = 0.0;
    LiabilitySchedule::Kind kind = s.kind();
    if (kind == LiabilitySchedule::Kind::self_consistent) {
        const double g1 = gamma1_selfconsistent(p);
        charge = g1 * g1;
        kind = LiabilitySchedule::Kind::charge;
    } else if (kind == LiabilitySchedule::Kind::charge) {
        charge = s.level();
    }

    const auto k = p.kernel();
    const auto rate = [&](double t, double gamma) {
        double rho = 0.0;
        switch (kind) {
            case LiabilitySchedule::Kind::zero: break;
            case LiabilitySchedule::Kind::constant: rho = s.level(); break;
            case LiabilitySchedule::Kind::charge: rho = charge / gamma; break;
            default: break;
        }
        return -p.lambda * gamma * (1.0 - rho) * h_rate(std::min(t, 1.0), k);
    };

    TrendCurve curve;
    curve.t.reserve(static_cast<std::size_t>(grid));
    curve.gamma.reserve(static_cast<std::size_t>(grid));

    const int intervals = grid - 1;
    // h behaves like sqrt(1-t) near t = 1, so the scheme loses its formal
    // order in the final step; the fine global step keeps that endpoint
    // error near 1e-9, well inside the 1e-8 cross-check budget
    const int substeps = std::max(1, (80000 + intervals - 1) / intervals);
    double gamma = 1.0;
    curve.t.push_back(0.0);
    curve.gamma.push_back(1.0);
    for (int i = 0; i < intervals; ++i) {
        const double t0 = static_cast<double>(i) / intervals;
        const double t1 = static_cast<double>(i + 1) / intervals;
        const double dt = (t1 - t0) / substeps;
        for (int j = 0; j < substeps; ++j) {
            const double t = t0 + j * dt;
            const double k1 = rate(t, gamma);
            const double k2 = rate(t + 0.5 * dt, gamma + 0.5 * dt * k1);
            const double k3 = rate(t + 0.5 * dt, gamma + 0.5 * dt * k2);
            const double k4 = rate(std::min(t + dt, 1.0), gamma + dt * k3);
            gamma += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            if (!(gamma > 0.0) || !std::isfinite(gamma))
                throw std::runtime_error(
                    "trend_ode_oracle: state left (0,1], step size too large");
        }
        curve.t.push_back(t1);
        curve.gamma.push_back(gamma);
    }
    curve.gamma1 = gamma;
    return curve;
}

}  // namespace disclose::equilibrium
