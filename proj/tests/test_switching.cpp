#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "disclose/switching.hpp"
#include "disclose/valuation.hpp"

using disclose::NoBracket;
using disclose::NoSwitchingRegime;
using disclose::mathkit::g_cum;
using disclose::mathkit::h_rate;
using namespace disclose::switching;

namespace {

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

ModelParams reference() {
    ModelParams p;
    p.lambda = 2.0;
    p.sigma = 3.0;
    p.kappa = 0.7;
    p.beta = 1.0;
    return p;
}

}  // namespace

TEST_CASE("terminal share entering the bequest term") {
    const ModelParams p;  // lambda 3 needed for self-consistency
    CHECK(rho1_terminal(p, LiabilitySchedule::zero()) == 0.0);
    CHECK(rho1_terminal(p, LiabilitySchedule::constant(0.3)) == 0.3);

    const auto s = LiabilitySchedule::charge(0.2);
    const double gamma1 = disclose::equilibrium::gamma1_sparing(p, s);
    CHECK(close(rho1_terminal(p, s), 0.2 / gamma1, 1e-14));

    CHECK(close(rho1_terminal(p, LiabilitySchedule::self_consistent()),
                disclose::equilibrium::gamma1_selfconsistent(p), 1e-12));
}

TEST_CASE("switching times at the reference point") {
    const ModelParams p = reference();
    const auto zero = LiabilitySchedule::zero();
    const auto chg = LiabilitySchedule::charge(0.2);

    const auto ca_zero = theta_candid_first(p, zero);
    const auto sp_zero = theta_sparing_first(p, zero);
    const auto ca_chg = theta_candid_first(p, chg);
    const auto sp_chg = theta_sparing_first(p, chg);

    for (const auto& sol : {ca_zero, sp_zero, ca_chg, sp_chg}) {
        CHECK(sol.exists);
        CHECK(sol.corner == Corner::none);
        CHECK(std::fabs(sol.foc_residual) <= 1e-8);
    }

    // root-frozen reference values
    CHECK(close(ca_zero.theta, 0.2114960717239838, 1e-9));
    CHECK(close(sp_zero.theta, 0.65523727814993155, 1e-9));
    CHECK(close(ca_chg.theta, 0.58977974218179087, 1e-9));
    CHECK(close(sp_chg.theta, 0.28894762116637886, 1e-9));

    // litigation delays the candid-first switch and hastens the sparing one
    CHECK(ca_chg.theta > ca_zero.theta);
    CHECK(sp_chg.theta < sp_zero.theta);

    SUBCASE("no-litigation reductions") {
        // candid first: g(theta) = log(1/kappa)/lambda
        CHECK(close(g_cum(ca_zero.theta, p.kernel()),
                    std::log(1.0 / p.kappa) / p.lambda, 1e-10));
        // sparing first: (1-theta) h(theta) = (1/kappa - 1)/lambda
        CHECK(close((1.0 - sp_zero.theta) * h_rate(sp_zero.theta, p.kernel()),
                    (1.0 / p.kappa - 1.0) / p.lambda, 1e-10));
    }

    SUBCASE("halfway design point") {
        // at lambda = 2 log(1/kappa)/g(1) the candid switch sits exactly at
        // the half-mass date g(theta) = g(1)/2
        ModelParams q = p;
        const double g1 = g_cum(1.0, q.kernel());
        q.lambda = 2.0 * std::log(1.0 / q.kappa) / g1;
        const auto sol = theta_candid_first(q, zero);
        REQUIRE(sol.exists);
        CHECK(close(g_cum(sol.theta, q.kernel()), 0.5 * g1, 1e-10));
    }

    SUBCASE("reported residuals match a reconstruction of the conditions") {
        const double s1 =
            disclose::valuation::expected_shortfall_S1(p, chg);
        const double rho1 = rho1_terminal(p, chg);

        const double target = p.kappa - rho1 * s1 / p.beta;
        const double rebuilt_ca =
            disclose::equilibrium::trend_sparing(ca_chg.theta, p, chg) - target;
        CHECK(close(rebuilt_ca, ca_chg.foc_residual, 1e-12));

        const double th = sp_chg.theta;
        const double rho =
            disclose::equilibrium::liability_share(chg, th, p);
        const double gamma =
            disclose::equilibrium::trend_sparing(th, p, chg);
        const double lhs =
            p.lambda * (1.0 - rho) * h_rate(th, p.kernel()) * (1.0 - th);
        const double rhs = (1.0 / p.kappa - 1.0) +
                           (1.0 / p.kappa) * rho1 * s1 / (gamma * p.beta);
        CHECK(close(lhs - rhs, sp_chg.foc_residual, 1e-12));
    }
}

TEST_CASE("corners when observations are too scarce") {
    ModelParams p = reference();
    const auto zero = LiabilitySchedule::zero();

    // below -log(kappa)/g(1): the sparing curve never reaches kappa
    p.lambda = 0.49;
    const auto ca = theta_candid_first(p, zero);
    CHECK_FALSE(ca.exists);
    CHECK(ca.corner == Corner::at_one);
    CHECK(ca.theta == 1.0);
    CHECK(ca.foc_residual > 0.0);

    // below (1/kappa - 1)/h(0): opening sparing never pays
    p.lambda = 0.445;
    const auto sp = theta_sparing_first(p, zero);
    CHECK_FALSE(sp.exists);
    CHECK(sp.corner == Corner::at_zero);
    CHECK(sp.theta == 0.0);
    CHECK(sp.foc_residual < 0.0);
}

TEST_CASE("larger constant shares move both switches outward") {
    const ModelParams p = reference();
    const auto lo = LiabilitySchedule::constant(0.2);
    const auto hi = LiabilitySchedule::constant(0.4);
    CHECK(theta_candid_first(p, hi).theta > theta_candid_first(p, lo).theta);
    CHECK(theta_sparing_first(p, hi).theta < theta_sparing_first(p, lo).theta);
}

TEST_CASE("charge ceiling c_bar") {
    ModelParams p;
    p.lambda = 3.0;
    p.sigma = 4.0;
    p.kappa = 0.7;
    p.beta = 1.0;

    const double cbar = c_bar(p);
    CHECK(close(cbar, 0.57255712061756427, 1e-9));
    CHECK(cbar > 0.0);
    CHECK(cbar < 1.0);

    SUBCASE("the quadratic margin changes sign exactly once") {
        const double E = std::exp(-p.lambda * g_cum(1.0, p.kernel()));
        const double lh0 = p.lambda * h_rate(0.0, p.kernel());
        CHECK(close(c_bar_quadratic(0.0, p),
                    (lh0 - (1.0 / p.kappa - 1.0)) * E, 1e-15));
        CHECK(c_bar_quadratic(0.0, p) > 0.0);
        CHECK(c_bar_quadratic(1.0, p) < 0.0);
        CHECK(std::fabs(c_bar_quadratic(cbar, p)) <= 1e-10);
        CHECK_THROWS_AS(c_bar_quadratic(-0.1, p), std::domain_error);
        CHECK_THROWS_AS(c_bar_quadratic(1.1, p), std::domain_error);
    }

    SUBCASE("the ceiling is exactly where the sparing switch dies") {
        CHECK(theta_sparing_first(p, LiabilitySchedule::charge(cbar - 1e-3))
                  .exists);
        CHECK_FALSE(
            theta_sparing_first(p, LiabilitySchedule::charge(cbar + 1e-3))
                .exists);
    }

    SUBCASE("no ceiling without a switching regime") {
        ModelParams thin = p;
        thin.sigma = 3.0;
        thin.lambda = 0.4;  // lambda h(0) = 0.347 < 1/kappa - 1 = 0.429
        CHECK_THROWS_AS(c_bar(thin), NoSwitchingRegime);
    }
}

TEST_CASE("sensitivity of the sparing switch to the charge") {
    ModelParams p;
    p.lambda = 3.0;
    p.sigma = 4.0;
    p.kappa = 0.7;
    p.beta = 1.0;

    // raising the charge always shortens the sparing window here
    const double tp = theta_prime(0.2, p);
    CHECK(tp < 0.0);

    // halving the step barely moves the central difference
    CHECK(close(tp, theta_prime(0.2, p, 5e-5), 1e-5));

    // vanishing charge recovers the no-litigation switch
    const auto frail = theta_sparing_first(p, LiabilitySchedule::charge(1e-6));
    const auto zero = theta_sparing_first(p, LiabilitySchedule::zero());
    REQUIRE(frail.exists);
    CHECK(close(frail.theta, zero.theta, 1e-4));

    CHECK_THROWS_AS(theta_prime(1e-5, p), std::domain_error);
    // the probe above c_bar has no switch to differentiate
    CHECK_THROWS_AS(theta_prime(c_bar(p), p), NoBracket);
}
