#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "disclose/equilibrium.hpp"

using disclose::InfeasibleSchedule;
using disclose::mathkit::Kernel;
using disclose::mathkit::Tolerance;
using disclose::mathkit::g_cum;
using disclose::mathkit::h_rate;
using disclose::mathkit::integrate;
using namespace disclose::equilibrium;

namespace {

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

// quadrature-frozen cumulative kernel values at sigma = 3
constexpr double kG05 = 0.40019645676552672;
constexpr double kG10 = 0.65401545947801334;

}  // namespace

TEST_CASE("parameter validation") {
    ModelParams p;
    CHECK_NOTHROW(p.validate());

    p.kappa = 1.5;
    CHECK_THROWS_WITH_AS(p.validate(), "kappa must lie in (0,1)",
                         std::domain_error);
    p.kappa = 0.7;

    p.lambda = -1.0;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p.lambda = 0.0;  // degenerate no-observation case is fine
    CHECK_NOTHROW(p.validate());
    p.lambda = 3.0;

    p.sigma = 0.0;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p.sigma = 3.0;

    p.beta = 0.0;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
}

TEST_CASE("schedule factories enforce their ranges") {
    CHECK_NOTHROW(LiabilitySchedule::constant(0.0));
    CHECK_NOTHROW(LiabilitySchedule::constant(0.99));
    CHECK_THROWS_AS(LiabilitySchedule::constant(1.0), std::domain_error);
    CHECK_THROWS_AS(LiabilitySchedule::constant(-0.1), std::domain_error);
    CHECK_NOTHROW(LiabilitySchedule::charge(0.5));
    CHECK_THROWS_AS(LiabilitySchedule::charge(0.0), std::domain_error);
    CHECK_THROWS_AS(LiabilitySchedule::charge(1.0), std::domain_error);
}

TEST_CASE("sparing closed forms at the reference point") {
    const ModelParams p;  // lambda 3, sigma 3

    SUBCASE("no litigation: plain exponential decay") {
        const auto s = LiabilitySchedule::zero();
        CHECK(trend_sparing(0.0, p, s) == 1.0);
        CHECK(close(trend_sparing(0.5, p, s), std::exp(-3.0 * kG05), 1e-14));
        CHECK(close(trend_sparing(1.0, p, s), std::exp(-3.0 * kG10), 1e-14));
        CHECK(gamma1_sparing(p, s) == trend_sparing(1.0, p, s));
    }

    SUBCASE("constant share slows the decay by 1 - rho") {
        const auto s = LiabilitySchedule::constant(0.3);
        CHECK(close(trend_sparing(0.5, p, s), std::exp(-3.0 * 0.7 * kG05),
                    1e-14));
    }

    SUBCASE("constant charge is a convex combination with the zero curve") {
        const auto s = LiabilitySchedule::charge(0.2);
        CHECK(close(trend_sparing(0.5, p, s),
                    0.2 + 0.8 * std::exp(-3.0 * kG05), 1e-14));

        // c -> 1: the curve flattens into the constant 1
        const auto heavy = LiabilitySchedule::charge(1.0 - 1e-7);
        for (int i = 0; i <= 10; ++i)
            CHECK(close(trend_sparing(i / 10.0, p, heavy), 1.0, 1e-7));

        // c -> 0 recovers the no-litigation curve
        const auto light = LiabilitySchedule::charge(1e-13);
        const auto zero = LiabilitySchedule::zero();
        for (int i = 0; i <= 100; ++i) {
            const double t = i / 100.0;
            CHECK(close(trend_sparing(t, p, light), trend_sparing(t, p, zero),
                        1e-12));
        }
    }

    SUBCASE("self-consistent schedule hits its fixed point") {
        CHECK(close(gamma1_selfconsistent(p), 0.16356252660753377, 1e-12));
        const auto s = LiabilitySchedule::self_consistent();
        CHECK(close(trend_sparing(1.0, p, s), gamma1_selfconsistent(p), 1e-12));

        // lambda g(1) = 0.654 < log 2: gamma_1 would reach 1
        ModelParams thin = p;
        thin.lambda = 1.0;
        CHECK_THROWS_AS(gamma1_selfconsistent(thin), InfeasibleSchedule);
        CHECK_THROWS_AS(trend_sparing(0.5, thin, s), InfeasibleSchedule);
    }
}

TEST_CASE("the charge curve really solves rho_t * gamma_t = c") {
    // integrate the defining dynamics gamma' = -lambda gamma (1-rho_t) h with
    // rho_t from liability_share and compare against the closed form
    const ModelParams p;
    const auto s = LiabilitySchedule::charge(0.2);
    const auto k = p.kernel();
    for (double t : {0.25, 0.5, 0.75, 1.0}) {
        const double exponent = integrate(
            [&](double u) {
                return (1.0 - liability_share(s, u, p)) * h_rate(u, k);
            },
            0.0, t, Tolerance{1e-12, 0.0, 200});
        CHECK(close(std::exp(-p.lambda * exponent), trend_sparing(t, p, s),
                    1e-8));
    }
}

TEST_CASE("liability share per schedule") {
    const ModelParams p;
    CHECK(liability_share(LiabilitySchedule::zero(), 0.5, p) == 0.0);
    CHECK(liability_share(LiabilitySchedule::constant(0.3), 0.5, p) == 0.3);

    const auto s = LiabilitySchedule::charge(0.2);
    CHECK(liability_share(s, 0.0, p) == 0.2);  // gamma_0 = 1

    double prev = 0.2;
    for (int i = 1; i <= 10; ++i) {
        const double cur = liability_share(s, i / 10.0, p);
        CHECK(cur > prev);  // the shrinking firm owes a growing share
        CHECK(cur < 1.0);
        prev = cur;
    }

    // a steeper charge means a uniformly larger share
    CHECK(liability_share(LiabilitySchedule::charge(0.3), 0.5, p) >
          liability_share(s, 0.5, p));

    // self-consistent: by construction rho_1 equals gamma_1
    const auto sc = LiabilitySchedule::self_consistent();
    CHECK(close(liability_share(sc, 1.0, p), gamma1_selfconsistent(p), 1e-12));
}

TEST_CASE("comparative statics of the sparing curve") {
    const ModelParams p;
    const double d = 1e-5;

    for (double t : {0.3, 0.7}) {
        // heavier charge props the curve up
        CHECK(trend_sparing(t, p, LiabilitySchedule::charge(0.2 + d)) >
              trend_sparing(t, p, LiabilitySchedule::charge(0.2)));

        // more frequent observations and higher volatility both speed decay
        ModelParams fast = p;
        fast.lambda += d;
        CHECK(trend_sparing(t, fast, LiabilitySchedule::charge(0.2)) <
              trend_sparing(t, p, LiabilitySchedule::charge(0.2)));
        ModelParams wild = p;
        wild.sigma += d;
        CHECK(trend_sparing(t, wild, LiabilitySchedule::charge(0.2)) <
              trend_sparing(t, p, LiabilitySchedule::charge(0.2)));

        // larger constant share props the curve up
        CHECK(trend_sparing(t, p, LiabilitySchedule::constant(0.5)) >
              trend_sparing(t, p, LiabilitySchedule::constant(0.2)));

        // litigation dominance over the no-litigation benchmark
        CHECK(trend_sparing(t, p, LiabilitySchedule::charge(0.2)) >
              trend_sparing(t, p, LiabilitySchedule::zero()));
        CHECK(trend_sparing(t, p, LiabilitySchedule::constant(0.3)) >
              trend_sparing(t, p, LiabilitySchedule::zero()));
    }

    // no observations, no decay
    ModelParams still = p;
    still.lambda = 0.0;
    for (int i = 0; i <= 10; ++i) {
        CHECK(trend_sparing(i / 10.0, still, LiabilitySchedule::zero()) == 1.0);
        CHECK(trend_sparing(i / 10.0, still, LiabilitySchedule::charge(0.2)) ==
              1.0);
    }
}

TEST_CASE("curves with one switch") {
    const ModelParams p;
    const auto s = LiabilitySchedule::charge(0.2);
    const double theta = 0.4;

    SUBCASE("sparing first freezes at the switch") {
        const double at_switch = trend_sparing(theta, p, s);
        CHECK(trend_with_switch(0.2, theta, Regime::sparing_first, p, s) ==
              trend_sparing(0.2, p, s));
        for (double t : {0.4, 0.6, 1.0})
            CHECK(trend_with_switch(t, theta, Regime::sparing_first, p, s) ==
                  at_switch);

        // switching at the deadline never bites: the pure sparing curve
        for (int i = 0; i <= 10; ++i) {
            const double t = i / 10.0;
            CHECK(trend_with_switch(t, 1.0, Regime::sparing_first, p, s) ==
                  trend_sparing(t, p, s));
        }
    }

    SUBCASE("candid first restarts the dynamics at the switch") {
        for (double t : {0.0, 0.2, 0.4})
            CHECK(trend_with_switch(t, theta, Regime::candid_first, p, s) ==
                  1.0);

        // just after the switch the curve leaves 1 continuously
        CHECK(close(trend_with_switch(theta + 1e-9, theta,
                                      Regime::candid_first, p, s),
                    1.0, 1e-8));

        // no litigation: the restarted curve is e^{-lambda (g(t)-g(theta))}
        const auto zero = LiabilitySchedule::zero();
        const auto k = p.kernel();
        for (double t : {0.5, 0.8, 1.0}) {
            const double expected =
                std::exp(-p.lambda * (g_cum(t, k) - g_cum(theta, k)));
            CHECK(close(trend_with_switch(t, theta, Regime::candid_first, p,
                                          zero),
                        expected, 1e-14));
        }

        // candid throughout: the constant 1
        CHECK(trend_with_switch(0.7, 1.0, Regime::candid_first, p, s) == 1.0);

        // immediate switch: the pure sparing curve
        for (int i = 0; i <= 10; ++i) {
            const double t = i / 10.0;
            CHECK(close(trend_with_switch(t, 0.0, Regime::candid_first, p, s),
                        trend_sparing(t, p, s), 1e-14));
        }
    }

    SUBCASE("candid first with a self-consistent tail") {
        // feasibility now depends on the remaining mass g(1) - g(theta)
        const auto sc = LiabilitySchedule::self_consistent();
        CHECK_NOTHROW(
            trend_with_switch(0.9, 0.1, Regime::candid_first, p, sc));
        // a late switch leaves too little mass: lambda*(g(1)-g(theta)) < log 2
        CHECK_THROWS_AS(
            trend_with_switch(0.95, 0.9, Regime::candid_first, p, sc),
            InfeasibleSchedule);
    }
}

TEST_CASE("runge-kutta oracle") {
    CHECK_THROWS_AS(trend_ode_oracle(ModelParams{}, LiabilitySchedule::zero(), 1),
                    std::domain_error);

    SUBCASE("no observations keep the state pinned at 1") {
        ModelParams still;
        still.lambda = 0.0;
        const auto curve =
            trend_ode_oracle(still, LiabilitySchedule::charge(0.2), 11);
        for (double g : curve.gamma) CHECK(g == 1.0);
    }

    SUBCASE("agrees with the closed form") {
        ModelParams p;
        p.lambda = 2.0;
        const auto s = LiabilitySchedule::zero();
        const auto curve = trend_ode_oracle(p, s, 51);
        REQUIRE(curve.t.size() == 51);
        for (std::size_t i = 0; i < curve.t.size(); ++i)
            CHECK(close(curve.gamma[i], trend_sparing(curve.t[i], p, s), 1e-8));
        CHECK(curve.gamma1 == curve.gamma.back());
    }

    SUBCASE("self-consistent schedule resolves to its fixed charge") {
        const ModelParams p;
        const auto curve =
            trend_ode_oracle(p, LiabilitySchedule::self_consistent(), 21);
        CHECK(close(curve.gamma1, gamma1_selfconsistent(p), 1e-8));
    }
}
