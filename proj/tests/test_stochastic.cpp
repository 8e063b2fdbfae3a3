#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "disclose/stochastic.hpp"
#include "disclose/switching.hpp"

using disclose::mathkit::g_cum;
using disclose::rng::Stream;
using namespace disclose::stochastic;
using disclose::equilibrium::LiabilitySchedule;

namespace {
bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }
}  // namespace

TEST_CASE("running-minimum law of the drifted path") {
    // reference values from the reflection formula evaluated independently
    CHECK(close(min_cdf_drifted(-0.8, -1.5, 1.0), 0.87625010407126562, 1e-14));
    CHECK(close(min_cdf_drifted(-2.0, 0.0, 1.0), 0.045500263896358414, 1e-14));
    CHECK(close(min_cdf_drifted(-1.5, 0.5, 1.0), 0.05815090416629502, 1e-14));

    // driftless case: twice the gaussian tail
    CHECK(close(min_cdf_drifted(-1.0, 0.0, 1.0), 0.3173105078629141, 1e-14));

    CHECK(min_cdf_drifted(0.0, -1.0, 1.0) == 1.0);  // the path starts there

    SUBCASE("monotone in the level") {
        double prev = 0.0;
        for (double a : {-3.0, -2.0, -1.0, -0.5, -0.1}) {
            const double cur = min_cdf_drifted(a, -0.5, 1.0);
            CHECK(cur > prev);
            prev = cur;
        }
        CHECK(prev < 1.0);
    }

    SUBCASE("extreme drift does not overflow the reflection weight") {
        const double p = min_cdf_drifted(-1.0, 500.0, 1.0);
        CHECK(std::isfinite(p));
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        // the guarded branch: exp(2 mu a) alone would overflow here
        CHECK(min_cdf_drifted(-1.0, -500.0, 1.0) == 1.0);
    }

    CHECK_THROWS_AS(min_cdf_drifted(0.5, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(min_cdf_drifted(-0.5, 0.0, 0.0), std::domain_error);
}

TEST_CASE("running-maximum law mirrors the minimum") {
    CHECK(close(max_cdf_drifted(1.0, 0.5, 1.0), 0.50986166005467015, 1e-14));
    CHECK(max_cdf_drifted(0.0, -1.0, 1.0) == 0.0);
    CHECK_THROWS_AS(max_cdf_drifted(-0.5, 0.0, 1.0), std::domain_error);

    // flipping the path maps one law onto the other
    for (double a : {0.2, 1.0, 2.5}) {
        for (double mu : {-1.0, 0.0, 0.7}) {
            CHECK(close(max_cdf_drifted(a, mu, 2.0),
                        1.0 - min_cdf_drifted(-a, -mu, 2.0), 1e-14));
        }
    }
}

TEST_CASE("below-to-above terminal ratio") {
    ModelParams p;
    p.lambda = 2.0;
    CHECK(close(mills_ratio_BC(p), 5.9605559940328613, 1e-12));

    // unit point: lambda g(1) = sigma^2 / 2
    ModelParams pivot;
    pivot.lambda = pivot.sigma * pivot.sigma /
                   (2.0 * g_cum(1.0, pivot.kernel()));
    CHECK(close(mills_ratio_BC(pivot), 1.0, 1e-12));

    double prev = std::numeric_limits<double>::infinity();
    for (double lam : {1.0, 2.0, 3.0, 4.0, 5.0, 6.0}) {
        ModelParams q;
        q.lambda = lam;
        const double cur = mills_ratio_BC(q);
        CHECK(cur < prev);  // more observations, thinner silent tail
        prev = cur;
    }

    ModelParams lo, hi;
    lo.sigma = 2.0;
    hi.sigma = 4.0;
    CHECK(mills_ratio_BC(hi) > mills_ratio_BC(lo));
}

TEST_CASE("admissibility bounds") {
    const ModelParams p;  // sigma 3, kappa 0.7
    CHECK(close(admissible_lambda_bound(Regime::sparing_first, p),
                0.49466591991689411, 1e-12));
    CHECK(close(admissible_lambda_bound(Regime::candid_first, p),
                0.54536164056948115, 1e-12));
}

TEST_CASE("counter-based random streams") {
    SUBCASE("uniforms live strictly inside (0,1)") {
        Stream s(42, 0);
        double sum = 0.0;
        for (int i = 0; i < 100000; ++i) {
            const double u = s.next_uniform();
            CHECK(u > 0.0);
            CHECK(u < 1.0);
            sum += u;
        }
        CHECK(close(sum / 100000, 0.5, 0.01));
    }

    SUBCASE("normals have the right first two moments") {
        Stream s(42, 1);
        double sum = 0.0, sumsq = 0.0;
        const int n = 100000;
        for (int i = 0; i < n; ++i) {
            const double z = s.next_normal();
            sum += z;
            sumsq += z * z;
        }
        CHECK(close(sum / n, 0.0, 0.02));
        CHECK(close(sumsq / n, 1.0, 0.03));
    }

    SUBCASE("poisson draws match their mean") {
        Stream s(42, 2);
        double sum = 0.0;
        const int n = 20000;
        for (int i = 0; i < n; ++i) sum += static_cast<double>(s.next_poisson(3.0));
        CHECK(close(sum / n, 3.0, 0.05));
        CHECK(s.next_poisson(0.0) == 0);
        CHECK_THROWS_AS(s.next_poisson(-1.0), std::domain_error);
    }

    SUBCASE("same key, same draws; different stream, different draws") {
        Stream a(7, 3), b(7, 3), c(7, 4);
        bool all_equal = true, any_diff = false;
        for (int i = 0; i < 64; ++i) {
            const auto ua = a.next_u64();
            all_equal = all_equal && (ua == b.next_u64());
            any_diff = any_diff || (ua != c.next_u64());
        }
        CHECK(all_equal);
        CHECK(any_diff);
    }
}

TEST_CASE("poisson-sampled path minimum") {
    SUBCASE("no arrivals leave the sentinel") {
        Stream s(42, 0);
        // lambda T = 1e-6: ten draws in a row without any arrival
        for (int i = 0; i < 10; ++i)
            CHECK(poisson_min_sample(-1.5, 1.0, 1e-6, s) ==
                  std::numeric_limits<double>::infinity());
    }

    SUBCASE("reproducible across identical streams") {
        Stream a(11, 5), b(11, 5);
        for (int i = 0; i < 100; ++i)
            CHECK(poisson_min_sample(-1.5, 0.7, 2.0, a) ==
                  poisson_min_sample(-1.5, 0.7, 2.0, b));
    }

    Stream s(1, 0);
    CHECK_THROWS_AS(poisson_min_sample(0.0, 0.0, 1.0, s), std::domain_error);
    CHECK_THROWS_AS(poisson_min_sample(0.0, 1.0, 0.0, s), std::domain_error);
}

TEST_CASE("scienter probability, closed form") {
    ModelParams p;
    p.lambda = 2.0;
    CHECK(close(scienter_prob_closed(Regime::sparing_first, p),
                0.67870277591699691, 1e-9));
    CHECK(close(scienter_prob_closed(Regime::candid_first, p),
                0.75631706873020952, 1e-9));
    p.lambda = 5.0;
    CHECK(close(scienter_prob_closed(Regime::sparing_first, p),
                0.72973555163237699, 1e-9));

    SUBCASE("composes the minimum law with the arrival factor") {
        p.lambda = 2.0;
        const double theta =
            disclose::switching::theta_sparing_first(
                p, LiabilitySchedule::zero())
                .theta;
        const double level = -p.lambda * g_cum(theta, p.kernel()) / p.sigma;
        const double expected = min_cdf_drifted(level, -0.5 * p.sigma, theta) *
                                (-std::expm1(-p.lambda * theta));
        CHECK(close(scienter_prob_closed(Regime::sparing_first, p), expected,
                    1e-12));
    }

    SUBCASE("rises from the bound, peaks, then falls") {
        const ModelParams base;
        const double bound =
            admissible_lambda_bound(Regime::sparing_first, base);
        ModelParams q;
        const auto at = [&](double lam) {
            q.lambda = lam;
            return scienter_prob_closed(Regime::sparing_first, q);
        };
        const double peak = at(bound + 3.0);
        CHECK(close(peak, 0.79364040821709843, 1e-9));
        CHECK(at(bound + 1.0) < peak);
        CHECK(at(bound + 7.0) < peak);
    }

    SUBCASE("below the admissibility bound there is nothing to monitor") {
        ModelParams thin;
        thin.lambda = 0.4;
        CHECK_THROWS_WITH_AS(
            scienter_prob_closed(Regime::sparing_first, thin),
            "lambda = 0.4 is below the sparing-first admissibility bound "
            "0.494665919917 (no switching window)",
            std::domain_error);
    }
}

TEST_CASE("scienter probability, monte carlo") {
    SimConfig cfg;
    cfg.samples = 20000;
    cfg.seed = 7;
    cfg.mode = Regime::sparing_first;
    cfg.params.lambda = 2.0;

    const SimResult run1 = scienter_prob_mc(cfg);
    const SimResult run2 = scienter_prob_mc(cfg);
    CHECK(run1.estimate == run2.estimate);  // bit-identical replays
    CHECK(run1.std_error == run2.std_error);
    CHECK(run1.samples == cfg.samples);
    CHECK(run1.seed == cfg.seed);

    const double closed = scienter_prob_closed(cfg.mode, cfg.params);
    // discrete monitoring can only miss dips, it never invents them; at this
    // sparse lambda the gap below the continuous bound is genuinely large
    CHECK(run1.estimate <= closed + 3.0 * run1.std_error);
    CHECK(run1.estimate > 0.2);

    SUBCASE("conditional resampling estimates the same number") {
        const SimResult cond = scienter_prob_mc(cfg, true);
        CHECK(close(cond.estimate, run1.estimate,
                    3.0 * (cond.std_error + run1.std_error)));
        // the arrival factor scales the error bar too
        CHECK(cond.std_error < 1.0);
    }

    SUBCASE("a switch pinned at zero leaves no monitoring window") {
        SimConfig edge = cfg;
        edge.params.lambda =
            admissible_lambda_bound(Regime::sparing_first, edge.params);
        const SimResult res = scienter_prob_mc(edge);
        CHECK(res.estimate == 0.0);
        CHECK(res.std_error == 0.0);
        CHECK(scienter_prob_closed(Regime::sparing_first, edge.params) == 0.0);
    }

    SUBCASE("sample count is validated") {
        SimConfig bad = cfg;
        bad.samples = 0;
        CHECK_THROWS_AS(scienter_prob_mc(bad), std::domain_error);
    }
}
