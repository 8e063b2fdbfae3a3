#pragma once

#include "disclose/equilibrium.hpp"

namespace disclose::valuation {

// A damages situation: share rho, threshold gamma1, observed signal y at time t.
struct DamagesQuote {
    double rho;
    double gamma1;
    double y;
    double t;

    void validate() const;
};

// E[(Y_1 - strike)^+ | Y_t = y] for the unit-mean lognormal value process,
// ttm = 1 - t. ttm = 0 returns the terminal payoff directly.
double call_value(double y, double strike, double ttm, double sigma);

// Put via parity: put = call + strike - y = E[(strike - Y_1)^+ | Y_t = y].
double put_value(double y, double strike, double ttm, double sigma);

// Partial expectation E[Y_1 1{Y_1 < gamma1}] with Y_0 = 1: Phi(eta - sigma),
// eta = sigma/2 + log(gamma1)/sigma. Accepts any gamma1 > 0 (above 1 the
// value tends to the full expectation E[Y_1] = 1).
double partial_expectation_below(double gamma1, double sigma);

// S_1 = gamma1 - Phi(eta - sigma): the expected-damages base used by the
// switching first-order conditions, evaluated on the standardized unit
// interval with the schedule's own gamma1. Kept in this partial (not
// conditional) form deliberately; the FOCs inherit it as-is.
double expected_shortfall_S1(const equilibrium::ModelParams& p,
                             const equilibrium::LiabilitySchedule& s);

// Terminal firm value net of damages: y for y >= gamma1, otherwise
// y - rho*(gamma1-y) floored at 0 (limited liability: damages cannot exceed
// the firm).
double net_of_damages(double y, double rho, double gamma1);

// Signals below ybar1 = rho*gamma1/(1+rho) leave nothing after damages.
double bankruptcy_threshold(double rho, double gamma1);

// How much a silent firm with y < gamma1 loses by disclosing:
// gap = rho*(gamma1 + call_value(y, gamma1, 1-t) - y) > 0.
// Positive gap means every signal below gamma1 stays undisclosed, which is
// what pins the lower disclosure cutoff at gamma1 itself.
double nondisclosure_gap(double y, double t, double rho, double gamma1,
                         double sigma);

}  // namespace disclose::valuation
