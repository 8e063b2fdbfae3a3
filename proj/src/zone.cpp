#include "disclose/zone.hpp"

#include <cmath>

#include "disclose/switching.hpp"

namespace disclose::zone {

using equilibrium::LiabilitySchedule;
using equilibrium::ModelParams;

std::string label_name(Label label) {
    switch (label) {
        case Label::dye_reduction: return "DyeReduction";
        case Label::goldilocks: return "Goldilocks";
        case Label::candid_only: return "CandidOnly";
    }
    throw std::logic_error("label_name: unreachable label");
}

void ChargePair::validate(double cbar) const {
    // d == c is allowed as the degenerate zero-area pair
    if (!(c > 0.0 && c <= d && d < cbar))
        throw std::domain_error("charge pair must satisfy 0 < c <= d < c_bar");
}

namespace {

double theta_of(double c, const ModelParams& p) {
    const auto sol =
        switching::theta_sparing_first(p, LiabilitySchedule::charge(c));
    if (!sol.exists)
        throw NoSwitchingRegime(
            "no sparing-first switch at this charge (c above c_bar)");
    return sol.theta;
}

}  // namespace

double incremental_loss(const ChargePair& pair, const ModelParams& p) {
    p.validate();
    if (pair.c == pair.d) return 0.0;
    const auto low = LiabilitySchedule::charge(pair.c);
    const auto high = LiabilitySchedule::charge(pair.d);
    const double theta_d = theta_of(pair.d, p);
    return mathkit::integrate(
        [&](double t) {
            return equilibrium::trend_sparing(t, p, high) -
                   equilibrium::trend_sparing(t, p, low);
        },
        0.0, theta_d);
}

double incremental_gain(const ChargePair& pair, const ModelParams& p) {
    p.validate();
    const auto low = LiabilitySchedule::charge(pair.c);
    const double theta_c = theta_of(pair.c, p);
    const double theta_d = (pair.c == pair.d) ? theta_c : theta_of(pair.d, p);
    return mathkit::integrate(
        [&](double t) { return equilibrium::trend_sparing(t, p, low); },
        theta_d, theta_c);
}

namespace {

// The proof's marginal-area expression: d/dc of the aggregate disclosure
// yield below the switch. Positive means raising the charge still costs more
// sparing area than it buys back (the Dye side), negative the reverse.
double marginal_gap(double c, const ModelParams& p) {
    const double theta = theta_of(c, p);
    const auto k = p.kernel();
    const double mass = mathkit::integrate(
        [&](double t) {
            return 1.0 - std::exp(-p.lambda * mathkit::g_cum(t, k));
        },
        0.0, theta);
    const double gamma_at_theta =
        equilibrium::trend_sparing(theta, p, LiabilitySchedule::charge(c));
    return mass + gamma_at_theta * switching::theta_prime(c, p);
}

}  // namespace

std::optional<double> underline_c(const ModelParams& p) {
    p.validate();
    const double cbar = switching::c_bar(p);

    // sample the marginal gap across (0, c_bar) and look for a sign change;
    // points too close to either end may fail to evaluate and are skipped
    constexpr int kProbes = 63;
    double prev_c = 0.0, prev_g = 0.0;
    bool have_prev = false;
    for (int i = 1; i <= kProbes; ++i) {
        const double c = cbar * i / (kProbes + 1);
        double g;
        try {
            g = marginal_gap(c, p);
        } catch (const NoBracket&) {
            continue;
        } catch (const NoSwitchingRegime&) {
            continue;
        }
        if (have_prev && (g > 0.0) != (prev_g > 0.0)) {
            return mathkit::find_root(
                [&](double cc) { return marginal_gap(cc, p); }, prev_c, c,
                {1e-10, 0.0, 200});
        }
        prev_c = c;
        prev_g = g;
        have_prev = true;
    }
    return std::nullopt;
}

Label classify(double c, const ModelParams& p) {
    p.validate();
    if (!(c > 0.0 && c <= 1.0))
        throw std::domain_error("classify: c must lie in (0,1]");
    const double cbar = switching::c_bar(p);
    if (c > cbar) return Label::candid_only;
    const auto under = underline_c(p);
    if (under && c <= *under) return Label::dye_reduction;
    return Label::goldilocks;
}

ZoneReport build_report(const ModelParams& p, double c_step,
                        double d_increment) {
    p.validate();
    if (!(c_step > 0.0 && c_step < 1.0))
        throw std::domain_error("build_report: c_step must lie in (0,1)");
    if (!(d_increment >= 0.0))
        throw std::domain_error("build_report: d_increment must be >= 0");

    ZoneReport report;
    report.params = p;
    report.cbar = switching::c_bar(p);
    report.c_under = underline_c(p);

    for (int i = 1;; ++i) {
        const double c = i * c_step;
        if (c >= 1.0) break;
        ZoneRow row;
        row.c = c;
        if (c > report.cbar) {
            row.label = Label::candid_only;
        } else if (report.c_under && c <= *report.c_under) {
            row.label = Label::dye_reduction;
        } else {
            row.label = Label::goldilocks;
        }

        const auto sol =
            switching::theta_sparing_first(p, LiabilitySchedule::charge(c));
        if (!sol.exists) {
            // boundary fragility or c past c_bar: report an empty row
            // rather than aborting the whole table
            row.theta = 0.0;
            row.a_loss = 0.0;
            row.a_gain = 0.0;
            row.label = Label::candid_only;
            report.rows.push_back(row);
            continue;
        }
        row.theta = sol.theta;

        const double d = c + d_increment;
        double theta_d = 0.0;
        if (d_increment == 0.0) {
            theta_d = row.theta;
        } else if (d < 1.0) {
            const auto sol_d = switching::theta_sparing_first(
                p, LiabilitySchedule::charge(d));
            if (sol_d.exists) theta_d = sol_d.theta;
        }
        // theta_d = 0 is the continuous limit once the d-curve has no
        // sparing window: the loss integral is empty and the gain integral
        // runs over the whole sparing stretch of the c-curve
        const auto low = LiabilitySchedule::charge(c);
        row.a_loss = (theta_d == 0.0 || d >= 1.0)
                         ? 0.0
                         : mathkit::integrate(
                               [&](double t) {
                                   return equilibrium::trend_sparing(
                                              t, p,
                                              LiabilitySchedule::charge(d)) -
                                          equilibrium::trend_sparing(t, p, low);
                               },
                               0.0, theta_d);
        row.a_gain = mathkit::integrate(
            [&](double t) { return equilibrium::trend_sparing(t, p, low); },
            theta_d, row.theta);
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace disclose::zone
