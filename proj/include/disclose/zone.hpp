#pragma once

#include <optional>
#include <string>
#include <vector>

#include "disclose/switching.hpp"

namespace disclose::zone {

using equilibrium::ModelParams;

// Effect of raising the charge on aggregate voluntary disclosure:
//   DyeReduction  raising the charge lowers disclosure (loss A_L wins)
//   Goldilocks    raising the charge raises disclosure (gain A_G wins)
//   CandidOnly    charge so high that sparing never happens
enum class Label { dye_reduction, goldilocks, candid_only };

std::string label_name(Label l);

// A charge raised from c to d; both must sit below c_bar for the strict form.
struct ChargePair {
    double c;
    double d;
    void validate(double cbar) const;
};

// A_L = integral over [0, theta_d] of (gamma_d - gamma_c): disclosure lost on
// the early window where both charges keep the firm sparing. Equals
// (d-c)*integral of (1-e^{-lambda g}) by the convex-combination form (tested).
double incremental_loss(const ChargePair& pair, const ModelParams& p);

// A_G = integral over [theta_d, theta_c] of gamma_c: disclosure gained on the
// window where only the lower charge keeps the firm sparing.
double incremental_gain(const ChargePair& pair, const ModelParams& p);

// The charge where d(A)/dc flips sign: root in (0, c_bar) of
//   integral_0^theta(c) (1 - e^{-lambda g}) dt + gamma_c(theta(c)) * theta'(c) = 0.
// Below it, raising the charge reduces aggregate disclosure (Dye-like);
// above it, raising the charge raises disclosure. Absent (nullopt) when the
// expression keeps one sign on all of (0, c_bar), the small-beta case.
std::optional<double> underline_c(const ModelParams& p);

// Where a charge level falls. Ties resolve toward the lower label.
Label classify(double c, const ModelParams& p);

struct ZoneRow {
    double c;
    double theta;
    double a_loss;
    double a_gain;
    Label label;
};

struct ZoneReport {
    double cbar;
    std::optional<double> c_under;
    ModelParams params;
    std::vector<ZoneRow> rows;  // sorted by c
};

// Row per charge level on a regular grid; A_L/A_G computed against the raised
// charge d = c + d_increment (clamped into feasibility: rows whose d or c has
// no switch fall back to the theta=0 corner and zero area).
ZoneReport build_report(const ModelParams& p, double c_step = 0.01,
                        double d_increment = 0.1);

}  // namespace disclose::zone
