#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "disclose/equilibrium.hpp"

namespace disclose::cli {

// Everything a subcommand needs. Assembled in layers: built-in defaults,
// then the config file (--config flag, or the DISCLOSE_CONFIG environment
// variable), then command-line flags. Later layers win.
struct RunConfig {
    equilibrium::ModelParams params;  // lambda 3, sigma 3, kappa 0.7, beta 1
    std::string schedule = "charge";  // zero | constant | charge | selfconsistent
    double rho = 0.3;                 // level for schedule = constant
    double charge = 0.2;              // level for schedule = charge
    std::string regime = "sparing-first";  // or candid-first
    std::optional<double> theta;      // forced switching time for `curve`
    int grid = 401;
    std::uint64_t seed = 42;
    std::uint64_t samples = 100000;
    std::string out_path;             // empty = stdout
    std::string format = "csv";       // csv | svg

    equilibrium::LiabilitySchedule make_schedule() const;
    equilibrium::Regime make_regime() const;

    // Checks every field against its constraint; throws std::domain_error
    // naming the field (e.g. "kappa must lie in (0,1)").
    void validate() const;
};

// Reads `key = value` lines into cfg. '#' starts a comment, blank lines are
// skipped. Unknown keys and malformed lines are rejected with the offending
// line number; value constraints are checked later by RunConfig::validate()
// so that flags may still override a bad file value.
void apply_config_file(const std::string& path, RunConfig& cfg);

// Name of the environment variable holding the default config path.
inline constexpr const char* kConfigEnvVar = "DISCLOSE_CONFIG";

}  // namespace disclose::cli
