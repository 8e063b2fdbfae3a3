#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"

int main(int argc, char** argv) {
    CLI::App app{"equilibrium disclosure dynamics under litigation risk"};
    app.require_subcommand(1);

    std::optional<double> lambda, sigma, kappa, beta, rho, charge, theta;
    std::optional<int> grid;
    std::optional<std::uint64_t> seed, samples;
    std::optional<std::string> schedule, regime, out_path, format;
    std::string config_path;

    app.add_option("--lambda", lambda, "Poisson intensity of private observations");
    app.add_option("--sigma", sigma, "volatility of the value process");
    app.add_option("--kappa", kappa, "pay-for-performance ratio, in (0,1)");
    app.add_option("--beta", beta, "penalty weight");
    app.add_option("--schedule", schedule,
                   "liability schedule: zero|constant|charge|selfconsistent")
        ->check(CLI::IsMember({"zero", "constant", "charge", "selfconsistent"}));
    app.add_option("--rho", rho, "share level for --schedule constant");
    app.add_option("--charge", charge, "charge level for --schedule charge");
    app.add_option("--regime", regime,
                   "switching direction: sparing-first|candid-first")
        ->check(CLI::IsMember({"sparing-first", "candid-first"}));
    app.add_option("--theta", theta, "draw `curve` with a switch at this time");
    app.add_option("--grid", grid, "sample count for curve output");
    app.add_option("--seed", seed, "Monte Carlo seed");
    app.add_option("--samples", samples, "Monte Carlo sample count");
    app.add_option("--out", out_path, "output file (default: stdout)");
    app.add_option("--format", format, "artifact format: csv|svg")
        ->check(CLI::IsMember({"csv", "svg"}));
    app.add_option("--config", config_path, "config file of `key = value` lines");

    app.add_subcommand("curve", "trend-curve table for the configured schedule")
        ->fallthrough();
    app.add_subcommand("switch", "optimal switching time for the configured regime")
        ->fallthrough();
    app.add_subcommand("zone", "incremental disclosure loss/gain across charges")
        ->fallthrough();
    app.add_subcommand("scienter", "withholding probabilities across a lambda grid")
        ->fallthrough();
    app.add_subcommand("mills", "terminal below:above population ratio vs lambda")
        ->fallthrough();
    app.add_subcommand("selftest", "run the acceptance suite")->fallthrough();

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    disclose::cli::RunConfig cfg;
    try {
        if (!config_path.empty()) {
            disclose::cli::apply_config_file(config_path, cfg);
        } else if (const char* env = std::getenv(disclose::cli::kConfigEnvVar);
                   env && *env) {
            disclose::cli::apply_config_file(env, cfg);
        }
        if (lambda) cfg.params.lambda = *lambda;
        if (sigma) cfg.params.sigma = *sigma;
        if (kappa) cfg.params.kappa = *kappa;
        if (beta) cfg.params.beta = *beta;
        if (rho) cfg.rho = *rho;
        if (charge) cfg.charge = *charge;
        if (theta) cfg.theta = *theta;
        if (schedule) cfg.schedule = *schedule;
        if (regime) cfg.regime = *regime;
        if (grid) cfg.grid = *grid;
        if (seed) cfg.seed = *seed;
        if (samples) cfg.samples = *samples;
        if (out_path) cfg.out_path = *out_path;
        if (format) cfg.format = *format;
        cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return disclose::cli::dispatch(command, cfg);
}
