#include "config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace disclose::cli {

using equilibrium::LiabilitySchedule;
using equilibrium::Regime;

LiabilitySchedule RunConfig::make_schedule() const {
    if (schedule == "zero") return LiabilitySchedule::zero();
    if (schedule == "constant") return LiabilitySchedule::constant(rho);
    if (schedule == "charge") return LiabilitySchedule::charge(charge);
    if (schedule == "selfconsistent") return LiabilitySchedule::self_consistent();
    throw std::domain_error(
        "schedule must be one of zero|constant|charge|selfconsistent");
}

Regime RunConfig::make_regime() const {
    if (regime == "sparing-first") return Regime::sparing_first;
    if (regime == "candid-first") return Regime::candid_first;
    throw std::domain_error("regime must be sparing-first or candid-first");
}

void RunConfig::validate() const {
    params.validate();
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::domain_error("rho must lie in [0,1)");
    if (!(charge > 0.0 && charge < 1.0))
        throw std::domain_error("charge must lie in (0,1)");
    if (theta && !(*theta >= 0.0 && *theta <= 1.0))
        throw std::domain_error("theta must lie in [0,1]");
    if (grid < 2) throw std::domain_error("grid must be >= 2");
    if (samples < 1) throw std::domain_error("samples must be >= 1");
    if (format != "csv" && format != "svg")
        throw std::domain_error("format must be csv or svg");
    make_schedule();  // rejects unknown schedule names
    make_regime();    // rejects unknown regime names
}

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_line(const std::string& path, int line,
                           const std::string& what) {
    std::ostringstream msg;
    msg << path << ":" << line << ": " << what;
    throw std::runtime_error(msg.str());
}

double parse_double(const std::string& path, int line, const std::string& key,
                    const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        bad_line(path, line, "invalid numeric value for '" + key + "'");
    }
}

std::uint64_t parse_u64(const std::string& path, int line,
                        const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        bad_line(path, line, "invalid count value for '" + key + "'");
    }
}

}  // namespace

void apply_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            bad_line(path, lineno, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            bad_line(path, lineno, "expected 'key = value'");

        if (key == "lambda") cfg.params.lambda = parse_double(path, lineno, key, value);
        else if (key == "sigma") cfg.params.sigma = parse_double(path, lineno, key, value);
        else if (key == "kappa") cfg.params.kappa = parse_double(path, lineno, key, value);
        else if (key == "beta") cfg.params.beta = parse_double(path, lineno, key, value);
        else if (key == "rho") cfg.rho = parse_double(path, lineno, key, value);
        else if (key == "charge") cfg.charge = parse_double(path, lineno, key, value);
        else if (key == "theta") cfg.theta = parse_double(path, lineno, key, value);
        else if (key == "schedule") cfg.schedule = value;
        else if (key == "regime") cfg.regime = value;
        else if (key == "format") cfg.format = value;
        else if (key == "out") cfg.out_path = value;
        else if (key == "grid") cfg.grid = static_cast<int>(parse_u64(path, lineno, key, value));
        else if (key == "seed") cfg.seed = parse_u64(path, lineno, key, value);
        else if (key == "samples") cfg.samples = parse_u64(path, lineno, key, value);
        else bad_line(path, lineno, "unknown key '" + key + "'");
    }
}

}  // namespace disclose::cli
