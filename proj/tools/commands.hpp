#pragma once

#include <string>

#include "config.hpp"

namespace disclose::cli {

// Each renderer returns the complete artifact (CSV or SVG) as one string, so
// a failure can never leave a half-written file behind.
std::string render_curve(const RunConfig& cfg);
std::string render_switch(const RunConfig& cfg);
std::string render_zone(const RunConfig& cfg);
std::string render_scienter(const RunConfig& cfg);
std::string render_mills(const RunConfig& cfg);

// Renders `command` and writes to cfg.out_path (or stdout when empty).
// Returns the process exit status; errors go to stderr verbatim and any
// partially written output file is removed.
int dispatch(const std::string& command, const RunConfig& cfg);

}  // namespace disclose::cli
