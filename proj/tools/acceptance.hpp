#pragma once

#include <ostream>

namespace disclose::cli {

// Runs the full acceptance suite: one PASS/FAIL line per criterion on `out`,
// each with its headline measurement, then a summary line. Returns the
// number of failed criteria (0 = all green). Shared by `disclose selftest`
// and the standalone acceptance test binary.
int run_acceptance(std::ostream& out);

}  // namespace disclose::cli
