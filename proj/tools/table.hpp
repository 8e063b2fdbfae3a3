#pragma once

#include <string>
#include <vector>

namespace disclose::cli {

// A CSV artifact: '#'-prefixed metadata lines, one header row, data rows.
// Rendering is deterministic: fields are pre-formatted strings and numbers
// always go through format_sig, so identical tables give identical bytes.
struct Table {
    std::vector<std::string> comments;  // emitted as "# <text>"
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Fixed 12-significant-digit formatting ("%.12g", C locale, '.' decimal).
std::string format_sig(double x);

std::string render_csv(const Table& t);

}  // namespace disclose::cli
