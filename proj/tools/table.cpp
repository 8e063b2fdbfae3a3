#include "table.hpp"

#include <cstdio>

namespace disclose::cli {

std::string format_sig(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

void append_joined(std::string& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
    }
    out += '\n';
}

}  // namespace

std::string render_csv(const Table& t) {
    std::string out;
    for (const auto& c : t.comments) {
        out += "# ";
        out += c;
        out += '\n';
    }
    append_joined(out, t.header);
    for (const auto& row : t.rows) append_joined(out, row);
    return out;
}

}  // namespace disclose::cli
