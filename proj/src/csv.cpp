#include "spinsqueeze/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>

#include "spinsqueeze/errors.hpp"

namespace spinsqueeze::csvio {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_curve(std::ostream& out, const std::string& xname, const std::string& yname,
                 std::span<const CurvePoint> points) {
    out << xname << ',' << yname << '\n';
    for (const auto& p : points) {
        out << format_value(p.t) << ',' << format_value(p.xi2) << '\n';
    }
}

std::vector<CurvePoint> read_curve(std::istream& in) {
    std::vector<CurvePoint> points;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (first) { // header
            first = false;
            continue;
        }
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw io_error("csv row without separator: " + line);
        }
        CurvePoint p;
        p.t = std::strtod(line.substr(0, comma).c_str(), nullptr);
        p.xi2 = std::strtod(line.c_str() + comma + 1, nullptr);
        points.push_back(p);
    }
    return points;
}

} // namespace spinsqueeze::csvio
