#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "spinsqueeze/squeezing.hpp"

namespace spinsqueeze::csvio {

// 17 significant digits: re-parsing reproduces the double bit for bit.
// Infinities serialize as "inf"/"-inf", NaN as "nan".
std::string format_value(double v);

// Header row "<xname>,<yname>" then one "<t>,<xi2>" row per point, LF endings.
void write_curve(std::ostream& out, const std::string& xname, const std::string& yname,
                 std::span<const CurvePoint> points);

// Parses the output of write_curve (header skipped).
std::vector<CurvePoint> read_curve(std::istream& in);

} // namespace spinsqueeze::csvio
