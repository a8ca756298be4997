#pragma once

#include <string>
#include <vector>

#include "spinsqueeze/squeezing.hpp"

// The three reference datasets (CSV, chi_t in [0, 3], 301 points):
//   1: uniform chains, N = 2 / N = 3 / N >= 4
//   2: dimerized chains, delta in {0, 0.5, 0.75, 1, 1.1}
//   3: random dilution (large-N closed form), p in {0.25, 0.5, 0.75, 1}

namespace spinsqueeze::figures {

inline constexpr double kGridMax = 3.0;
inline constexpr int kGridPoints = 301;

struct Dataset {
    std::string filename;            // e.g. "fig2_delta0.75.csv"
    std::string label;               // e.g. "delta=0.75"
    std::vector<CurvePoint> points;  // t is chi_t here
};

std::vector<Dataset> figure(int which); // which in {1, 2, 3}

// Writes one CSV per dataset into out_dir (created if absent); returns the
// paths written.  Throws io_error on filesystem failure.
std::vector<std::string> write_figure(int which, const std::string& out_dir);

} // namespace spinsqueeze::figures
