#include "spinsqueeze/figures.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>

#include "spinsqueeze/analytic.hpp"
#include "spinsqueeze/csv.hpp"
#include "spinsqueeze/disorder.hpp"
#include "spinsqueeze/errors.hpp"

namespace spinsqueeze::figures {

namespace {

std::vector<CurvePoint> sample(const std::function<double(double)>& xi_of_chit) {
    std::vector<CurvePoint> pts;
    pts.reserve(kGridPoints);
    for (int k = 0; k < kGridPoints; ++k) {
        const double chit = kGridMax * k / (kGridPoints - 1);
        pts.push_back({chit, xi_of_chit(chit)});
    }
    return pts;
}

std::string trimmed(double v) {
    std::string s = std::to_string(v);
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
}

} // namespace

std::vector<Dataset> figure(int which) {
    std::vector<Dataset> out;
    switch (which) {
        case 1: {
            out.push_back({"fig1_n2.csv", "N=2",
                           sample([](double x) { return analytic::xi_pi4_n2(1.0, x); })});
            out.push_back({"fig1_n3.csv", "N=3", sample([](double x) {
                               return analytic::xi_pi4_n3(1.0, 1.0, 1.0, x);
                           })});
            out.push_back({"fig1_uniform.csv", "N>=4",
                           sample([](double x) { return analytic::xi_pi4_uniform(1.0, x); })});
            break;
        }
        case 2: {
            for (double delta : {0.0, 0.5, 0.75, 1.0, 1.1}) {
                out.push_back({"fig2_delta" + trimmed(delta) + ".csv",
                               "delta=" + trimmed(delta), sample([delta](double x) {
                                   return analytic::xi_pi4_dimerized(1.0, delta, x);
                               })});
            }
            break;
        }
        case 3: {
            for (double p : {0.25, 0.5, 0.75, 1.0}) {
                out.push_back({"fig3_p" + trimmed(p) + ".csv", "p=" + trimmed(p),
                               sample([p](double x) {
                                   return disorder::xi_random_analytic(p, 1.0, x);
                               })});
            }
            break;
        }
        default:
            throw std::invalid_argument("figure: which must be 1, 2, or 3");
    }
    return out;
}

std::vector<std::string> write_figure(int which, const std::string& out_dir) {
    const auto datasets = figure(which);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw io_error("cannot create output directory " + out_dir + ": " + ec.message());
    std::vector<std::string> paths;
    for (const auto& ds : datasets) {
        const auto path = std::filesystem::path(out_dir) / ds.filename;
        std::ofstream out(path);
        if (!out) throw io_error("cannot open " + path.string() + " for writing");
        csvio::write_curve(out, "chi_t", "xi2", ds.points);
        if (!out.good()) throw io_error("write failure on " + path.string());
        paths.push_back(path.string());
    }
    return paths;
}

} // namespace spinsqueeze::figures
