// spinsqueeze: squeezing curves, reference figure datasets, short-time
// analysis, and self-verification for Ising-chain spin squeezing.
//
// Exit codes: 0 success, 1 verification failure, 2 bad input,
//             3 formula-regime violation, 4 output I/O failure.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinsqueeze/analytic.hpp"
#include "spinsqueeze/chain.hpp"
#include "spinsqueeze/csv.hpp"
#include "spinsqueeze/figures.hpp"
#include "spinsqueeze/kernels.hpp"
#include "spinsqueeze/pair_file.hpp"
#include "spinsqueeze/short_time.hpp"
#include "spinsqueeze/verify.hpp"

namespace {

using namespace spinsqueeze;

constexpr int kExitVerifyFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitRegime = 3;
constexpr int kExitIo = 4;

// Relative paths resolve against SPINSQUEEZE_OUT_DIR when it is set.
std::string resolve_output_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (path.empty() || fs::path(path).is_absolute()) return path;
    if (const char* base = std::getenv("SPINSQUEEZE_OUT_DIR")) {
        if (*base) return (fs::path(base) / path).string();
    }
    return path;
}

std::vector<double> parse_coupling_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size()) throw invalid_chain_error("bad coupling value: " + item);
        out.push_back(v);
    }
    return out;
}

struct CurveOptions {
    bool uniform = false, dimerized = false, random = false;
    std::string chain_list;
    int n = 4;
    double chi = 1.0;
    double delta = 0.0;
    double p = 1.0;
    std::uint64_t seed = 0;
    double theta = M_PI_4;
    double tmin = 0.0, tmax = 3.0;
    int points = 301;
    std::string out = "-";
};

int run_curve(const CurveOptions& opt) {
    const int mode_count = (opt.uniform ? 1 : 0) + (opt.dimerized ? 1 : 0) +
                           (opt.random ? 1 : 0) + (opt.chain_list.empty() ? 0 : 1);
    if (mode_count != 1) {
        std::cerr << "curve: pick exactly one of --uniform/--dimerized/--random/--chain\n";
        return kExitBadInput;
    }
    if (!(opt.tmin < opt.tmax) || opt.points < 2 || !std::isfinite(opt.tmin) ||
        !std::isfinite(opt.tmax)) {
        std::cerr << "curve: need tmin < tmax and points >= 2\n";
        return kExitBadInput;
    }

    std::optional<CouplingChain> chain;
    double chi_ref = 1.0; // the grid is in chi_t units; explicit chains use chi_ref = 1
    if (opt.uniform) {
        chain.emplace(make_uniform(opt.n, opt.chi));
        chi_ref = opt.chi;
    } else if (opt.dimerized) {
        if (opt.n % 2 != 0) {
            std::cerr << "curve: --dimerized needs an even --n\n";
            return kExitBadInput;
        }
        chain.emplace(make_dimerized({opt.n / 2, opt.chi, opt.delta}));
        chi_ref = opt.chi;
    } else if (opt.random) {
        chain.emplace(sample_random({opt.n, opt.chi, opt.p, opt.seed}));
        chi_ref = opt.chi;
    } else {
        chain.emplace(CouplingChain(parse_coupling_list(opt.chain_list)));
    }
    if (chi_ref == 0.0) chi_ref = 1.0;

    std::vector<double> times(static_cast<std::size_t>(opt.points));
    for (int k = 0; k < opt.points; ++k) {
        const double chit = opt.tmin + (opt.tmax - opt.tmin) * k / (opt.points - 1);
        times[static_cast<std::size_t>(k)] = chit / chi_ref;
    }
    const SqueezingCurve curve =
        analytic::curve(*chain, times, QuadratureAngle::of(opt.theta));

    std::vector<CurvePoint> rows(curve.points.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i] = {curve.points[i].t * chi_ref, curve.points[i].xi2};
    }

    if (opt.out == "-") {
        csvio::write_curve(std::cout, "chi_t", "xi2", rows);
        return 0;
    }
    const std::string path = resolve_output_path(opt.out);
    std::ofstream file(path);
    if (!file) {
        std::cerr << "curve: cannot open " << path << " for writing\n";
        return kExitIo;
    }
    csvio::write_curve(file, "chi_t", "xi2", rows);
    if (!file.good()) {
        std::cerr << "curve: write failure on " << path << "\n";
        return kExitIo;
    }
    return 0;
}

int run_figures(int which, const std::string& out_dir) {
    const auto paths = figures::write_figure(which, resolve_output_path(out_dir));
    for (const auto& p : paths) std::cout << p << "\n";
    return 0;
}

int run_shorttime(const std::string& input_path) {
    const auto ps = pairfile::load(input_path);
    const auto ac = shorttime::aggregate(ps);
    const auto opt = shorttime::optimal_orientation(ac);

    std::cout << "n: " << ps.n << "\n";
    std::cout << "terms: " << ps.terms.size() << "\n";
    std::cout << "M (symmetrized):\n";
    for (int r = 0; r < 3; ++r) {
        std::printf("  [ % .12g  % .12g  % .12g ]\n", ac.matrix(r, 0), ac.matrix(r, 1),
                    ac.matrix(r, 2));
    }
    std::printf("eigenvalues (descending): %.12g %.12g %.12g\n", ac.eigen.values[0],
                ac.eigen.values[1], ac.eigen.values[2]);
    std::printf("optimal orientation (Z-Y-Z Euler, radians): alpha=%.12g beta=%.12g gamma=%.12g\n",
                opt.orientation.alpha, opt.orientation.beta, opt.orientation.gamma);
    std::printf("optimal initial rate: %.12g\n", opt.rate);
    std::printf("squeezing possible: %s\n", opt.rate < 0.0 ? "yes" : "no");
    return 0;
}

int run_verify(const std::string& level_text, std::uint64_t seed) {
    const auto level = level_text == "full" ? verify::Level::full : verify::Level::fast;
    const auto results = verify::run(level, seed);
    for (const auto& r : results) std::cout << verify::format_result(r) << "\n";
    const bool ok = verify::all_passed(results);
    std::cout << "RESULT: " << (ok ? "PASS" : "FAIL") << " (" << results.size() << " checks, level "
              << level_text << ", seed " << seed << ", kernel "
              << kernels::name(kernels::active()) << ")\n";
    return ok ? 0 : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spin squeezing toolkit for Ising chains with arbitrary couplings"};
    app.require_subcommand(1);

    std::string kernel = "auto";
    app.add_option("--kernel", kernel, "kernel backend: auto, scalar, avx2")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    CurveOptions curve_opt;
    auto* curve_cmd = app.add_subcommand("curve", "xi^2(chi t) for one chain as CSV");
    curve_cmd->add_flag("--uniform", curve_opt.uniform, "uniform closed chain");
    curve_cmd->add_flag("--dimerized", curve_opt.dimerized, "alternating-bond chain");
    curve_cmd->add_flag("--random", curve_opt.random, "one sampled randomly diluted chain");
    curve_cmd->add_option("--chain", curve_opt.chain_list, "explicit couplings chi_1,chi_2,...");
    curve_cmd->add_option("--n", curve_opt.n, "spin count");
    curve_cmd->add_option("--chi", curve_opt.chi, "base coupling (rad/time)");
    curve_cmd->add_option("--delta", curve_opt.delta, "dimerization");
    curve_cmd->add_option("--p", curve_opt.p, "bond probability");
    curve_cmd->add_option("--seed", curve_opt.seed, "RNG seed (u64)");
    curve_cmd->add_option("--theta", curve_opt.theta, "quadrature angle in radians (default pi/4)");
    curve_cmd->add_option("--tmin", curve_opt.tmin, "grid start in chi*t units");
    curve_cmd->add_option("--tmax", curve_opt.tmax, "grid end in chi*t units");
    curve_cmd->add_option("--points", curve_opt.points, "grid size (>= 2)");
    curve_cmd->add_option("--out", curve_opt.out, "output CSV path, - for stdout");

    int fig_which = 1;
    std::string fig_dir = ".";
    auto* fig_cmd = app.add_subcommand("figures", "write the reference figure datasets");
    fig_cmd->add_option("which", fig_which, "figure number (1, 2, or 3)")
        ->required()
        ->check(CLI::Range(1, 3));
    fig_cmd->add_option("--out-dir", fig_dir, "output directory");

    std::string pair_path;
    auto* short_cmd =
        app.add_subcommand("shorttime", "analyze a pair-coupling JSON file at t = 0");
    short_cmd->add_option("input", pair_path, "pair-coupling JSON file")->required();

    std::string verify_level = "fast";
    std::uint64_t verify_seed = 12345;
    auto* verify_cmd = app.add_subcommand("verify", "run the self-verification suites");
    verify_cmd->add_option("level", verify_level, "fast or full")
        ->check(CLI::IsMember({"fast", "full"}));
    verify_cmd->add_option("--seed", verify_seed, "RNG seed (u64)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << "\n";
        return kExitBadInput;
    }

    if (kernel != "auto") {
        kernels::Backend b{};
        kernels::parse_backend(kernel, b);
        if (!kernels::set_backend(b)) {
            std::cerr << "kernel backend '" << kernel << "' is not available on this host\n";
            return kExitBadInput;
        }
    }

    try {
        if (curve_cmd->parsed()) return run_curve(curve_opt);
        if (fig_cmd->parsed()) return run_figures(fig_which, fig_dir);
        if (short_cmd->parsed()) return run_shorttime(pair_path);
        if (verify_cmd->parsed()) return run_verify(verify_level, verify_seed);
    } catch (const unsupported_size_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRegime;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return 0;
}
