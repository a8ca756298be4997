#include "spinsqueeze/disorder.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "spinsqueeze/analytic.hpp"

namespace spinsqueeze::disorder {

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw invalid_probability_error("bond probability must lie in [0, 1], got " +
                                        std::to_string(p));
    }
}

} // namespace

TrigMeans trig_means(double p, double mu) {
    check_probability(p);
    TrigMeans tm;
    tm.cos_mean = p * std::cos(mu) + (1.0 - p);
    tm.sin_mean = p * std::sin(mu);
    tm.sin_pair_mean = p * p * std::sin(2.0 * mu) + 2.0 * p * (1.0 - p) * std::sin(mu);
    return tm;
}

double xi_random_analytic(double p, double chi, double t) {
    check_probability(p);
    const double mu = 0.5 * chi * t;
    // cbar = 1 - p(1 - cos mu) via the half-angle form; the numerator is the
    // perfect square (1 - sbar cbar)^2 since the pair mean equals 2 sbar cbar
    const double sh = std::sin(0.5 * mu);
    const double cbar = 1.0 - p * (2.0 * sh * sh);
    const double sbar = p * std::sin(mu);
    const double root = 1.0 - sbar * cbar; // >= 1/2, no cancellation
    const double num = root * root;
    const double den_root = cbar * cbar;
    const double thresh =
        32.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(mu));
    if (std::abs(den_root) <= thresh) return std::numeric_limits<double>::infinity();
    return num / (den_root * den_root);
}

EnsembleEstimate xi_random_mc(double p, double chi, int n, double t, int samples,
                              std::uint64_t seed) {
    check_probability(p);
    if (n < 5) {
        throw unsupported_size_error("xi_random_mc needs n >= 5 (generic-chain regime)");
    }
    if (samples < 1) throw std::invalid_argument("xi_random_mc needs samples >= 1");

    std::vector<double> xs(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        const RandomChainSpec spec{n, chi, p, splitmix64_at(seed, static_cast<std::uint64_t>(k))};
        const CouplingChain chain = sample_random(spec);
        xs[static_cast<std::size_t>(k)] = analytic::xi_pi4_general(chain, t);
    }
    EnsembleEstimate est;
    est.samples = samples;
    double sum = 0.0;
    for (double x : xs) sum += x;
    est.mean = sum / samples;
    if (samples > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - est.mean) * (x - est.mean);
        est.std_error = std::sqrt(ss / (static_cast<double>(samples) * (samples - 1)));
    }
    return est;
}

} // namespace spinsqueeze::disorder
