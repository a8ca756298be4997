#pragma once

#include <cstdint>

#include "spinsqueeze/chain.hpp"

// Randomly diluted chains: each bond is chi with probability p, absent
// otherwise, occupancies uncorrelated.  The closed form below is the
// large-N limit of the generic-chain expression; the Monte Carlo estimator
// validates it by evaluating the full ratio per realization.

namespace spinsqueeze::disorder {

struct TrigMeans {
    double cos_mean = 0.0;      // mean of cos(chi_i t/2) = p cos(mu) + (1-p)
    double sin_mean = 0.0;      // mean of sin(chi_i t/2) = p sin(mu)
    double sin_pair_mean = 0.0; // mean of sin((chi_i+chi_{i+1}) t/2)
};

// mu = chi t / 2
TrigMeans trig_means(double p, double mu);

// Large-N closed form for xi^2 at theta = pi/4.
double xi_random_analytic(double p, double chi, double t);

struct EnsembleEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    int samples = 0;
};

// Draws `samples` chains (sub-seed k = splitmix64_at(seed, k)), evaluates the
// generic-chain xi^2 on each, and returns mean and standard error of the
// mean.  Deterministic given the seed and independent of evaluation order.
EnsembleEstimate xi_random_mc(double p, double chi, int n, double t, int samples,
                              std::uint64_t seed);

} // namespace spinsqueeze::disorder
