#include "spinsqueeze/chain.hpp"

#include <cmath>
#include <random>
#include <string>

namespace spinsqueeze {

CouplingChain::CouplingChain(std::vector<double> couplings) : chi_(std::move(couplings)) {
    if (chi_.size() < 2) {
        throw invalid_chain_error("chain needs at least 2 bonds, got " +
                                  std::to_string(chi_.size()));
    }
    for (double c : chi_) {
        if (!std::isfinite(c)) {
            throw invalid_chain_error("chain couplings must be finite");
        }
    }
}

double CouplingChain::at(long long index) const {
    const long long n = static_cast<long long>(chi_.size());
    long long m = (index - 1) % n;
    if (m < 0) m += n;
    return chi_[static_cast<std::size_t>(m)];
}

double CouplingChain::coupling_sum() const {
    double s = 0.0;
    for (double c : chi_) s += c;
    return s;
}

double CouplingChain::max_abs_coupling() const {
    double m = 0.0;
    for (double c : chi_) m = std::max(m, std::abs(c));
    return m;
}

CouplingChain make_uniform(int n, double chi) {
    if (n < 2) {
        throw invalid_chain_error("uniform chain needs n >= 2, got " + std::to_string(n));
    }
    if (!std::isfinite(chi)) {
        throw invalid_chain_error("uniform chain coupling must be finite");
    }
    return CouplingChain(std::vector<double>(static_cast<std::size_t>(n), chi));
}

CouplingChain make_dimerized(const DimerSpec& spec) {
    if (spec.pair_count < 1) {
        throw invalid_chain_error("dimerized chain needs pair_count >= 1");
    }
    if (!std::isfinite(spec.chi) || !std::isfinite(spec.delta)) {
        throw invalid_chain_error("dimerized chain parameters must be finite");
    }
    const int n = 2 * spec.pair_count;
    std::vector<double> chi(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        // chi_i = chi * [1 + (-1)^{i+1} delta]: strong bond on odd i
        chi[static_cast<std::size_t>(i - 1)] =
            spec.chi * (1.0 + ((i % 2 == 1) ? spec.delta : -spec.delta));
    }
    return CouplingChain(std::move(chi));
}

CouplingChain sample_random(const RandomChainSpec& spec) {
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
        throw invalid_probability_error("bond probability must lie in [0, 1], got " +
                                        std::to_string(spec.p));
    }
    if (spec.n < 2) {
        throw invalid_chain_error("random chain needs n >= 2, got " + std::to_string(spec.n));
    }
    if (!std::isfinite(spec.chi)) {
        throw invalid_chain_error("random chain coupling must be finite");
    }
    std::mt19937_64 eng(spec.seed);
    std::vector<double> chi(static_cast<std::size_t>(spec.n));
    for (auto& c : chi) {
        // uniform in [0,1) with 53 bits; u < 1 always, so p = 1 forces the bond
        const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
        c = (u < spec.p) ? spec.chi : 0.0;
    }
    return CouplingChain(std::move(chi));
}

std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t z = seed + (k + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace spinsqueeze
