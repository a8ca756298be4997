#pragma once

#include <cstdint>
#include <vector>

#include "spinsqueeze/errors.hpp"

namespace spinsqueeze {

enum class Boundary { closed, open };

// N >= 2 spin-1/2 sites on a ring.  Bond i (1-based) couples sites i and i+1,
// with site N+1 identified with site 1; couplings are angular frequencies
// (hbar = 1 throughout).  A vanishing last bond chi_N makes the chain open.
class CouplingChain {
public:
    explicit CouplingChain(std::vector<double> couplings);

    int size() const { return static_cast<int>(chi_.size()); }

    // 1-based cyclic bond access: any integer index is folded onto 1..n, so
    // at(i + k*n) == at(i) and at(0) == at(n).
    double at(long long index) const;

    const std::vector<double>& couplings() const { return chi_; }

    Boundary boundary() const {
        return chi_.back() == 0.0 ? Boundary::open : Boundary::closed;
    }

    double coupling_sum() const;
    double max_abs_coupling() const;

private:
    std::vector<double> chi_;
};

struct DimerSpec {
    int pair_count = 1; // M; the chain has N = 2M sites
    double chi = 1.0;
    double delta = 0.0;
};

struct RandomChainSpec {
    int n = 2;
    double chi = 1.0;
    double p = 1.0; // bond presence probability
    std::uint64_t seed = 0;
};

CouplingChain make_uniform(int n, double chi);

// Alternating bonds chi*(1+delta) on odd i, chi*(1-delta) on even i.
CouplingChain make_dimerized(const DimerSpec& spec);

// Each bond is chi with probability p and 0 otherwise, independently.
// Stream discipline: one std::mt19937_64 draw per bond, bond order 1..n,
// u = (draw >> 11) * 2^-53, bond present iff u < p.
CouplingChain sample_random(const RandomChainSpec& spec);

// k-th output (0-based) of the SplitMix64 sequence started at `seed`; the
// documented sub-stream rule used to give every Monte Carlo sample an
// independent chain seed regardless of evaluation order.
std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t k);

} // namespace spinsqueeze
