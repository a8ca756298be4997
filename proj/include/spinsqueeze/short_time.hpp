#pragma once

#include <array>
#include <vector>

#include "spinsqueeze/chain.hpp"
#include "spinsqueeze/orientation.hpp"

// Short-time noise analysis for arbitrary pairwise spin-1/2 Hamiltonians
// H = sum_{k != l} j_k^T m^{kl} j_l (hbar = 1): only the summed coupling
// matrix M = sum m^{kl} enters the t = 0 derivative of the perpendicular
// variance, and its eigenvalue gaps set the best initial squeezing rate.

namespace spinsqueeze::shorttime {

struct PairTerm {
    int k = 1; // 1-based sites, k != l
    int l = 2;
    Mat3 m;
};

struct PairCouplingSet {
    int n = 2;
    std::vector<PairTerm> terms;
};

void validate(const PairCouplingSet& ps); // throws invalid_pairset_error

struct EigenDecomp3 {
    std::array<double, 3> values{};  // descending
    std::array<Vec3, 3> vectors{};   // orthonormal, matching order
};

// Symmetric 3x3 eigendecomposition: closed-form (trigonometric) eigenvalues
// with cross-product eigenvectors, switching to Jacobi sweeps when the
// spectrum is nearly degenerate.  Deterministic: eigenvalues descending,
// ties broken by lexicographically largest eigenvector, sign fixed so the
// first component of magnitude > 1e-12 is positive.
EigenDecomp3 symmetric_eigen3(const Mat3& m);

struct AggregateCoupling {
    Mat3 matrix; // symmetrized sum of the pair matrices
    EigenDecomp3 eigen;

    static AggregateCoupling from_matrix(const Mat3& m); // symmetrizes
};

AggregateCoupling aggregate(const PairCouplingSet& ps);

// d/dt (Delta J_perp)^2 at t = 0 for the product state polarized along the
// rotated z-axis, J_perp along the rotated x-axis: (1/2) (R^T M R)_{yx}.
double noise_derivative(const AggregateCoupling& ac, const Orientation& o);

struct OptimalOrientation {
    Orientation orientation;
    double rate = 0.0; // most negative derivative, -(1/4) max eigenvalue gap
};

// Mean spin along the middle eigenvector, quadratures at pi/4 between the
// extremal eigenvectors; rate = -(1/4)(lambda_max - lambda_min), which is 0
// exactly when all eigenvalues coincide (no squeezing possible).
OptimalOrientation optimal_orientation(const AggregateCoupling& ac);

// Ising chain as a pair-coupling set: bond i contributes m_xx = chi_i / 2 for
// both orderings (i, i+1) and (i+1, i), so M = diag(sum chi_i, 0, 0).
PairCouplingSet ising_to_pairset(const CouplingChain& chain);

} // namespace spinsqueeze::shorttime
