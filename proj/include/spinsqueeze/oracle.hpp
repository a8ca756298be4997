#pragma once

#include <complex>
#include <span>
#include <vector>

#include "spinsqueeze/chain.hpp"
#include "spinsqueeze/orientation.hpp"
#include "spinsqueeze/short_time.hpp"
#include "spinsqueeze/squeezing.hpp"

// Brute-force quantum oracle: exact evolution of up to 14 qubits under Ising
// chains (diagonal in the product x basis) and up to 10 qubits under general
// pairwise Hamiltonians (certified truncated-series exponential).  Site i
// (1-based) lives on bit i-1 of the amplitude index; bit value 0 is spin-up
// along z.

namespace spinsqueeze::oracle {

inline constexpr int kMaxQubits = 14;
inline constexpr int kMaxGeneralQubits = 10;

class StateVector {
public:
    StateVector(int n, std::vector<std::complex<double>> amplitudes);

    int qubits() const { return n_; }
    std::span<const std::complex<double>> amplitudes() const { return amp_; }
    double norm() const;

private:
    friend StateVector prepare_polarized(int, const Orientation&);
    friend StateVector evolve_ising(const StateVector&, const CouplingChain&, double);
    friend StateVector evolve_general(const StateVector&, const shorttime::PairCouplingSet&,
                                      double);
    int n_;
    std::vector<std::complex<double>> amp_;
};

// Product state with every spinor rotated from |up> by the Z-Y-Z rotation o;
// the identity orientation gives all spins up along z.
StateVector prepare_polarized(int n, const Orientation& o);

StateVector evolve_ising(const StateVector& s, const CouplingChain& chain, double t);

// exp(-iHt)|s> for H = sum_{k != l} j_k^T m^{kl} j_l via scaled truncated
// Taylor series with a rigorous tail bound below 1e-13 in norm.
StateVector evolve_general(const StateVector& s, const shorttime::PairCouplingSet& ps, double t);

struct CollectiveMoments {
    double jx = 0.0, jy = 0.0, jz = 0.0;
    // sym[a][b] = <(J_a J_b + J_b J_a)/2>, a,b in {x,y,z}; positive
    // semidefinite by construction (Gram matrix of the J_a|psi> vectors)
    double sym[3][3] = {};

    double jx2() const { return sym[0][0]; }
    double jy2() const { return sym[1][1]; }
    double jz2() const { return sym[2][2]; }
    double jxjy_sym() const { return 2.0 * sym[0][1]; } // full anticommutator
};

CollectiveMoments moments(const StateVector& s);

// <j_{y,i} j_{y,j}> (sites commute for i != j; 1/4 for i == j).
double site_corr_yy(const StateVector& s, int i, int j);

// N (Delta J_theta)^2 / <J>^2 with J_theta in the plane perpendicular to the
// measured mean spin; mean spin within 1e-9 of the +-z axis pins the frame to
// the lab x-y axes.  |<J>| < 1e-12 flags divergence (+inf).
double xi_oracle(const StateVector& s, QuadratureAngle theta);

// Same quantity from precomputed moments (xi_oracle delegates to this).
double xi_from_moments(const CollectiveMoments& mo, int n, QuadratureAngle theta);

// The squeezing parameter at a removable |<J>| -> 0 point of an Ising chain
// evolution (e.g. the two-spin maximum-squeezing time), from oracle data
// alone: Richardson extrapolation in h^2 of the symmetric ratio
// n [var(t+h) + var(t-h)] / [<J>^2(t+h) + <J>^2(t-h)].  Direct evaluation at
// such points is destroyed by amplitude rounding; the limit is not.
double xi_oracle_limit(const CouplingChain& chain, double t, QuadratureAngle theta,
                       double h = 0.04);

// Richardson-extrapolated central difference of (Delta J_perp)^2 at t = 0,
// J_perp along the rotated x axis of o, evolving under ps at +-dt and +-dt/2.
double fd_derivative(const shorttime::PairCouplingSet& ps, const Orientation& o, double dt);

// 1e-3 / max(1, ||M||_F): balances truncation against rounding.
double default_fd_step(const shorttime::PairCouplingSet& ps);

} // namespace spinsqueeze::oracle
