#pragma once

#include <span>

#include "spinsqueeze/chain.hpp"
#include "spinsqueeze/squeezing.hpp"

// Closed-form collective-spin moments and squeezing curves for Ising chains
// with site-dependent nearest-neighbour couplings, all times, hbar = 1.
// The generic-chain expressions hold for N >= 5; N = 2, 3, 4 have dedicated
// forms and xi_pi4() dispatches between them.
//
// Note on normalization: the xi_theta quadratic form carries an explicit
// factor N so that xi_theta at theta = pi/4 coincides with xi_pi4_general
// and with N*(Delta J_perp)^2 / <J>^2 exactly (the variance form alone would
// not reproduce the N >= 5 closed form).

namespace spinsqueeze::analytic {

// <J_z>(t) = (1/2) sum_i cos(chi_i t/2) cos(chi_{i+1} t/2)
double mean_jz(const CouplingChain& chain, double t);

// <j_{y,i}(t) j_{y,i+k}(t)> for N >= 5: 1/4 at k = 0, 0 at k = 1 and N-1,
// the four-factor product at k = 2 and N-2, 0 for 3 <= k <= N-3.
double corr_yy(const CouplingChain& chain, int site, int offset, double t);

// <J_y^2>(t) = N/4 + (1/2) sum_i cos sin sin cos window; N >= 5.
double jy_squared(const CouplingChain& chain, double t);

// <J_x J_y + J_y J_x>(t) = -(1/2) sum_i sin((chi_i + chi_{i+1}) t/2); N >= 5.
double jxjy_sym(const CouplingChain& chain, double t);

// All of the above plus the conserved <J_x^2> = N/4, bundled; N >= 5.
ExpectationSet expectations(const CouplingChain& chain, double t);

// N * [cos^2 jx2 + sin^2 jy2 + sin cos jxjy_sym] / jz^2;  jz == 0 -> +inf.
double xi_theta(const ExpectationSet& es, QuadratureAngle theta, int n);

struct ThetaOpt {
    double theta = 0.0; // minimizing quadrature in (-pi/2, pi/2]
    double xi2 = 0.0;
};
// Closed-form minimum of the quadratic form over theta.
ThetaOpt xi_theta_optimal(const ExpectationSet& es, int n);

// Generic-chain squeezing parameter at theta = pi/4, N >= 5.
double xi_pi4_general(const CouplingChain& chain, double t);

// Uniform closed chain, any N >= 4 (also the N >= 5 uniform limit).
double xi_pi4_uniform(double chi, double t);

// Two spins with H = 2 hbar chi j_x1 j_x2; evaluated as 1/(1 + sin(chi t)).
double xi_pi4_n2(double chi_pair, double t);

double xi_pi4_n3(double chi1, double chi2, double chi3, double t);

double xi_pi4_n4(double chi1, double chi2, double chi3, double chi4, double t);

// Dimerized chain (independent of N): bonds chi(1+delta) / chi(1-delta).
double xi_pi4_dimerized(double chi, double delta, double t);

// Dispatch by chain size: N=2 maps both bonds onto chi = (chi_1+chi_2)/2,
// N=3 and N=4 use their dedicated forms, N>=5 the generic expression.
double xi_pi4(const CouplingChain& chain, double t);

// xi^2 over a strictly increasing time grid; theta = pi/4 routes through the
// dispatcher (any N), other quadratures need N >= 5.
SqueezingCurve curve(const CouplingChain& chain, std::span<const double> times,
                     QuadratureAngle theta);

} // namespace spinsqueeze::analytic
