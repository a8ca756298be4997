#pragma once

#include <cmath>
#include <vector>

namespace spinsqueeze {

// Quadrature direction J_theta = cos(theta) J_x + sin(theta) J_y, normalized
// to (-pi/2, pi/2].  theta = +-pi/4 are the short-time-optimal quadratures.
struct QuadratureAngle {
    double theta = 0.0;

    static QuadratureAngle of(double theta) {
        double r = std::remainder(theta, M_PI); // [-pi/2, pi/2]
        if (r == -M_PI_2) r = M_PI_2;
        return QuadratureAngle{r};
    }
    static QuadratureAngle pi4() { return QuadratureAngle{M_PI_4}; }
};

// First and second collective-spin moments at one time.  jxjy_sym is the full
// anticommutator expectation <J_x J_y + J_y J_x>.
struct ExpectationSet {
    double t = 0.0;
    double jz = 0.0;
    double jx2 = 0.0;
    double jy2 = 0.0;
    double jxjy_sym = 0.0;
};

struct CurvePoint {
    double t = 0.0;
    double xi2 = 0.0; // +inf flags a divergence
};

struct SqueezingCurve {
    double theta = 0.0;
    std::vector<CurvePoint> points;
};

} // namespace spinsqueeze
