#include "spinsqueeze/analytic.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "spinsqueeze/kernels.hpp"

namespace spinsqueeze::analytic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNumeratorFloor = 1e-12;
constexpr double kNudge = 1e-8;

void require_generic_regime(const CouplingChain& chain, const char* what) {
    if (chain.size() < 5) {
        throw unsupported_size_error(std::string(what) +
                                     " requires N >= 5 (use the small-N dispatcher for N <= 4)");
    }
}

// den_root is the product/sum of cosines whose square divides the numerator.
// |den_root| below a few ulps at the angle scale is a zero of the denominator
// at working precision: the point is a pole (-> +inf) unless the numerator
// vanishes too, in which case the caller averages the two nudged evaluations.
bool den_root_is_zero(double den_root, double angle_scale) {
    const double thresh =
        32.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, angle_scale);
    return std::abs(den_root) <= thresh;
}

template <typename Raw>
double classified_ratio(double num, double den_root, double angle_scale, double t,
                        Raw&& raw_at) {
    if (!den_root_is_zero(den_root, angle_scale)) return num / (den_root * den_root);
    if (std::abs(num) >= kNumeratorFloor) return kInf;
    // removable 0/0: average the two nudged evaluations
    return 0.5 * (raw_at(t - kNudge) + raw_at(t + kNudge));
}

// 1 - sin(x)*cos(y) without cancellation when the product approaches 1
// (split as (1-|sin x|) + |sin x|(1-|cos y|) with 1-|s| = c^2/(1+|s|)).
double one_minus_sin_cos(double x, double y) {
    const double sx = std::sin(x);
    const double cy = std::cos(y);
    const double p = sx * cy;
    if (p <= 0.5) return 1.0 - p;
    const double cx = std::cos(x);
    const double sy = std::sin(y);
    const double one_minus_abs_sx = cx * cx / (1.0 + std::abs(sx));
    const double one_minus_abs_cy = sy * sy / (1.0 + std::abs(cy));
    return one_minus_abs_sx + std::abs(sx) * one_minus_abs_cy;
}

struct RatioParts {
    double num = 0.0;
    double den_root = 0.0;
    double angle_scale = 1.0;
};

RatioParts general_parts(const CouplingChain& chain, double t) {
    const auto sums = kernels::chain_sums(chain.couplings(), t);
    const double n = static_cast<double>(chain.size());
    RatioParts parts;
    parts.num = n * (n + sums.quad - sums.sin_pair);
    parts.den_root = sums.cos_pair;
    parts.angle_scale = n * std::max(1.0, 0.5 * std::abs(t) * chain.max_abs_coupling());
    return parts;
}

RatioParts uniform_parts(double chi, double t) {
    const double x = chi * t;
    const double c = std::cos(0.5 * x);
    const double root = 1.0 - 0.5 * std::sin(x); // numerator = root^2 >= 1/4
    RatioParts parts;
    parts.num = root * root;
    parts.den_root = c * c;
    parts.angle_scale = std::max(1.0, std::abs(x));
    return parts;
}

RatioParts n3_parts(double chi1, double chi2, double chi3, double t) {
    const double c[3] = {std::cos(0.5 * chi1 * t), std::cos(0.5 * chi2 * t),
                         std::cos(0.5 * chi3 * t)};
    const double s[3] = {std::sin(0.5 * chi1 * t), std::sin(0.5 * chi2 * t),
                         std::sin(0.5 * chi3 * t)};
    const double chi[3] = {chi1, chi2, chi3};
    double sum_ss = 0.0, sum_pair = 0.0, sum_cc = 0.0;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        sum_ss += s[i] * s[j];
        sum_pair += std::sin(0.5 * (chi[i] + chi[j]) * t);
        sum_cc += c[i] * c[j];
    }
    RatioParts parts;
    parts.num = 9.0 + 3.0 * sum_ss - 3.0 * sum_pair;
    parts.den_root = sum_cc;
    parts.angle_scale =
        3.0 * std::max(1.0, 0.5 * std::abs(t) *
                                std::max({std::abs(chi1), std::abs(chi2), std::abs(chi3)}));
    return parts;
}

RatioParts n4_parts(double chi1, double chi2, double chi3, double chi4, double t) {
    const double chi[4] = {chi1, chi2, chi3, chi4};
    double c[4], s[4];
    for (int i = 0; i < 4; ++i) {
        c[i] = std::cos(0.5 * chi[i] * t);
        s[i] = std::sin(0.5 * chi[i] * t);
    }
    double window = 0.0, sum_pair = 0.0, sum_cc = 0.0;
    for (int i = 0; i < 4; ++i) {
        const int j = (i + 1) % 4, k = (i + 2) % 4, l = (i + 3) % 4;
        window += s[i] * s[j] * c[k] * c[l];
        sum_pair += std::sin(0.5 * (chi[i] + chi[j]) * t);
        sum_cc += c[i] * c[j];
    }
    const double jx2_plus_jy2 = 2.0 + 0.5 * window;
    RatioParts parts;
    parts.num = 8.0 * jx2_plus_jy2 - 4.0 * sum_pair;
    parts.den_root = sum_cc;
    parts.angle_scale =
        4.0 * std::max(1.0, 0.5 * std::abs(t) *
                                std::max({std::abs(chi1), std::abs(chi2), std::abs(chi3),
                                          std::abs(chi4)}));
    return parts;
}

RatioParts dimer_parts(double chi, double delta, double t) {
    const double a = 0.5 * chi * (1.0 + delta) * t; // odd-bond half angle
    const double b = 0.5 * chi * (1.0 - delta) * t; // even-bond half angle
    const double ca = std::cos(a), cb = std::cos(b);
    RatioParts parts;
    parts.num = one_minus_sin_cos(a, b) * one_minus_sin_cos(b, a);
    parts.den_root = ca * cb;
    parts.angle_scale = std::max({1.0, std::abs(a), std::abs(b)});
    return parts;
}

double raw_ratio(const RatioParts& p) {
    return p.num / (p.den_root * p.den_root);
}

} // namespace

double mean_jz(const CouplingChain& chain, double t) {
    return 0.5 * kernels::chain_sums(chain.couplings(), t).cos_pair;
}

double corr_yy(const CouplingChain& chain, int site, int offset, double t) {
    require_generic_regime(chain, "corr_yy");
    const int n = chain.size();
    if (offset < 0 || offset >= n) {
        throw std::invalid_argument("corr_yy: offset must lie in [0, N)");
    }
    if (offset == 0) return 0.25;
    if (offset == 1 || offset == n - 1) return 0.0;
    const auto window = [&](long long i) {
        return 0.25 * std::cos(0.5 * chain.at(i - 1) * t) * std::sin(0.5 * chain.at(i) * t) *
               std::sin(0.5 * chain.at(i + 1) * t) * std::cos(0.5 * chain.at(i + 2) * t);
    };
    if (offset == 2) return window(site);
    if (offset == n - 2) return window(static_cast<long long>(site) - 2); // mirrored k = 2
    return 0.0;
}

double jy_squared(const CouplingChain& chain, double t) {
    require_generic_regime(chain, "jy_squared");
    const auto sums = kernels::chain_sums(chain.couplings(), t);
    return 0.25 * chain.size() + 0.5 * sums.quad;
}

double jxjy_sym(const CouplingChain& chain, double t) {
    require_generic_regime(chain, "jxjy_sym");
    return -0.5 * kernels::chain_sums(chain.couplings(), t).sin_pair;
}

ExpectationSet expectations(const CouplingChain& chain, double t) {
    require_generic_regime(chain, "expectations");
    const auto sums = kernels::chain_sums(chain.couplings(), t);
    const double n = static_cast<double>(chain.size());
    ExpectationSet es;
    es.t = t;
    es.jz = 0.5 * sums.cos_pair;
    es.jx2 = 0.25 * n; // J_x commutes with H
    es.jy2 = 0.25 * n + 0.5 * sums.quad;
    es.jxjy_sym = -0.5 * sums.sin_pair;
    return es;
}

double xi_theta(const ExpectationSet& es, QuadratureAngle theta, int n) {
    if (es.jz == 0.0) return kInf;
    const double c = std::cos(theta.theta), s = std::sin(theta.theta);
    const double form = c * c * es.jx2 + s * s * es.jy2 + s * c * es.jxjy_sym;
    return static_cast<double>(n) * form / (es.jz * es.jz);
}

ThetaOpt xi_theta_optimal(const ExpectationSet& es, int n) {
    const double a = es.jx2, b = es.jy2, cc = es.jxjy_sym;
    // cos^2 A + sin^2 B + sin cos C = (A+B)/2 + ((A-B)/2) cos 2t + (C/2) sin 2t
    const double amp = std::hypot(0.5 * (a - b), 0.5 * cc);
    const double fmin = 0.5 * (a + b) - amp;
    double theta = 0.5 * std::atan2(-cc, b - a);
    if (theta == -M_PI_2) theta = M_PI_2;
    ThetaOpt out;
    out.theta = theta;
    out.xi2 = (es.jz == 0.0) ? kInf : static_cast<double>(n) * fmin / (es.jz * es.jz);
    return out;
}

double xi_pi4_general(const CouplingChain& chain, double t) {
    require_generic_regime(chain, "xi_pi4_general");
    const auto parts = general_parts(chain, t);
    return classified_ratio(parts.num, parts.den_root, parts.angle_scale, t,
                            [&](double tt) { return raw_ratio(general_parts(chain, tt)); });
}

double xi_pi4_uniform(double chi, double t) {
    const auto parts = uniform_parts(chi, t);
    return classified_ratio(parts.num, parts.den_root, parts.angle_scale, t,
                            [&](double tt) { return raw_ratio(uniform_parts(chi, tt)); });
}

double xi_pi4_n2(double chi_pair, double t) {
    // (1 - sin x)/cos^2 x in its stable form; 1 + sin x == 0 divides to +inf
    return 1.0 / (1.0 + std::sin(chi_pair * t));
}

double xi_pi4_n3(double chi1, double chi2, double chi3, double t) {
    const auto parts = n3_parts(chi1, chi2, chi3, t);
    return classified_ratio(parts.num, parts.den_root, parts.angle_scale, t, [&](double tt) {
        return raw_ratio(n3_parts(chi1, chi2, chi3, tt));
    });
}

double xi_pi4_n4(double chi1, double chi2, double chi3, double chi4, double t) {
    const auto parts = n4_parts(chi1, chi2, chi3, chi4, t);
    return classified_ratio(parts.num, parts.den_root, parts.angle_scale, t, [&](double tt) {
        return raw_ratio(n4_parts(chi1, chi2, chi3, chi4, tt));
    });
}

double xi_pi4_dimerized(double chi, double delta, double t) {
    const auto parts = dimer_parts(chi, delta, t);
    return classified_ratio(parts.num, parts.den_root, parts.angle_scale, t, [&](double tt) {
        return raw_ratio(dimer_parts(chi, delta, tt));
    });
}

double xi_pi4(const CouplingChain& chain, double t) {
    switch (chain.size()) {
        case 2:
            // both bonds act on the same pair: H = hbar (chi_1 + chi_2) j_x1 j_x2
            return xi_pi4_n2(0.5 * (chain.at(1) + chain.at(2)), t);
        case 3:
            return xi_pi4_n3(chain.at(1), chain.at(2), chain.at(3), t);
        case 4:
            return xi_pi4_n4(chain.at(1), chain.at(2), chain.at(3), chain.at(4), t);
        default:
            return xi_pi4_general(chain, t);
    }
}

SqueezingCurve curve(const CouplingChain& chain, std::span<const double> times,
                     QuadratureAngle theta) {
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1])) {
            throw std::invalid_argument("curve: time grid must be strictly increasing");
        }
    }
    const bool pi4 = std::abs(theta.theta - M_PI_4) <= 1e-12;
    SqueezingCurve out;
    out.theta = theta.theta;
    out.points.reserve(times.size());
    for (double t : times) {
        const double xi2 =
            pi4 ? xi_pi4(chain, t) : xi_theta(expectations(chain, t), theta, chain.size());
        out.points.push_back({t, xi2});
    }
    return out;
}

} // namespace spinsqueeze::analytic
