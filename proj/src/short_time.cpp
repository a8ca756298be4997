#include "spinsqueeze/short_time.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace spinsqueeze::shorttime {

namespace {

bool lex_greater(const Vec3& a, const Vec3& b) {
    if (a.x != b.x) return a.x > b.x;
    if (a.y != b.y) return a.y > b.y;
    return a.z > b.z;
}

Vec3 sign_fixed(const Vec3& v) {
    double lead = 0.0;
    if (std::abs(v.x) > 1e-12) lead = v.x;
    else if (std::abs(v.y) > 1e-12) lead = v.y;
    else lead = v.z;
    return lead < 0.0 ? v * -1.0 : v;
}

// Eigenvector of (m - lambda I) via the largest cross product of its rows.
Vec3 eigenvector_for(const Mat3& m, double lambda) {
    Vec3 rows[3];
    for (int r = 0; r < 3; ++r) {
        rows[r] = {m(r, 0), m(r, 1), m(r, 2)};
    }
    rows[0].x -= lambda;
    rows[1].y -= lambda;
    rows[2].z -= lambda;
    const Vec3 cands[3] = {rows[0].cross(rows[1]), rows[0].cross(rows[2]),
                           rows[1].cross(rows[2])};
    int best = 0;
    double best_norm = cands[0].norm();
    for (int i = 1; i < 3; ++i) {
        const double nn = cands[i].norm();
        if (nn > best_norm) {
            best = i;
            best_norm = nn;
        }
    }
    return cands[best] * (1.0 / best_norm);
}

EigenDecomp3 jacobi_eigen3(Mat3 a) {
    Mat3 v = Mat3::identity();
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q) off += a(p, q) * a(p, q);
        if (off < 1e-60 * std::max(1.0, a.max_abs() * a.max_abs())) break;
        for (int p = 0; p < 3; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (a(p, q) == 0.0) continue;
                const double theta = 0.5 * (a(q, q) - a(p, p)) / a(p, q);
                const double tt = (theta >= 0.0 ? 1.0 : -1.0) /
                                  (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(tt * tt + 1.0);
                const double s = tt * c;
                Mat3 r = Mat3::identity();
                r(p, p) = c;
                r(q, q) = c;
                r(p, q) = s;
                r(q, p) = -s;
                a = r.transposed() * a * r;
                a(p, q) = a(q, p) = 0.0;
                v = v * r;
            }
        }
    }
    EigenDecomp3 out;
    for (int i = 0; i < 3; ++i) {
        out.values[static_cast<std::size_t>(i)] = a(i, i);
        out.vectors[static_cast<std::size_t>(i)] = v.column(i);
    }
    return out;
}

void sort_descending(EigenDecomp3& d) {
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        const auto ii = static_cast<std::size_t>(i);
        const auto jj = static_cast<std::size_t>(j);
        if (d.values[ii] != d.values[jj]) return d.values[ii] > d.values[jj];
        return lex_greater(sign_fixed(d.vectors[ii]), sign_fixed(d.vectors[jj]));
    });
    EigenDecomp3 sorted;
    for (int i = 0; i < 3; ++i) {
        const auto si = static_cast<std::size_t>(i);
        const auto from = static_cast<std::size_t>(idx[si]);
        sorted.values[si] = d.values[from];
        sorted.vectors[si] = sign_fixed(d.vectors[from].normalized());
    }
    d = sorted;
}

} // namespace

void validate(const PairCouplingSet& ps) {
    if (ps.n < 2) throw invalid_pairset_error("pair set needs n >= 2");
    for (const auto& term : ps.terms) {
        if (term.k == term.l) throw invalid_pairset_error("pair term with k == l");
        if (term.k < 1 || term.k > ps.n || term.l < 1 || term.l > ps.n) {
            throw invalid_pairset_error("pair term site out of range 1..n");
        }
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                if (!std::isfinite(term.m(r, c))) {
                    throw invalid_pairset_error("pair term matrix entry not finite");
                }
    }
}

EigenDecomp3 symmetric_eigen3(const Mat3& m) {
    const double scale = std::max(1.0, m.max_abs());
    const double off2 = m(0, 1) * m(0, 1) + m(0, 2) * m(0, 2) + m(1, 2) * m(1, 2);

    EigenDecomp3 d;
    if (off2 == 0.0) {
        d.values = {m(0, 0), m(1, 1), m(2, 2)};
        d.vectors = {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
        sort_descending(d);
        return d;
    }

    // trigonometric closed form for the characteristic cubic
    const double q = (m(0, 0) + m(1, 1) + m(2, 2)) / 3.0;
    const double p2 = (m(0, 0) - q) * (m(0, 0) - q) + (m(1, 1) - q) * (m(1, 1) - q) +
                      (m(2, 2) - q) * (m(2, 2) - q) + 2.0 * off2;
    const double p = std::sqrt(p2 / 6.0);
    Mat3 b;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) b(r, c) = (m(r, c) - (r == c ? q : 0.0)) / p;
    const double detb = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
                        b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
                        b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
    const double r = std::clamp(0.5 * detb, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
    const double e2 = 3.0 * q - e1 - e3;
    d.values = {e1, e2, e3};

    const double min_gap = std::min({std::abs(e1 - e2), std::abs(e2 - e3), std::abs(e1 - e3)});
    if (min_gap < 1e-9 * scale) {
        d = jacobi_eigen3(m);
        sort_descending(d);
        return d;
    }

    Vec3 v0 = eigenvector_for(m, e1);
    Vec3 v1 = eigenvector_for(m, e2);
    v1 = (v1 - v0 * v0.dot(v1)).normalized();
    const Vec3 v2 = v0.cross(v1);
    d.vectors = {v0, v1, v2};
    sort_descending(d);
    return d;
}

AggregateCoupling AggregateCoupling::from_matrix(const Mat3& m) {
    AggregateCoupling ac;
    ac.matrix = (m + m.transposed()).scaled(0.5);
    ac.eigen = symmetric_eigen3(ac.matrix);
    return ac;
}

AggregateCoupling aggregate(const PairCouplingSet& ps) {
    validate(ps);
    Mat3 sum = Mat3::zero();
    for (const auto& term : ps.terms) sum += term.m;
    return AggregateCoupling::from_matrix(sum);
}

double noise_derivative(const AggregateCoupling& ac, const Orientation& o) {
    const Mat3 r = rotation_matrix(o);
    const Mat3 mt = r.transposed() * ac.matrix * r;
    return 0.5 * mt(1, 0);
}

OptimalOrientation optimal_orientation(const AggregateCoupling& ac) {
    const auto& eig = ac.eigen;
    // mean spin along the middle eigenvector; the (max, min) pair always
    // carries the largest gap, and this is also the documented tie rule
    const Vec3 w = eig.vectors[1];
    const Vec3 u0 = eig.vectors[0];
    const Vec3 v0 = w.cross(u0); // +-(min eigenvector), right-handed with u0, w
    // derivative (1/4) sin(2*phi) (lambda_v0 - lambda_u0); lambda_u0 is the
    // largest, so phi = +pi/4 is the minimum
    const double c = std::cos(M_PI_4), s = std::sin(M_PI_4);
    const Vec3 u = u0 * c + v0 * s;
    const Vec3 v = u0 * (-s) + v0 * c;
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
        const auto row = static_cast<std::size_t>(i);
        const double uu = (i == 0) ? u.x : (i == 1 ? u.y : u.z);
        const double vv = (i == 0) ? v.x : (i == 1 ? v.y : v.z);
        const double ww = (i == 0) ? w.x : (i == 1 ? w.y : w.z);
        r.a[row][0] = uu;
        r.a[row][1] = vv;
        r.a[row][2] = ww;
    }
    OptimalOrientation out;
    out.orientation = euler_from_rotation(r);
    const double gap = eig.values[0] - eig.values[2];
    out.rate = (gap == 0.0) ? 0.0 : -0.25 * gap;
    return out;
}

PairCouplingSet ising_to_pairset(const CouplingChain& chain) {
    PairCouplingSet ps;
    ps.n = chain.size();
    ps.terms.reserve(static_cast<std::size_t>(2 * ps.n));
    for (int i = 1; i <= ps.n; ++i) {
        const int j = (i % ps.n) + 1;
        Mat3 m;
        m(0, 0) = 0.5 * chain.at(i);
        ps.terms.push_back({i, j, m});
        ps.terms.push_back({j, i, m});
    }
    return ps;
}

} // namespace spinsqueeze::shorttime
