#include "spinsqueeze/orientation.hpp"

#include <algorithm>

namespace spinsqueeze {

namespace {

Mat3 rot_z(double a) {
    Mat3 m = Mat3::identity();
    const double c = std::cos(a), s = std::sin(a);
    m(0, 0) = c;
    m(0, 1) = -s;
    m(1, 0) = s;
    m(1, 1) = c;
    return m;
}

Mat3 rot_y(double b) {
    Mat3 m = Mat3::identity();
    const double c = std::cos(b), s = std::sin(b);
    m(0, 0) = c;
    m(0, 2) = s;
    m(2, 0) = -s;
    m(2, 2) = c;
    return m;
}

} // namespace

Mat3 rotation_matrix(const Orientation& o) {
    return rot_z(o.alpha) * rot_y(o.beta) * rot_z(o.gamma);
}

Orientation euler_from_rotation(const Mat3& r) {
    Orientation o;
    const double r22 = std::clamp(r(2, 2), -1.0, 1.0);
    const double sb = std::hypot(r(0, 2), r(1, 2));
    o.beta = std::atan2(sb, r22);
    if (sb > 1e-12) {
        o.alpha = std::atan2(r(1, 2), r(0, 2));
        o.gamma = std::atan2(r(2, 1), -r(2, 0));
    } else if (r22 > 0.0) {
        // beta ~ 0: only alpha + gamma is determined
        o.alpha = 0.0;
        o.gamma = std::atan2(r(1, 0), r(0, 0));
    } else {
        // beta ~ pi: only alpha - gamma is determined
        o.alpha = 0.0;
        o.gamma = std::atan2(r(0, 1), r(1, 1));
    }
    return o;
}

} // namespace spinsqueeze
