#pragma once

#include <array>
#include <cmath>

namespace spinsqueeze {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        const double n = norm();
        return {x / n, y / n, z / n};
    }
};

// Row-major 3x3 matrix, just enough linear algebra for the 3-vector frame work.
struct Mat3 {
    std::array<std::array<double, 3>, 3> a{};

    static Mat3 zero() { return Mat3{}; }
    static Mat3 identity() {
        Mat3 m;
        m.a[0][0] = m.a[1][1] = m.a[2][2] = 1.0;
        return m;
    }

    double& operator()(int r, int c) { return a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    double operator()(int r, int c) const { return a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

    Mat3 transposed() const {
        Mat3 t;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 p;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += (*this)(r, k) * o(k, c);
                p(r, c) = s;
            }
        return p;
    }

    Vec3 operator*(const Vec3& v) const {
        return {a[0][0] * v.x + a[0][1] * v.y + a[0][2] * v.z,
                a[1][0] * v.x + a[1][1] * v.y + a[1][2] * v.z,
                a[2][0] * v.x + a[2][1] * v.y + a[2][2] * v.z};
    }

    Mat3 operator+(const Mat3& o) const {
        Mat3 s;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) s(r, c) = (*this)(r, c) + o(r, c);
        return s;
    }

    Mat3& operator+=(const Mat3& o) {
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) (*this)(r, c) += o(r, c);
        return *this;
    }

    Mat3 scaled(double s) const {
        Mat3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m(r, c) = (*this)(r, c) * s;
        return m;
    }

    Vec3 column(int c) const { return {a[0][static_cast<std::size_t>(c)], a[1][static_cast<std::size_t>(c)], a[2][static_cast<std::size_t>(c)]}; }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& row : a)
            for (double v : row) s += v * v;
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& row : a)
            for (double v : row) m = std::max(m, std::abs(v));
        return m;
    }
};

// Euler angles of an active Z-Y-Z rotation: R = Rz(alpha) * Ry(beta) * Rz(gamma),
// acting on column vectors.  This is the convention used everywhere in the
// toolkit (docs, CLI, file formats).
struct Orientation {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

Mat3 rotation_matrix(const Orientation& o);

// Inverse of rotation_matrix; beta is returned in [0, pi], alpha = 0 at the
// beta = 0 / beta = pi gimbal points.
Orientation euler_from_rotation(const Mat3& r);

} // namespace spinsqueeze
