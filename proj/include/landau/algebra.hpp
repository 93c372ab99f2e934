#pragma once

#include <array>
#include <cmath>

namespace landau {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double& operator[](int i) { return (&x)[i]; }
    double operator[](int i) const { return (&x)[i]; }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double a) const { return {a * x, a * y, a * z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
};

inline Vec3 operator*(double a, const Vec3& v) { return v * a; }

/// Symmetric 3x3 matrix, six stored components (symmetry exact by layout).
struct SymMat3 {
    double xx = 0.0, yy = 0.0, zz = 0.0;
    double xy = 0.0, xz = 0.0, yz = 0.0;

    double operator()(int i, int j) const {
        static constexpr int map[3][3] = {{0, 3, 4}, {3, 1, 5}, {4, 5, 2}};
        return (&xx)[map[i][j]];
    }

    SymMat3 operator+(const SymMat3& o) const {
        return {xx + o.xx, yy + o.yy, zz + o.zz, xy + o.xy, xz + o.xz, yz + o.yz};
    }
    SymMat3 operator-(const SymMat3& o) const {
        return {xx - o.xx, yy - o.yy, zz - o.zz, xy - o.xy, xz - o.xz, yz - o.yz};
    }
    SymMat3 operator*(double a) const {
        return {a * xx, a * yy, a * zz, a * xy, a * xz, a * yz};
    }

    Vec3 apply(const Vec3& v) const {
        return {xx * v.x + xy * v.y + xz * v.z,
                xy * v.x + yy * v.y + yz * v.z,
                xz * v.x + yz * v.y + zz * v.z};
    }

    double quad_form(const Vec3& v) const { return v.dot(apply(v)); }
    double trace() const { return xx + yy + zz; }

    double det() const {
        return xx * (yy * zz - yz * yz) - xy * (xy * zz - yz * xz) +
               xz * (xy * yz - yy * xz);
    }

    static SymMat3 identity() { return {1.0, 1.0, 1.0, 0.0, 0.0, 0.0}; }
};

inline SymMat3 operator*(double a, const SymMat3& m) { return m * a; }

/// Eigenvalues of a symmetric 3x3 matrix by the closed-form trigonometric
/// method, returned in ascending order. Branch-free apart from the
/// diagonal-matrix shortcut.
inline std::array<double, 3> sym3_eigenvalues(const SymMat3& m) {
    const double p1 = m.xy * m.xy + m.xz * m.xz + m.yz * m.yz;
    if (p1 == 0.0) {
        std::array<double, 3> e{m.xx, m.yy, m.zz};
        if (e[0] > e[1]) std::swap(e[0], e[1]);
        if (e[1] > e[2]) std::swap(e[1], e[2]);
        if (e[0] > e[1]) std::swap(e[0], e[1]);
        return e;
    }
    const double q = m.trace() / 3.0;
    const double p2 = (m.xx - q) * (m.xx - q) + (m.yy - q) * (m.yy - q) +
                      (m.zz - q) * (m.zz - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    SymMat3 b = (m - SymMat3::identity() * q) * (1.0 / p);
    double r = b.det() / 2.0;
    r = std::fmax(-1.0, std::fmin(1.0, r));
    const double phi = std::acos(r) / 3.0;
    const double two_pi_3 = 2.0943951023931953;
    const double emax = q + 2.0 * p * std::cos(phi);
    const double emin = q + 2.0 * p * std::cos(phi + two_pi_3);
    return {emin, 3.0 * q - emax - emin, emax};
}

inline double sym3_eig_min(const SymMat3& m) { return sym3_eigenvalues(m)[0]; }
inline double sym3_eig_max(const SymMat3& m) { return sym3_eigenvalues(m)[2]; }

}  // namespace landau
