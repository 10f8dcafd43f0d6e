#pragma once

#include <cmath>

namespace boltzkit {

/// Plain 3-vector for velocities and phase-space points.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {s * x, s * y, s * z}; }
    constexpr Vec3& operator+=(const Vec3& o) {
        x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Vec3& operator-=(const Vec3& o) {
        x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    constexpr double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.dot(b); }
constexpr double norm2(const Vec3& v) { return v.norm2(); }
inline double norm(const Vec3& v) { return v.norm(); }

/// Japanese bracket <v> = sqrt(1 + |v|^2).
inline double bracket(const Vec3& v) { return std::sqrt(1.0 + v.norm2()); }

/// Rotation stored as the images of the basis vectors (columns).
struct Frame {
    Vec3 c0, c1, c2;
    Vec3 apply(const Vec3& u) const { return u.x * c0 + u.y * c1 + u.z * c2; }
};

/// Deterministic rotation taking e3 to the unit vector dhat: Rodrigues about
/// e3 x dhat; for dhat = -e3 a fixed 180-degree turn about e1.
inline Frame frame_with_z(const Vec3& dhat) {
    const double s2 = dhat.x * dhat.x + dhat.y * dhat.y;
    const double s = std::sqrt(s2);
    if (s < 1e-14) {
        if (dhat.z > 0.0) return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        return {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
    }
    const double c = dhat.z;
    const double kx = -dhat.y / s;
    const double ky = dhat.x / s;
    const double omc = 1.0 - c;
    Frame r;
    r.c0 = {1.0 - omc * ky * ky, omc * kx * ky, -s * ky};
    r.c1 = {omc * kx * ky, 1.0 - omc * kx * kx, s * kx};
    r.c2 = {s * ky, -s * kx, c};
    return r;
}

}  // namespace boltzkit
