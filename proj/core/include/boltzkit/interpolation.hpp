#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "boltzkit/field.hpp"

namespace boltzkit {

/// Off-grid evaluation scheme for velocity fields. Values outside the box
/// are zero in either scheme.
///
/// linear: trilinear on the 2x2x2 cell corners. Positivity preserving, which
///   the monotone bracket iteration relies on; O(h^2) accurate.
/// cubic: tensor 4-point Lagrange (the 4x4x4 neighborhood). O(h^4) accurate
///   but overshoots, so not order preserving. Used where equilibrium or
///   conservation defects at coarse resolution matter more than positivity.
enum class InterpScheme { linear, cubic };

/// One axis of a separable interpolation stencil: taps at lattice offsets
/// base .. base+count-1 from the reference node.
struct AxisStencil {
    int base;
    int count;
    double w[4];
};

/// Builds the 1-d stencil for an offset u in lattice units (u = 0 is the
/// reference node itself).
inline AxisStencil axis_stencil(InterpScheme scheme, double u) {
    AxisStencil s;
    const double fl = std::floor(u);
    const double t = u - fl;
    const int ifl = static_cast<int>(fl);
    if (scheme == InterpScheme::linear) {
        s.base = ifl;
        s.count = 2;
        s.w[0] = 1.0 - t;
        s.w[1] = t;
    } else {
        s.base = ifl - 1;
        s.count = 4;
        s.w[0] = -t * (t - 1.0) * (t - 2.0) / 6.0;
        s.w[1] = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
        s.w[2] = -(t + 1.0) * t * (t - 2.0) / 2.0;
        s.w[3] = (t + 1.0) * t * (t - 1.0) / 6.0;
    }
    return s;
}

/// Separable gather around lattice node (i0, j0, k0) with zero extension:
/// sum_{a,b,c} wx[a] wy[b] wz[c] * data[i0+bx+a, j0+by+b, k0+bz+c].
inline double gather(const double* data, int n, int i0, int j0, int k0,
                     const AxisStencil& sx, const AxisStencil& sy,
                     const AxisStencil& sz) {
    const int ia0 = std::max(0, -(i0 + sx.base));
    const int ia1 = std::min(sx.count, n - (i0 + sx.base));
    const int jb0 = std::max(0, -(j0 + sy.base));
    const int jb1 = std::min(sy.count, n - (j0 + sy.base));
    const int kc0 = std::max(0, -(k0 + sz.base));
    const int kc1 = std::min(sz.count, n - (k0 + sz.base));
    if (ia0 >= ia1 || jb0 >= jb1 || kc0 >= kc1) return 0.0;
    double acc = 0.0;
    for (int a = ia0; a < ia1; ++a) {
        const double* plane = data + static_cast<std::size_t>(i0 + sx.base + a) * n * n;
        double acc_y = 0.0;
        for (int b = jb0; b < jb1; ++b) {
            const double* row = plane + static_cast<std::size_t>(j0 + sy.base + b) * n;
            const double* cell = row + (k0 + sz.base);
            double acc_z = 0.0;
            for (int c = kc0; c < kc1; ++c) acc_z += sz.w[c] * cell[c];
            acc_y += sy.w[b] * acc_z;
        }
        acc += sx.w[a] * acc_y;
    }
    return acc;
}

/// Evaluates a field at an arbitrary velocity (zero outside the box).
inline double sample(const VelocityField& f, InterpScheme scheme, const Vec3& p) {
    const VelocityGrid& g = f.grid();
    const double inv_h = 1.0 / g.h();
    const AxisStencil sx = axis_stencil(scheme, (p.x + g.extent()) * inv_h);
    const AxisStencil sy = axis_stencil(scheme, (p.y + g.extent()) * inv_h);
    const AxisStencil sz = axis_stencil(scheme, (p.z + g.extent()) * inv_h);
    return gather(f.values().data(), g.n(), 0, 0, 0, sx, sy, sz);
}

/// Parses "linear" / "cubic"; throws on anything else.
InterpScheme parse_scheme(const std::string& name);
const char* scheme_name(InterpScheme scheme);

}  // namespace boltzkit
