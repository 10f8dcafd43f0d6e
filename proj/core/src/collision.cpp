#include "boltzkit/collision.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "boltzkit/parallel.hpp"

namespace boltzkit {

namespace {

double kinetic_factor(double dist, double gamma) {
    if (gamma == 0.0) return 1.0;
    if (gamma == 1.0) return dist;
    if (gamma == 0.5) return std::sqrt(dist);
    return std::pow(dist, gamma);
}

}  // namespace

std::pair<Vec3, Vec3> post_collision_velocities(const Vec3& v, const Vec3& v_star,
                                                const Vec3& omega) {
    if (std::abs(omega.norm2() - 1.0) > 2e-12)
        throw std::invalid_argument("post_collision_velocities: omega must be a unit vector");
    const Vec3 transfer = omega * omega.dot(v - v_star);
    return {v - transfer, v_star + transfer};
}

CollisionOperator::CollisionOperator(const VelocityGrid& grid, const HemisphereRule& rule,
                                     CollisionKernel kernel)
    : CollisionOperator(grid, rule, kernel, Options()) {}

CollisionOperator::CollisionOperator(const VelocityGrid& grid, const HemisphereRule& rule,
                                     CollisionKernel kernel, Options opt)
    : grid_(grid), rule_(rule), kernel_(kernel), opt_(opt) {
    if (!(kernel.gamma >= 0.0 && kernel.gamma <= 1.0))
        throw std::invalid_argument("CollisionOperator: gamma must lie in [0,1]");
    if (opt_.stride < 1) throw std::invalid_argument("CollisionOperator: stride must be >= 1");
    if (grid_.n() % opt_.stride != 0)
        throw std::invalid_argument("CollisionOperator: stride must divide n");
}

void CollisionOperator::check_field(const VelocityField& f, const char* what) const {
    if (f.grid() != grid_)
        throw std::invalid_argument(std::string(what) + ": field grid does not match operator grid");
    if (!f.finite())
        throw std::invalid_argument(std::string(what) + ": field has non-finite samples");
}

VelocityField CollisionOperator::gain(const VelocityField& f, const VelocityField& g) const {
    check_field(f, "gain");
    check_field(g, "gain");
    const int n = grid_.n();
    const double h = grid_.h();
    const double gamma = kernel_.gamma;
    const int stride = opt_.stride;
    const double cell = h * h * h * stride * stride * stride;
    const double* fv = f.values().data();
    const double* gv = g.values().data();
    const auto& nodes = rule_.nodes();
    const InterpScheme scheme = opt_.scheme;

    VelocityField out(grid_);
    double* acc = out.values().data();

    // Outer loop over the displacement lattice dd = i - j: the rotation, the
    // quadrature offsets and the interpolation stencils depend only on
    // (dd, k), so they are hoisted out of the per-node work. Each output node
    // still accumulates its contributions in a fixed (dd, k) order (the loop
    // order below does not depend on the thread partition), which keeps
    // results independent of the thread count.
    parallel_for(static_cast<std::size_t>(n), opt_.threads, [&](std::size_t ix0, std::size_t ix1) {
        if (ix0 >= ix1) return;
        const int x0 = static_cast<int>(ix0), x1 = static_cast<int>(ix1);
        for (int ddx = -(n - 1); ddx <= n - 1; ++ddx) {
            for (int ddy = -(n - 1); ddy <= n - 1; ++ddy) {
                for (int ddz = -(n - 1); ddz <= n - 1; ++ddz) {
                    if (ddx == 0 && ddy == 0 && ddz == 0) continue;
                    const Vec3 d{h * ddx, h * ddy, h * ddz};
                    const double dn = d.norm();
                    const Frame rot = frame_with_z(d * (1.0 / dn));
                    const double kin = kinetic_factor(dn, gamma) * cell;
                    for (const auto& node : nodes) {
                        const Vec3 omega = rot.apply(node.omega);
                        const Vec3 o = omega * (dn * node.mu);
                        const double w = kin * node.mu * node.weight;
                        const AxisStencil fx = axis_stencil(scheme, -o.x / h);
                        const AxisStencil fy = axis_stencil(scheme, -o.y / h);
                        const AxisStencil fz = axis_stencil(scheme, -o.z / h);
                        const AxisStencil gx = axis_stencil(scheme, o.x / h);
                        const AxisStencil gy = axis_stencil(scheme, o.y / h);
                        const AxisStencil gz = axis_stencil(scheme, o.z / h);
                        for (int ix = x0; ix < x1; ++ix) {
                            const int jx = ix - ddx;
                            if (jx < 0 || jx >= n || jx % stride != 0) continue;
                            for (int iy = std::max(0, ddy); iy < n + std::min(0, ddy); ++iy) {
                                const int jy = iy - ddy;
                                if (jy % stride != 0) continue;
                                for (int iz = std::max(0, ddz); iz < n + std::min(0, ddz); ++iz) {
                                    const int jz = iz - ddz;
                                    if (jz % stride != 0) continue;
                                    const double fval = gather(fv, n, ix, iy, iz, fx, fy, fz);
                                    if (fval == 0.0) continue;
                                    const double gval = gather(gv, n, jx, jy, jz, gx, gy, gz);
                                    acc[grid_.index(ix, iy, iz)] += w * fval * gval;
                                }
                            }
                        }
                    }
                }
            }
        }
        // Coincident term (j = i): for gamma > 0 the kernel vanishes; for
        // gamma = 0 it is 1 and the collision leaves (v, v_*) unchanged, so
        // the angular sum collapses to the rule's angular mass.
        if (gamma == 0.0) {
            const double w0 = rule_.angular_mass() * cell;
            for (int ix = x0; ix < x1; ++ix) {
                if (ix % stride != 0) continue;
                for (int iy = 0; iy < n; iy += stride)
                    for (int iz = 0; iz < n; iz += stride) {
                        const std::size_t i = grid_.index(ix, iy, iz);
                        acc[i] += w0 * fv[i] * gv[i];
                    }
            }
        }
    });
    return out;
}

VelocityField CollisionOperator::loss_factor(const VelocityField& g) const {
    check_field(g, "loss_factor");
    const int n = grid_.n();
    const double h = grid_.h();
    const double gamma = kernel_.gamma;
    const int stride = opt_.stride;
    const double cell = h * h * h * stride * stride * stride;
    const double am = rule_.angular_mass();
    const double* gv = g.values().data();

    VelocityField out(grid_);
    double* acc = out.values().data();
    parallel_for(grid_.size(), opt_.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const Vec3 vi = grid_.node(i);
            double sum = 0.0;
            for (int jx = 0; jx < n; jx += stride)
                for (int jy = 0; jy < n; jy += stride)
                    for (int jz = 0; jz < n; jz += stride) {
                        const double gval = gv[grid_.index(jx, jy, jz)];
                        if (gval == 0.0) continue;
                        const Vec3 d = vi - grid_.node(jx, jy, jz);
                        const double dn2 = d.norm2();
                        if (dn2 == 0.0) {
                            if (gamma == 0.0) sum += gval;
                            continue;
                        }
                        sum += kinetic_factor(std::sqrt(dn2), gamma) * gval;
                    }
            acc[i] = am * cell * sum;
        }
    });
    return out;
}

VelocityField CollisionOperator::loss(const VelocityField& f, const VelocityField& g) const {
    check_field(f, "loss");
    VelocityField out = loss_factor(g);
    out.multiply_pointwise(f);
    return out;
}

VelocityField CollisionOperator::translated_radon(const VelocityField& h_field,
                                                  const Vec3& v_star) const {
    check_field(h_field, "translated_radon");
    const int n = grid_.n();
    const double h = grid_.h();
    const double gamma = kernel_.gamma;
    const double* hv = h_field.values().data();
    const auto& nodes = rule_.nodes();
    const InterpScheme scheme = opt_.scheme;

    VelocityField out(grid_);
    double* acc = out.values().data();
    parallel_for(grid_.size(), opt_.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const Vec3 vi = grid_.node(i);
            const Vec3 d = vi - v_star;
            const double dn = d.norm();
            if (dn == 0.0) {
                // |v - v_*|^gamma = 0 for gamma > 0; for gamma = 0 the
                // integrand is cos(theta) * h(v) since the projection
                // collapses.
                acc[i] = gamma == 0.0 ? rule_.angular_mass() * hv[i] : 0.0;
                continue;
            }
            const Frame rot = frame_with_z(d * (1.0 / dn));
            const double kin = kinetic_factor(dn, gamma);
            const int ix = static_cast<int>(i / (static_cast<std::size_t>(n) * n));
            const int iy = static_cast<int>((i / n) % n);
            const int iz = static_cast<int>(i % n);
            double sum = 0.0;
            for (const auto& node : nodes) {
                const Vec3 omega = rot.apply(node.omega);
                const Vec3 o = omega * (dn * node.mu);
                const AxisStencil sx = axis_stencil(scheme, -o.x / h);
                const AxisStencil sy = axis_stencil(scheme, -o.y / h);
                const AxisStencil sz = axis_stencil(scheme, -o.z / h);
                sum += node.mu * node.weight * gather(hv, n, ix, iy, iz, sx, sy, sz);
            }
            acc[i] = kin * sum;
        }
    });
    return out;
}

}  // namespace boltzkit
