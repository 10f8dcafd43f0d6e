#pragma once

#include <utility>

#include "boltzkit/field.hpp"
#include "boltzkit/hemisphere_rule.hpp"
#include "boltzkit/interpolation.hpp"

namespace boltzkit {

/// Cutoff collision kernel B(v - v_*, omega) = |v - v_*|^gamma * cos(theta),
/// cos(theta) = omega . (v - v_*)/|v - v_*| on the hemisphere where that is
/// non-negative. gamma = 0 is Maxwell molecules, gamma in (0,1) a hard
/// potential, gamma = 1 hard spheres. The angular factor is fixed to
/// cos(theta); the struct is the extension point if other integrable angular
/// factors are ever needed, but only this one is implemented.
struct CollisionKernel {
    double gamma = 1.0;
};

/// Elastic post-collision pair
///   v'  = v  - [omega.(v - v_*)] omega
///   v'_* = v_* + [omega.(v - v_*)] omega.
/// Requires |omega| = 1 within 1e-12; momentum and energy are conserved
/// identically by construction.
std::pair<Vec3, Vec3> post_collision_velocities(const Vec3& v, const Vec3& v_star,
                                                const Vec3& omega);

/// Direct quadrature of the gain and loss parts of the collision operator on
/// a velocity grid.
///
/// gain:  Q+(f,g)(v_i) = sum_{j,k} f(v') g(v'_*) |v_i - v_j|^gamma mu_k w_k h^3
/// loss:  Q-(f,g) = f . L(g),  L(g)(v_i) = am * sum_j g(v_j)|v_i - v_j|^gamma h^3
/// where (mu_k, w_k) runs over the hemisphere rule aligned with v_i - v_j,
/// am is the rule's angular mass (= pi up to rule precision), and off-grid
/// arguments are interpolated with zero extension.
///
/// Coincident nodes: |0|^gamma is 0 for gamma > 0 and 1 for gamma = 0 (the
/// kernel limit, keeping the Maxwell-molecule loss exactly am * mass).
///
/// Work is data-parallel over output nodes; every node accumulates its sum
/// in a fixed order, so results are byte-identical for any thread count.
class CollisionOperator {
  public:
    struct Options {
        InterpScheme scheme = InterpScheme::linear;
        int threads = 0;  ///< <= 0: all hardware threads
        /// v_* lattice subsampling factor for smoke runs. Values > 1 skip
        /// grid points (weights rescaled by stride^3); cheap but NOT a
        /// convergent discretization - never use for measurements.
        int stride = 1;
    };

    CollisionOperator(const VelocityGrid& grid, const HemisphereRule& rule,
                      CollisionKernel kernel);
    CollisionOperator(const VelocityGrid& grid, const HemisphereRule& rule,
                      CollisionKernel kernel, Options opt);

    const VelocityGrid& grid() const { return grid_; }
    const HemisphereRule& rule() const { return rule_; }
    const CollisionKernel& kernel() const { return kernel_; }
    const Options& options() const { return opt_; }

    VelocityField gain(const VelocityField& f, const VelocityField& g) const;
    VelocityField loss_factor(const VelocityField& g) const;
    VelocityField loss(const VelocityField& f, const VelocityField& g) const;

    /// The translation-conjugated Radon average
    ///   (tau_{-v_*} T tau_{v_*}) h (v_i)
    ///     = |v_i - v_*|^gamma sum_k mu_k w_k h(v_i - ((v_i - v_*).omega_k) omega_k),
    /// i.e. one gain-type angular sum without the v_* integral.
    VelocityField translated_radon(const VelocityField& h, const Vec3& v_star) const;

  private:
    VelocityGrid grid_;
    HemisphereRule rule_;
    CollisionKernel kernel_;
    Options opt_;

    void check_field(const VelocityField& f, const char* what) const;
};

}  // namespace boltzkit
