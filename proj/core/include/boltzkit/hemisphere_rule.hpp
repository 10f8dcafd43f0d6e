#pragma once

#include <vector>

#include "boltzkit/vec3.hpp"

namespace boltzkit {

/// Quadrature rule for the upper hemisphere S^2_+ = {omega : omega_3 >= 0}.
///
/// Writing omega = (sin(theta)cos(phi), sin(theta)sin(phi), cos(theta)) and
/// mu = cos(theta), the surface measure is d(omega) = d(mu) d(phi) with
/// mu in [0,1], phi in [0,2pi). The rule is the tensor product of
/// Gauss-Legendre in mu (order n_mu) and the periodic trapezoid rule in phi
/// (n_phi equispaced nodes), which integrates any integrand of the form
/// f(mu)*e^{i m phi} exactly for polynomial f up to degree 2*n_mu-1 and
/// |m| < n_phi. In particular the angular collision factor cos(theta) = mu
/// and its low powers are integrated to machine precision.
class HemisphereRule {
  public:
    struct Node {
        Vec3 omega;     ///< unit vector with omega.z = mu >= 0
        double mu;      ///< cos(theta)
        double weight;  ///< d(omega) weight (no cos factor folded in)
    };

    HemisphereRule(int n_mu, int n_phi);

    int n_mu() const { return n_mu_; }
    int n_phi() const { return n_phi_; }
    const std::vector<Node>& nodes() const { return nodes_; }

    /// Sum of mu * weight over the rule; the discrete value of
    /// int_{S^2_+} cos(theta) d(omega) = pi, used as the loss-side angular
    /// factor so that gain and loss share one angular discretization.
    double angular_mass() const { return angular_mass_; }

    /// Gauss-Legendre nodes/weights on [-1, 1] (Newton on the Legendre
    /// recurrence). Exposed for reuse by other quadratures.
    static void gauss_legendre(int order, std::vector<double>& nodes,
                               std::vector<double>& weights);

  private:
    int n_mu_;
    int n_phi_;
    std::vector<Node> nodes_;
    double angular_mass_ = 0.0;
};

}  // namespace boltzkit
