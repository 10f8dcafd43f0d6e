#include "boltzkit/hemisphere_rule.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace boltzkit {

void HemisphereRule::gauss_legendre(int order, std::vector<double>& nodes,
                                    std::vector<double>& weights) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    nodes.assign(order, 0.0);
    weights.assign(order, 0.0);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_order.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // one polishing step after convergence
                p0 = 1.0;
                p1 = x;
                for (int k = 2; k <= order; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = order * (x * p1 - p0) / (x * x - 1.0);
                break;
            }
        }
        nodes[i] = -x;
        nodes[order - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[order - 1 - i] = w;
    }
}

HemisphereRule::HemisphereRule(int n_mu, int n_phi) : n_mu_(n_mu), n_phi_(n_phi) {
    if (n_mu < 2 || n_phi < 4)
        throw std::invalid_argument("HemisphereRule: need n_mu >= 2 and n_phi >= 4");
    std::vector<double> gx, gw;
    gauss_legendre(n_mu, gx, gw);

    nodes_.reserve(static_cast<std::size_t>(n_mu) * n_phi);
    const double dphi = 2.0 * std::numbers::pi / n_phi;
    for (int a = 0; a < n_mu; ++a) {
        const double mu = 0.5 * (gx[a] + 1.0);  // [-1,1] -> [0,1]
        const double wmu = 0.5 * gw[a];
        const double st = std::sqrt(1.0 - mu * mu);
        for (int b = 0; b < n_phi; ++b) {
            const double phi = dphi * b;
            Node node;
            node.omega = {st * std::cos(phi), st * std::sin(phi), mu};
            node.mu = mu;
            node.weight = wmu * dphi;
            nodes_.push_back(node);
        }
    }
    for (const Node& node : nodes_) angular_mass_ += node.mu * node.weight;
}

}  // namespace boltzkit
