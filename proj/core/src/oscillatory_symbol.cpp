#include "boltzkit/oscillatory_symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "boltzkit/dyadic_partition.hpp"
#include "boltzkit/parallel.hpp"

namespace boltzkit {

namespace {

constexpr double pi = std::numbers::pi;

using cplx = std::complex<double>;

cplx pairwise(const cplx* data, std::size_t count) {
    if (count <= 32) {
        cplx sum{0.0, 0.0};
        for (std::size_t i = 0; i < count; ++i) sum += data[i];
        return sum;
    }
    const std::size_t half = count / 2;
    return pairwise(data, half) + pairwise(data + half, count - half);
}

double region_threshold(int z) { return std::ldexp(64.0, 2 * std::abs(z)); }

void check_resolution(const HemisphereRule& rule, double s) {
    const double need = 40.0 * std::sqrt(s);
    if (static_cast<double>(rule.n_mu()) * rule.n_phi() < need)
        throw std::runtime_error(
            "symbol quadrature under-resolved: need n_mu * n_phi >= 40 sqrt(s) = " +
            std::to_string(need));
}

}  // namespace

PhasePoint PhasePoint::from_vectors(const Vec3& x, const Vec3& xi) {
    const double nx = x.norm();
    const double nxi = xi.norm();
    if (nx == 0.0 || nxi == 0.0)
        throw std::invalid_argument("PhasePoint: both vectors must be nonzero");
    PhasePoint pt;
    pt.x = x;
    pt.xi = xi;
    pt.s = nx * nxi;
    pt.theta0 = std::atan2(x.cross(xi).norm(), x.dot(xi));
    return pt;
}

PhasePoint PhasePoint::from_invariants(double s, double theta0) {
    if (!(s > 0.0)) throw std::invalid_argument("PhasePoint: s must be positive");
    if (!(theta0 >= 0.0 && theta0 <= pi))
        throw std::invalid_argument("PhasePoint: theta0 must lie in [0, pi]");
    const double m = std::sqrt(s);
    return from_vectors({0.0, 0.0, m}, {m * std::sin(theta0), 0.0, m * std::cos(theta0)});
}

std::complex<double> symbol_A(const Vec3& x, const Vec3& xi, const HemisphereRule& rule,
                              double gamma) {
    const double nx = x.norm();
    const double nxi = xi.norm();
    check_resolution(rule, nx * nxi);

    if (nx == 0.0) return gamma == 0.0 ? cplx{rule.angular_mass(), 0.0} : cplx{0.0, 0.0};
    const double prefactor = gamma == 0.0 ? 1.0 : std::pow(nx, gamma);
    if (nxi == 0.0) return cplx{prefactor * rule.angular_mass(), 0.0};

    const Frame frame = frame_with_z(x * (1.0 / nx));
    double re = 0.0, im = 0.0;
    for (const auto& node : rule.nodes()) {
        const Vec3 omega = frame.apply(node.omega);
        const double phase = (nx * node.mu) * xi.dot(omega);
        const double w = node.mu * node.weight;
        re += w * std::cos(phase);
        im -= w * std::sin(phase);
    }
    return prefactor * cplx{re, im};
}

std::complex<double> symbol_A(const PhasePoint& pt, const HemisphereRule& rule, double gamma) {
    return symbol_A(pt.x, pt.xi, rule, gamma);
}

std::complex<double> symbol_a(const PhasePoint& pt, const HemisphereRule& rule, double gamma) {
    const double nxi = pt.xi.norm();
    const double scale = gamma == 0.0 ? 1.0 : std::pow(nxi, gamma);
    return scale * symbol_A(pt, rule, gamma);
}

void auto_rule_orders(double s, int& n_mu, int& n_phi) {
    n_mu = std::max(16, static_cast<int>(std::ceil(0.5 * s)) + 32);
    n_phi = std::max(32, static_cast<int>(std::ceil(s)) + 64);
}

std::complex<double> symbol_a_auto(double s, double theta0, double gamma, int threads) {
    if (!(s > 0.0)) throw std::invalid_argument("symbol_a_auto: s must be positive");
    int n_mu = 0, n_phi = 0;
    auto_rule_orders(s, n_mu, n_phi);

    std::vector<double> gx, gw;
    HemisphereRule::gauss_legendre(n_mu, gx, gw);

    const double st0 = std::sin(theta0);
    const double ct0 = std::cos(theta0);
    const double dphi = 2.0 * pi / n_phi;

    std::vector<cplx> rows(n_mu);
    parallel_for(n_mu, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t a = begin; a < end; ++a) {
            const double mu = 0.5 * (gx[a] + 1.0);
            const double radial = s * mu * st0 * std::sqrt(1.0 - mu * mu);
            const double axial = s * mu * mu * ct0;
            double re = 0.0, im = 0.0;
            for (int b = 0; b < n_phi; ++b) {
                const double phase = radial * std::cos(dphi * b) + axial;
                re += std::cos(phase);
                im -= std::sin(phase);
            }
            rows[a] = (0.5 * gw[a] * dphi * mu) * cplx{re, im};
        }
    });
    const cplx integral = pairwise(rows.data(), rows.size());
    const double scale = gamma == 0.0 ? 1.0 : std::pow(s, gamma);
    return scale * integral;
}

std::complex<double> symbol_a_closed_form(double s, double theta0, double gamma) {
    if (s == 0.0) return gamma == 0.0 ? cplx{pi, 0.0} : cplx{0.0, 0.0};
    const double mag = 2.0 * pi * std::sin(0.5 * s) / s;
    const double phase = -0.5 * s * std::cos(theta0);
    const double scale = gamma == 0.0 ? 1.0 : std::pow(s, gamma);
    return scale * mag * cplx{std::cos(phase), std::sin(phase)};
}

int best_cone_level(double theta0, int max_level) {
    if (DyadicPartition::cone(0).contains(theta0)) return 0;
    for (int a = 1; a <= max_level; ++a) {
        if (DyadicPartition::cone(a).contains(theta0)) return a;
        if (DyadicPartition::cone(-a).contains(theta0)) return -a;
    }
    throw std::domain_error("best_cone_level: angle in the truncation zone of the dyadic cones");
}

RegionLabel region_classify(const PhasePoint& pt, int z) {
    if (!DyadicPartition::cone(z).contains(pt.theta0))
        throw std::domain_error("region_classify: point is outside the requested cone");
    const double base = region_threshold(z);
    RegionLabel label;
    label.region1 = pt.s >= base;
    label.region2 = pt.s <= 8.0 * base;
    return label;
}

bool in_region1(double s, double theta0) {
    return s >= region_threshold(best_cone_level(theta0));
}

std::complex<double> principal_symbol(const PhasePoint& pt, double gamma) {
    if (!in_region1(pt.s, pt.theta0))
        throw std::domain_error("principal_symbol: point is not in the stationary-phase region");
    const double sigma_p = 0.5 * (std::cos(pt.theta0) + 1.0);
    const double sigma_m = 0.5 * (std::cos(pt.theta0) - 1.0);
    const cplx osc_p{std::cos(pt.s * sigma_p), -std::sin(pt.s * sigma_p)};
    const cplx osc_m{std::cos(pt.s * sigma_m), -std::sin(pt.s * sigma_m)};
    return std::pow(pt.s, gamma - 1.0) * (principal_c1 * osc_p + principal_c2 * osc_m);
}

ResidualFit asymptotic_residual(double theta0, std::span<const double> s_values,
                                double gamma, int threads) {
    if (s_values.size() < 4)
        throw std::invalid_argument("asymptotic_residual: need at least 4 s values");
    double s_min = s_values[0], s_max = s_values[0];
    for (double s : s_values) {
        s_min = std::min(s_min, s);
        s_max = std::max(s_max, s);
    }
    if (!(s_max >= 100.0 * (1.0 - 1e-9) * s_min))
        throw std::invalid_argument("asymptotic_residual: s values must span >= 2 decades");

    ResidualFit fit;
    fit.samples.reserve(s_values.size());
    for (double s : s_values) {
        if (!in_region1(s, theta0))
            throw std::domain_error("asymptotic_residual: ray leaves the stationary-phase region");
        ResidualSample sample;
        sample.s = s;
        sample.quadrature = symbol_a_auto(s, theta0, gamma, threads);
        sample.principal = principal_symbol(PhasePoint::from_invariants(s, theta0), gamma);
        sample.residual = std::abs(sample.quadrature - sample.principal);
        fit.samples.push_back(sample);
    }

    const auto slope_of = [&](auto value) {
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        const double m = static_cast<double>(fit.samples.size());
        for (const auto& sm : fit.samples) {
            const double lx = std::log(sm.s);
            const double ly = std::log(std::max(value(sm), 1e-300));
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
        }
        return (m * sxy - sx * sy) / (m * sxx - sx * sx);
    };
    fit.slope = slope_of([](const ResidualSample& sm) { return sm.residual; });
    fit.principal_slope = slope_of([](const ResidualSample& sm) { return std::abs(sm.principal); });
    return fit;
}

Region2Sample region2_magnitude(const PhasePoint& pt, double gamma, int threads) {
    const int z = best_cone_level(pt.theta0);
    if (!(pt.s <= 8.0 * region_threshold(z)))
        throw std::domain_error("region2_magnitude: point is not in the small-phase region");
    Region2Sample sample;
    const double wgt = std::abs(std::sin(pt.theta0) * std::cos(pt.theta0));
    if (wgt < 1e-9) {
        sample.excluded = true;
        return sample;
    }
    const double a_mag = std::abs(symbol_a_auto(pt.s, pt.theta0, gamma, threads));
    sample.ratio = a_mag / (wgt * std::pow(pt.s, gamma - 1.0));
    return sample;
}

}  // namespace boltzkit
