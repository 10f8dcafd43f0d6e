#include "boltzkit/dyadic_partition.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace boltzkit {

namespace {

constexpr double pi = std::numbers::pi;

double mollifier(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

/// Step rising across [pi/4, pi/2] in the angle variable.
double step4(double theta) {
    return DyadicPartition::smooth_step((theta - pi / 4.0) / (pi / 4.0));
}

/// Angular generator, supported in (pi/8, pi/2).
double zeta_base(double theta) { return step4(2.0 * theta) - step4(theta); }

/// Radial step rising across [4, 8].
double stepw(double r) { return DyadicPartition::smooth_step((r - 4.0) / 4.0); }

}  // namespace

double DyadicPartition::smooth_step(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = mollifier(t);
    return a / (a + mollifier(1.0 - t));
}

DyadicPartition::DyadicPartition(int max_level) : max_level_(max_level) {
    if (max_level < 1) throw std::invalid_argument("DyadicPartition: max_level must be >= 1");
}

double DyadicPartition::zeta(int z, double theta) const {
    if (z < -max_level_ || z > max_level_)
        throw std::invalid_argument("DyadicPartition: level out of range");
    if (z == 0) return step4(2.0 * theta) + step4(2.0 * (pi - theta)) - 1.0;
    if (z > 0) return zeta_base(std::ldexp(theta, z));
    return zeta_base(std::ldexp(pi - theta, -z));
}

double DyadicPartition::zeta_sum(double theta) const {
    double sum = zeta(0, theta);
    for (int z = 1; z <= max_level_; ++z) sum += zeta(z, theta) + zeta(-z, theta);
    return sum;
}

AngularCone DyadicPartition::cone(int z) {
    if (z == 0) return {pi / 8.0, 7.0 * pi / 8.0};
    const int a = z > 0 ? z : -z;
    const double lo = pi * std::ldexp(1.0, -(a + 3));
    const double hi = pi * std::ldexp(1.0, -(a + 1));
    if (z > 0) return {lo, hi};
    return {pi - hi, pi - lo};
}

double DyadicPartition::truncation_angle() const {
    return pi * std::ldexp(1.0, -(max_level_ + 2));
}

double DyadicPartition::rho(int k, double r) {
    const double rs = std::ldexp(r, -k);
    return stepw(rs) - stepw(rs / 2.0);
}

double DyadicPartition::rho_sum(double r, int k_lo, int k_hi) {
    if (k_lo > k_hi) throw std::invalid_argument("DyadicPartition: empty radial range");
    double sum = 0.0;
    for (int k = k_lo; k <= k_hi; ++k) sum += rho(k, r);
    return sum;
}

PartitionReport partition_check(const DyadicPartition& part,
                                std::span<const double> thetas,
                                std::span<const double> radii) {
    PartitionReport report;

    const double trunc = part.truncation_angle();
    for (double theta : thetas) {
        if (theta < trunc || theta > pi - trunc)
            throw std::invalid_argument("partition_check: angle inside the truncation zone");
        report.max_angular_defect =
            std::max(report.max_angular_defect, std::abs(part.zeta_sum(theta) - 1.0));
        for (int z = -part.max_level(); z <= part.max_level(); ++z) {
            if (part.zeta(z, theta) > 0.0 && !DyadicPartition::cone(z).contains(theta)) {
                report.supports_contained = false;
                if (report.first_violation.empty())
                    report.first_violation = "zeta_" + std::to_string(z) +
                                             " nonzero at theta=" + std::to_string(theta);
            }
        }
    }

    if (!radii.empty()) {
        double r_min = radii[0], r_max = radii[0];
        for (double r : radii) {
            if (!(r > 0.0)) throw std::invalid_argument("partition_check: radius must be positive");
            r_min = std::min(r_min, r);
            r_max = std::max(r_max, r);
        }
        const int k_lo = static_cast<int>(std::floor(std::log2(r_min / 8.0)));
        const int k_hi = static_cast<int>(std::ceil(std::log2(r_max / 4.0)));
        for (double r : radii) {
            report.max_radial_defect =
                std::max(report.max_radial_defect,
                         std::abs(DyadicPartition::rho_sum(r, k_lo, k_hi) - 1.0));
            for (int k = k_lo; k <= k_hi; ++k) {
                const double lo = 4.0 * std::ldexp(1.0, k);
                if (DyadicPartition::rho(k, r) > 0.0 && !(r > lo && r < 4.0 * lo)) {
                    report.supports_contained = false;
                    if (report.first_violation.empty())
                        report.first_violation = "rho_" + std::to_string(k) +
                                                 " nonzero at r=" + std::to_string(r);
                }
            }
        }
    }
    return report;
}

}  // namespace boltzkit
