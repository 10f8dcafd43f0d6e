#include <cmath>
#include <complex>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "boltzkit/dyadic_partition.hpp"
#include "boltzkit/field_io.hpp"
#include "boltzkit/oscillatory_symbol.hpp"
#include "tool_common.hpp"

namespace boltzkit::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Config stamp_for(const std::string& mode, double gamma) {
    Config stamp;
    stamp.set("symbol.mode", mode);
    stamp.set("symbol.gamma", format_double(gamma));
    return stamp;
}

void symbol_row(CsvWriter& csv, double s, double theta0, std::complex<double> a,
                double principal_abs, double residual) {
    csv.row(std::vector<double>{s, theta0, a.real(), a.imag(), principal_abs, residual});
}

const std::vector<std::string> kSymbolColumns{"s",    "theta0",        "re_a",
                                              "im_a", "abs_principal", "residual"};

}  // namespace

/// eval mode: one symbol value by converged quadrature. The principal and
/// residual columns are NaN when (s, theta0) falls outside the
/// stationary-phase region.
int run_symbol_eval(const GlobalOptions& opt, double s, double theta0, double gamma) {
    const std::complex<double> a = symbol_a_auto(s, theta0, gamma, opt.threads);
    double principal_abs = kNaN, residual = kNaN;
    if (in_region1(s, theta0)) {
        const std::complex<double> principal =
            principal_symbol(PhasePoint::from_invariants(s, theta0), gamma);
        principal_abs = std::abs(principal);
        residual = std::abs(a - principal);
    }
    const std::string path = opt.out_path("symbol.csv");
    CsvWriter csv(path, kSymbolColumns);
    symbol_row(csv, s, theta0, a, principal_abs, residual);
    csv.finish(base_metadata(stamp_for("eval", gamma)));
    std::cout << "a = " << format_double(a.real()) << " + " << format_double(a.imag())
              << "i, residual " << format_double(residual) << "; wrote " << path << "\n";
    return 0;
}

/// ray mode: residual decay along a fixed-angle ray, log-spaced in s.
int run_symbol_ray(const GlobalOptions& opt, double theta0, double gamma, double s_lo,
                   double s_hi, int count) {
    if (count < 4) throw std::invalid_argument("symbol ray: --count must be >= 4");
    std::vector<double> s_values;
    for (int i = 0; i < count; ++i)
        s_values.push_back(
            std::pow(10.0, std::log10(s_lo) + (std::log10(s_hi) - std::log10(s_lo)) * i /
                                                  (count - 1)));
    const ResidualFit fit = asymptotic_residual(theta0, s_values, gamma, opt.threads);

    const std::string path = opt.out_path("symbol.csv");
    CsvWriter csv(path, kSymbolColumns);
    for (const ResidualSample& sample : fit.samples)
        symbol_row(csv, sample.s, theta0, sample.quadrature, std::abs(sample.principal),
                   sample.residual);
    auto metadata = base_metadata(stamp_for("ray", gamma));
    metadata["residual_slope"] = format_double(fit.slope);
    metadata["principal_slope"] = format_double(fit.principal_slope);
    csv.finish(metadata);
    std::cout << "residual slope " << format_double(fit.slope) << ", principal slope "
              << format_double(fit.principal_slope) << "; wrote " << path << "\n";
    return 0;
}

/// region mode: classifies (s, theta0) against the dyadic cone at level z and
/// reports the region-II magnitude ratio.
int run_symbol_region(const GlobalOptions& opt, double s, double theta0, double gamma, int z) {
    const PhasePoint pt = PhasePoint::from_invariants(s, theta0);
    const RegionLabel label = region_classify(pt, z);
    double ratio = kNaN;
    bool excluded = true;
    if (label.region2) {
        const Region2Sample sample = region2_magnitude(pt, gamma, opt.threads);
        ratio = sample.ratio;
        excluded = sample.excluded;
    }
    const std::string path = opt.out_path("symbol.csv");
    CsvWriter csv(path, std::vector<std::string>{"s", "theta0", "z", "region1", "region2",
                                                 "magnitude_ratio"});
    csv.row(std::vector<double>{s, theta0, static_cast<double>(z), label.region1 ? 1.0 : 0.0,
                                label.region2 ? 1.0 : 0.0, ratio});
    auto metadata = base_metadata(stamp_for("region", gamma));
    metadata["ratio_excluded"] = excluded ? "true" : "false";
    csv.finish(metadata);
    std::cout << "region1=" << label.region1 << " region2=" << label.region2 << " ratio "
              << format_double(ratio) << "; wrote " << path << "\n";
    return 0;
}

/// partition mode: audits the angular and radial partitions of unity on
/// dense lattices and reports the worst defects.
int run_symbol_partition(const GlobalOptions& opt, int max_level, int n_thetas, int n_radii) {
    const DyadicPartition part(max_level);
    std::vector<double> thetas, radii;
    const double theta_margin = part.truncation_angle() / 2.0;
    for (int i = 0; i < n_thetas; ++i)
        thetas.push_back(theta_margin + (M_PI - 2.0 * theta_margin) * i / (n_thetas - 1));
    for (int i = 0; i < n_radii; ++i)
        radii.push_back(std::pow(10.0, -0.3 + 3.0 * i / (n_radii - 1)));
    const PartitionReport report = partition_check(part, thetas, radii);

    Config stamp;
    stamp.set("symbol.mode", "partition");
    stamp.set("symbol.max_level", std::to_string(max_level));
    const std::string path = opt.out_path("symbol.csv");
    CsvWriter csv(path, std::vector<std::string>{"max_angular_defect", "max_radial_defect",
                                                 "supports_contained"});
    csv.row(std::vector<double>{report.max_angular_defect, report.max_radial_defect,
                                report.supports_contained ? 1.0 : 0.0});
    auto metadata = base_metadata(stamp);
    if (!report.supports_contained) metadata["first_violation"] = report.first_violation;
    csv.finish(metadata);

    std::cout << "angular defect " << format_double(report.max_angular_defect)
              << ", radial defect " << format_double(report.max_radial_defect)
              << (report.supports_contained ? "" : ", support violation: " + report.first_violation)
              << "; wrote " << path << "\n";
    return report.supports_contained ? 0 : 2;
}

}  // namespace boltzkit::cli
