#include "boltzkit/estimate_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "boltzkit/norms.hpp"
#include "boltzkit/rng.hpp"

namespace boltzkit {

namespace {

double lebesgue(const Rational& inv) {
    if (inv.is_zero()) return p_inf;
    return 1.0 / inv.to_double();
}

/// Least-squares slope of log(y) against log(x).
double log_log_slope(std::span<const double> x, std::span<const double> y) {
    const auto safe_log = [](double v) { return std::log(std::max(v, 1e-300)); };
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = safe_log(x[i]), ly = safe_log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double m = static_cast<double>(x.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace

TestFamily::TestFamily(std::vector<FamilyComponent> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("TestFamily: mixture needs >= 1 component");
    for (const auto& p : parts_) {
        if (!(p.width > 0.0))
            throw std::invalid_argument("TestFamily: component width must be positive");
        if (!(p.amplitude >= 0.0))
            throw std::invalid_argument("TestFamily: component amplitude must be >= 0");
    }
}

TestFamily TestFamily::gaussian(const Vec3& center, double width, double amplitude) {
    return TestFamily({{FamilyComponent::Kind::gaussian, center, width, amplitude}});
}

TestFamily TestFamily::bump(const Vec3& center, double radius, double amplitude) {
    return TestFamily({{FamilyComponent::Kind::bump, center, radius, amplitude}});
}

TestFamily TestFamily::mixture(std::vector<FamilyComponent> parts) {
    return TestFamily(std::move(parts));
}

TestFamily TestFamily::random_mixture(std::uint64_t seed, int parts, double max_center,
                                      double width_lo, double width_hi, double amp_lo,
                                      double amp_hi) {
    if (parts < 1) throw std::invalid_argument("TestFamily: parts must be >= 1");
    Rng rng(seed);
    std::vector<FamilyComponent> out;
    out.reserve(parts);
    for (int i = 0; i < parts; ++i) {
        FamilyComponent c;
        c.kind = FamilyComponent::Kind::gaussian;
        c.center = rng.uniform3(-max_center, max_center);
        c.width = rng.uniform(width_lo, width_hi);
        c.amplitude = rng.uniform(amp_lo, amp_hi);
        out.push_back(c);
    }
    return TestFamily(std::move(out));
}

VelocityField TestFamily::sample(const VelocityGrid& grid) const {
    VelocityField out(grid);
    const int n = grid.n();
    std::size_t flat = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k, ++flat) {
                const Vec3 v = grid.node(i, j, k);
                double acc = 0.0;
                for (const auto& p : parts_) {
                    const Vec3 d = v - p.center;
                    const double r2 = d.norm2();
                    const double w2 = p.width * p.width;
                    if (p.kind == FamilyComponent::Kind::gaussian) {
                        acc += p.amplitude * std::exp(-r2 / w2);
                    } else if (r2 < w2) {
                        acc += p.amplitude * std::exp(1.0 - w2 / (w2 - r2));
                    }
                }
                out[flat] = acc;
            }
    return out;
}

double TestFamily::decay_radius() const {
    double r = 0.0;
    for (const auto& p : parts_) r = std::max(r, p.width);
    return r;
}

double TestFamily::extent_needed() const {
    double r = 0.0;
    for (const auto& p : parts_) {
        const double tail = p.kind == FamilyComponent::Kind::gaussian ? 4.0 * p.width : p.width;
        r = std::max(r, p.center.norm() + tail);
    }
    return r;
}

void TestFamily::require_fits(const VelocityGrid& grid) const {
    if (decay_radius() > grid.extent() / 4.0)
        throw std::range_error("TestFamily: decay radius exceeds a quarter of the grid extent");
    if (extent_needed() > grid.extent())
        throw std::range_error("TestFamily: support does not fit inside the grid");
}

TestFamily TestFamily::dilated(double lambda) const {
    if (!(lambda > 0.0)) throw std::invalid_argument("TestFamily: lambda must be positive");
    std::vector<FamilyComponent> out = parts_;
    for (auto& p : out) {
        p.center = p.center * (1.0 / lambda);
        p.width /= lambda;
    }
    return TestFamily(std::move(out));
}

RatioReport measure_ratio(const CollisionOperator& op, const VelocityField& f,
                          const VelocityField& g, const HlsExponents& e, double ell) {
    const HlsCheck check = check_hls_scaling(e);
    const double p = lebesgue(e.inv_p);
    const double q = lebesgue(e.inv_q);
    const double r = lebesgue(e.inv_r);

    RatioReport rep;
    rep.exponents = e;
    rep.ell = ell;
    rep.n = op.grid().n();
    rep.extent = op.grid().extent();
    rep.exponents_admissible = check.verdict == HlsVerdict::admissible;

    rep.norm_f = norm_v(f, p, ell);
    rep.norm_g = norm_v(g, q, ell);
    if (!(rep.norm_f > 0.0) || !(rep.norm_g > 0.0))
        throw std::domain_error("measure_ratio: denominator norm vanishes");

    rep.norm_gain = norm_v(op.gain(f, g), r, ell);
    rep.ratio = rep.norm_gain / (rep.norm_f * rep.norm_g);
    return rep;
}

namespace {

CollisionOperator lab_operator(const VelocityGrid& grid, const LabConfig& lab, double gamma) {
    return CollisionOperator(grid, HemisphereRule(lab.n_mu, lab.n_phi), CollisionKernel{gamma},
                             {lab.scheme, lab.threads, 1});
}

}  // namespace

RatioReport estimate_ratio(const TestFamily& f, const TestFamily& g, const HlsExponents& e,
                           double ell, const LabConfig& lab) {
    const VelocityGrid grid(lab.n, lab.extent);
    f.require_fits(grid);
    g.require_fits(grid);

    const double gamma = e.gamma.to_double();
    RatioReport rep = measure_ratio(lab_operator(grid, lab, gamma), f.sample(grid),
                                    g.sample(grid), e, ell);

    const int n_half = lab.n / 2;
    if (n_half >= 8 && n_half % 2 == 0) {
        const VelocityGrid coarse(n_half, lab.extent);
        const RatioReport low = measure_ratio(lab_operator(coarse, lab, gamma), f.sample(coarse),
                                              g.sample(coarse), e, ell);
        rep.est_error = std::abs(rep.ratio - low.ratio);
    }
    return rep;
}

ScalingSweep scaling_sweep(const TestFamily& f, const TestFamily& g, const HlsExponents& e,
                           std::span<const double> lambdas, const LabConfig& lab,
                           bool adapt_grid) {
    if (lambdas.empty()) throw std::invalid_argument("scaling_sweep: need >= 1 lambda");
    for (double l : lambdas)
        if (!(l > 0.0)) throw std::invalid_argument("scaling_sweep: lambdas must be positive");

    ScalingSweep sweep;
    sweep.lambdas.assign(lambdas.begin(), lambdas.end());
    sweep.degenerate = lambdas.size() == 1;
    sweep.predicted_defect = check_hls_scaling(e).scaling_defect;
    if (!sweep.degenerate) {
        if (lambdas.size() < 4)
            throw std::invalid_argument("scaling_sweep: slope fit needs >= 4 lambdas");
        const auto [lo, hi] = std::minmax_element(lambdas.begin(), lambdas.end());
        if (*hi / *lo < 8.0 * (1.0 - 1e-12))
            throw std::invalid_argument("scaling_sweep: lambdas must span a factor >= 8");
    }

    const double gamma = e.gamma.to_double();
    for (double lambda : sweep.lambdas) {
        const TestFamily fl = f.dilated(lambda);
        const TestFamily gl = g.dilated(lambda);
        const VelocityGrid grid(lab.n, adapt_grid ? lab.extent / lambda : lab.extent);
        fl.require_fits(grid);
        gl.require_fits(grid);
        const RatioReport rep =
            measure_ratio(lab_operator(grid, lab, gamma), fl.sample(grid), gl.sample(grid), e,
                          /*ell=*/0.0);
        sweep.ratios.push_back(rep.ratio);
    }

    sweep.slope = sweep.degenerate ? std::numeric_limits<double>::quiet_NaN()
                                   : log_log_slope(sweep.lambdas, sweep.ratios);
    return sweep;
}

MomentProbe moment_probe(const Rational& gamma, double ell, int max_center,
                         const LabConfig& lab) {
    const double g = gamma.to_double();
    if (!(g > 0.0) || g > 1.0)
        throw std::invalid_argument("moment_probe: gamma must be in (0, 1]");
    if (max_center < 1) throw std::invalid_argument("moment_probe: need max_center >= 1");

    MomentProbe probe;
    probe.gamma = gamma;
    probe.ell = ell;

    const Rational third_gamma = gamma / Rational(3);
    probe.exponents.inv_r = Rational(1, 2) - third_gamma;
    probe.exponents.inv_p = (Rational(1) + probe.exponents.inv_r + third_gamma) / Rational(2);
    probe.exponents.inv_q = probe.exponents.inv_p;
    probe.exponents.gamma = gamma;
    const Rational inv_pc = (Rational(1) + probe.exponents.inv_r) / Rational(2);
    probe.comparator_p = lebesgue(inv_pc);

    const double p = lebesgue(probe.exponents.inv_p);
    const double r = lebesgue(probe.exponents.inv_r);

    const VelocityGrid grid(lab.n, lab.extent);
    const CollisionOperator op = lab_operator(grid, lab, g);
    for (int k = 0; k <= max_center; ++k) {
        const TestFamily family = TestFamily::gaussian({static_cast<double>(k), 0.0, 0.0});
        family.require_fits(grid);
        const VelocityField field = family.sample(grid);
        const double norm_gain = norm_v(op.gain(field, field), r, ell);
        const double np = norm_v(field, p, ell);
        const double npc = norm_v(field, probe.comparator_p, ell);
        if (!(np > 0.0) || !(npc > 0.0))
            throw std::domain_error("moment_probe: denominator norm vanishes");
        probe.centers.push_back(k);
        probe.ratios.push_back(norm_gain / (np * np));
        probe.comparator.push_back(norm_gain / (npc * npc));
    }

    probe.baseline = probe.ratios.front();
    probe.spread = *std::max_element(probe.ratios.begin(), probe.ratios.end()) / probe.baseline;
    probe.comparator_spread =
        *std::max_element(probe.comparator.begin(), probe.comparator.end()) /
        probe.comparator.front();
    return probe;
}

TranslationProbe translation_probe(const VelocityField& h, const Rational& inv_p, double gamma,
                                   std::span<const Vec3> v_stars, const LabConfig& lab) {
    if (v_stars.empty()) throw std::invalid_argument("translation_probe: need >= 1 v_star");

    const double ip = inv_p.to_double();
    const double p = lebesgue(inv_p);
    const double p_tilde = 1.0 / (ip + gamma / 3.0);
    const double denom = norm_v(h, p_tilde);
    if (!(denom > 0.0)) throw std::domain_error("translation_probe: input field vanishes");

    TranslationProbe probe;
    probe.v_stars.assign(v_stars.begin(), v_stars.end());
    probe.in_theorem_range = ip >= gamma / 2.0 && ip <= 1.0 - gamma / 2.0;

    const CollisionOperator op = lab_operator(h.grid(), lab, gamma);
    for (const Vec3& vs : probe.v_stars) {
        const double num = norm_v(op.translated_radon(h, vs), p);
        probe.ratios.push_back(num / denom);
    }

    const auto it = std::max_element(probe.ratios.begin(), probe.ratios.end());
    probe.argmax = static_cast<std::size_t>(it - probe.ratios.begin());
    probe.sup_ratio = *it;
    return probe;
}

}  // namespace boltzkit
