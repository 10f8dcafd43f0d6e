#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "boltzkit/collision.hpp"
#include "boltzkit/exponents.hpp"
#include "boltzkit/field.hpp"

namespace boltzkit {

/// One non-negative building block of a lab test input.
///
/// gaussian: amplitude * exp(-|v - center|^2 / width^2)
/// bump:     amplitude * exp(1 - w^2/(w^2 - |v - center|^2)) for |v-center| < w
///
/// `width` is the decay scale of the Gaussian (e-folding radius) and the hard
/// support radius of the bump.
struct FamilyComponent {
    enum class Kind { gaussian, bump };
    Kind kind = Kind::gaussian;
    Vec3 center{};
    double width = 1.0;
    double amplitude = 1.0;
};

/// A mixture of non-negative components with a declared decay radius, used as
/// reproducible input to the measurement probes. Amplitudes must be >= 0 and
/// widths > 0 (checked on construction); grid admission is checked separately
/// by require_fits, so a family can still be sampled on a too-small grid when
/// a test wants exactly that.
class TestFamily {
  public:
    static TestFamily gaussian(const Vec3& center, double width = 1.0, double amplitude = 1.0);
    static TestFamily bump(const Vec3& center, double radius, double amplitude = 1.0);
    static TestFamily mixture(std::vector<FamilyComponent> parts);

    /// Deterministic mixture of `parts` Gaussians drawn from the given seed:
    /// center coordinates uniform in [-max_center, max_center], widths in
    /// [width_lo, width_hi], amplitudes in [amp_lo, amp_hi].
    static TestFamily random_mixture(std::uint64_t seed, int parts = 3, double max_center = 1.2,
                                     double width_lo = 0.9, double width_hi = 1.3,
                                     double amp_lo = 0.3, double amp_hi = 1.0);

    const std::vector<FamilyComponent>& parts() const { return parts_; }

    VelocityField sample(const VelocityGrid& grid) const;

    /// Largest component decay scale; the grid must keep extent >= 4x this.
    double decay_radius() const;
    /// Radius enclosing all components with their decay tails:
    /// max over parts of |center| + 4 width (gaussian) or |center| + width (bump).
    double extent_needed() const;
    /// Throws std::range_error unless decay_radius() <= extent/4 and
    /// extent_needed() <= extent.
    void require_fits(const VelocityGrid& grid) const;

    /// Rescaled family sampling v -> f(lambda v): centers and widths divide
    /// by lambda, amplitudes unchanged.
    TestFamily dilated(double lambda) const;

  private:
    explicit TestFamily(std::vector<FamilyComponent> parts);
    std::vector<FamilyComponent> parts_;
};

/// Grid and quadrature configuration shared by the probes.
struct LabConfig {
    double extent = 6.0;
    int n = 16;
    int n_mu = 8;
    int n_phi = 16;
    InterpScheme scheme = InterpScheme::cubic;
    int threads = 0;
};

/// Result of one ratio measurement
///   ratio = || <v>^ell Q+(f,g) ||_r / (|| <v>^ell f ||_p || <v>^ell g ||_q).
struct RatioReport {
    HlsExponents exponents;
    double ell = 0.0;
    double ratio = 0.0;
    double norm_gain = 0.0;
    double norm_f = 0.0;
    double norm_g = 0.0;
    int n = 0;
    double extent = 0.0;
    /// |ratio(n) - ratio(n/2)| when two resolutions were evaluated, else 0.
    double est_error = 0.0;
    /// Scale-invariance verdict for the exponents; violating exponents are
    /// measured anyway (that is what the violation sweeps are for).
    bool exponents_admissible = true;
};

/// Measures the ratio for fields already sampled on op's grid. Throws
/// std::domain_error when either denominator norm vanishes.
RatioReport measure_ratio(const CollisionOperator& op, const VelocityField& f,
                          const VelocityField& g, const HlsExponents& e, double ell);

/// Samples the families on the lab grid and measures the ratio, repeating at
/// half resolution to attach a discretization error estimate.
RatioReport estimate_ratio(const TestFamily& f, const TestFamily& g, const HlsExponents& e,
                           double ell, const LabConfig& lab = {});

/// Dilation sweep of the unweighted ratio: for each lambda the inputs are
/// f(lambda v), g(lambda v) and the fit of log(ratio) against log(lambda)
/// estimates the slope, which the change-of-variables identity
///   Q+(f_lambda, g_lambda)(v) = lambda^{-3-gamma} Q+(f,g)(lambda v)
/// predicts to be 3 * scaling_defect.
struct ScalingSweep {
    std::vector<double> lambdas;
    std::vector<double> ratios;
    double slope = 0.0;
    /// Single-lambda sweep: ratios holds the plain ratio, slope is unset.
    bool degenerate = false;
    Rational predicted_defect;
};

/// The weight is pinned to ell = 0 (dilation does not commute with <v>^ell).
/// With adapt_grid the evaluation grid is rescaled to extent/lambda per
/// lambda, so every dilated family fits by construction; with a fixed grid a
/// lambda whose support escapes raises std::range_error. Requires either a
/// single lambda (degenerate sweep) or >= 4 lambdas spanning a factor >= 8.
ScalingSweep scaling_sweep(const TestFamily& f, const TestFamily& g, const HlsExponents& e,
                           std::span<const double> lambdas, const LabConfig& lab = {},
                           bool adapt_grid = true);

/// Equal-weight ratios over a family of Gaussians with drifting center,
/// against a comparator ratio that uses the convolution-type exponent
/// relation 1/p + 1/q = 1 + 1/r without raising the weight on the right-hand
/// side. The gain commutes with a common drift of both inputs, so neither
/// ratio can blow up along this family: the equal-weight ratio stays within
/// a fixed spread (it decays once the weight concentrates on the drift
/// speed), and the comparator, which shares the numerator, tracks it by a
/// near-constant factor. Both columns are reported.
struct MomentProbe {
    Rational gamma;
    double ell = 0.0;
    std::vector<double> centers;     ///< |v0| = 0, 1, ..., along +x
    std::vector<double> ratios;      ///< equal-weight ratios, scaling-admissible exponents
    std::vector<double> comparator;  ///< convolution-relation ratios, same weight
    double baseline = 0.0;           ///< ratios[0]
    double spread = 0.0;             ///< max(ratios) / baseline
    double comparator_spread = 0.0;  ///< max(comparator) / comparator[0]
    HlsExponents exponents;          ///< the equal-weight exponents used
    double comparator_p = 0.0;       ///< p = q of the comparator relation
};

/// Probes centers |v0| in {0, ..., max_center}. Exponents: 1/r is the center
/// of the admissible range (1/2 - gamma/3) and p = q from the scaling
/// relation (always p = 4/3); comparator p = q = 2/(1 + 1/r). Requires
/// gamma in (0, 1] and a grid that fits the farthest center.
MomentProbe moment_probe(const Rational& gamma, double ell, int max_center = 5,
                         const LabConfig& lab = {9.0, 24, 8, 16, InterpScheme::linear, 0});

/// Sup over translations of the smoothing ratio of the conjugated Radon
/// average: || (tau_{-v*} T tau_{v*}) h ||_p / || h ||_{p~} with
/// 1/p~ = 1/p + gamma/3.
struct TranslationProbe {
    std::vector<Vec3> v_stars;
    std::vector<double> ratios;
    double sup_ratio = 0.0;
    std::size_t argmax = 0;
    /// Whether 1/p lies in [gamma/2, 1 - gamma/2]; out-of-range exponents are
    /// measured anyway and just labeled.
    bool in_theorem_range = true;
};

/// Throws std::domain_error when h vanishes. The operator is built on
/// h's own grid with the lab's angular rule.
TranslationProbe translation_probe(const VelocityField& h, const Rational& inv_p, double gamma,
                                   std::span<const Vec3> v_stars, const LabConfig& lab = {});

}  // namespace boltzkit
