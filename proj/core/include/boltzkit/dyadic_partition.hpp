#pragma once

#include <span>
#include <string>

namespace boltzkit {

/// Half-open angular interval (lo, hi) in (0, pi).
struct AngularCone {
    double lo;
    double hi;
    bool contains(double theta) const { return theta > lo && theta < hi; }
};

/// Smooth dyadic partitions of unity: an angular family resolving the angle
/// theta in (0, pi) into dyadic cones around the two degenerate directions,
/// and a radial family resolving |x| > 0 into dyadic shells.
///
/// Both are built from one C-infinity step S(t) (0 for t <= 0, 1 for t >= 1,
/// glued with exp(-1/t)). The angular generator
///   zeta(theta) = S4(2 theta) - S4(theta),   S4 = step rising on [pi/4, pi/2],
/// is supported in (pi/8, pi/2); its dyadic dilates zeta_z(theta) =
/// zeta(2^z theta) for z = 1..Z cover theta -> 0, mirrored copies
/// zeta_{-z}(theta) = zeta_z(pi - theta) cover theta -> pi, and the central
/// piece zeta_0 = S4(2 theta) + S4(2(pi - theta)) - 1 covers the middle. The
/// sum telescopes to exactly 1 on [pi/2^(Z+2), pi - pi/2^(Z+2)]; the leftover
/// slivers at the ends are the truncation zone excluded from all sampling.
///
/// The radial generator rho(r) = W(r) - W(r/2) with W rising on [4, 8] is
/// supported in (4, 16); rho_k(r) = rho(2^-k r) tile r > 0 the same way.
class DyadicPartition {
  public:
    explicit DyadicPartition(int max_level = 8);

    int max_level() const { return max_level_; }

    /// Angular cutoff zeta_z; z in [-max_level, max_level].
    double zeta(int z, double theta) const;

    /// Sum of all zeta_z at theta; 1 up to rounding inside the covered zone.
    double zeta_sum(double theta) const;

    /// Support interval of zeta_z: (pi/8, 7pi/8) for z = 0,
    /// (pi/2^(z+3), pi/2^(z+1)) for z >= 1, mirrored for z <= -1.
    static AngularCone cone(int z);

    /// Half-width of the uncovered sliver at each end: pi / 2^(Z+2).
    double truncation_angle() const;

    /// Radial cutoff rho_k(r) = rho(2^-k r), supported in (4 * 2^k, 16 * 2^k).
    static double rho(int k, double r);

    /// Sum of rho_k over k in [k_lo, k_hi]; 1 up to rounding for
    /// r in [8 * 2^k_lo, 4 * 2^(k_hi + 1)].
    static double rho_sum(double r, int k_lo, int k_hi);

    /// C-infinity step: 0 for t <= 0, 1 for t >= 1, strictly monotone between.
    static double smooth_step(double t);

  private:
    int max_level_;
};

/// Partition-of-unity audit over sample lattices.
struct PartitionReport {
    double max_angular_defect = 0.0;  ///< max |zeta_sum - 1| over the angles
    double max_radial_defect = 0.0;   ///< max |rho_sum - 1| over the radii
    bool supports_contained = true;   ///< no cutoff observed outside its cone/shell
    std::string first_violation;      ///< empty when supports_contained
};

/// Checks the partition sums and support containment on the given lattices.
/// Angles must avoid the truncation zone around 0 and pi; radii must be
/// positive (the radial k-range is chosen to cover them).
PartitionReport partition_check(const DyadicPartition& part,
                                std::span<const double> thetas,
                                std::span<const double> radii);

}  // namespace boltzkit
