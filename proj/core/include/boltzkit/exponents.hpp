#pragma once

#include "boltzkit/rational.hpp"

namespace boltzkit {

/// All exponent algebra works on exact rationals, and every Lebesgue
/// exponent is carried as its reciprocal (so infinity is the rational 0 and
/// conjugation is 1 - x). Admissibility involves exact equalities that
/// floating point cannot decide.

/// A (q, r, p) exponent triplet stored as reciprocals.
struct InvTriplet {
    Rational inv_q;
    Rational inv_r;
    Rational inv_p;

    bool operator==(const InvTriplet& o) const = default;

    /// Reciprocal of the harmonic mean of (p, r): 1/a = (1/p + 1/r)/2.
    Rational inv_harmonic_mean() const { return (inv_p + inv_r) / Rational(2); }

    /// Elementwise Lebesgue conjugate (1/x -> 1 - 1/x).
    InvTriplet conjugate() const {
        return {Rational(1) - inv_q, Rational(1) - inv_r, Rational(1) - inv_p};
    }
};

/// Exponents of the bilinear gain estimate with equal weights on both sides,
///   || <v>^l Q+(f,g) ||_r <= C || <v>^l f ||_p || <v>^l g ||_q,
/// where the kernel power gamma enters the exponent relation (the gamma/3
/// term below) instead of raising the right-hand weights.
struct HlsExponents {
    Rational inv_p;
    Rational inv_q;
    Rational inv_r;
    Rational gamma;
};

enum class HlsVerdict { admissible, violates_scaling, violates_r_range };

struct HlsCheck {
    HlsVerdict verdict;
    /// Dilation-balance defect delta = 1/p + 1/q - 1 - 1/r - gamma/3; zero
    /// exactly when the estimate is scale invariant.
    Rational scaling_defect;
};

/// Scale-invariance check for the gain estimate: admissible iff
/// 1/p + 1/q = 1 + 1/r + gamma/3 and gamma/6 <= 1/r <= 1 - 5 gamma/6, with
/// both range inequalities strict when gamma = 0. For gamma = 1 the range
/// pins 1/r = 1/6.
HlsCheck check_hls_scaling(const HlsExponents& e);

enum class WeightedHlsVerdict {
    admissible,
    violates_scaling,
    violates_r_range,
    violates_integrability,  ///< 1/p + 1/m >= 1 or 1/q + 1/m >= 1
    violates_weight          ///< ell1 <= 3/m
};

struct WeightedHlsCheck {
    WeightedHlsVerdict verdict;
    Rational scaling_defect;
};

/// Weighted variant: 1/p + 1/q + 1/m = 1 + 1/r + gamma/3 with the same 1/r
/// range, the integrability conditions 1/p + 1/m < 1 and 1/q + 1/m < 1, and
/// the weight condition ell1 > 3/m (strict). With 1/m = 0 the scaling and
/// range parts coincide with check_hls_scaling.
WeightedHlsCheck check_weighted_hls(const Rational& inv_p, const Rational& inv_q,
                                    const Rational& inv_m, const Rational& inv_r,
                                    double ell1, const Rational& gamma);

struct KtVerdict {
    bool admissible = false;
    bool endpoint = false;  ///< (q, r, p) = (a, r*(a), p*(a)), the excluded case
    Rational inv_a;         ///< reciprocal harmonic mean of (p, r)
};

/// Admissibility of a kinetic-transport Strichartz triplet in dimension d:
/// 1/q = (d/2)(1/p - 1/r), with p*(a) <= p <= a <= r <= r*(a) where
///   p* = da/(d+1), r* = da/(d-1)   for a >= (d+1)/d  (r* = inf when d = 1),
///   p* = 1,        r* = a/(2-a)    for a <= (d+1)/d,
/// plus the d = 1 exceptional triplet (a, inf, a/2). Endpoint triplets
/// satisfy the inequalities but the endpoint estimate is false, so they are
/// flagged and treated as unusable by callers.
KtVerdict check_kt_admissible(const InvTriplet& t, int d);

/// The admissible range of the parameter eps used to build the solvable
/// triplets: max{0, 5 gamma/12 - 7/18} < eps <= 1/9 - gamma/12. The source
/// states the lower bound strictly in one place and non-strictly in another;
/// at gamma = 1 the two bounds coincide at 1/36, so the strict reading is
/// empty while the non-strict one is the single point. Both readings are
/// carried, not merged.
struct EpsilonWindow {
    Rational gamma;
    Rational lower;  ///< max{0, 5 gamma/12 - 7/18}
    Rational upper;  ///< 1/9 - gamma/12
    bool empty_strict;     ///< no eps with lower < eps <= upper
    bool empty_nonstrict;  ///< no eps with lower <= eps <= upper
    bool single_point;     ///< lower == upper (the gamma = 1 case)

    bool contains(const Rational& eps, bool strict_lower = true) const {
        if (eps > upper) return false;
        return strict_lower ? eps > lower : eps >= lower;
    }
};

EpsilonWindow epsilon_window(const Rational& gamma);

/// The pair of exponent triplets used to run the fixed-point argument at
/// parameter eps: the primal (1/q, 1/r, 1/p) = (1/3 - 3eps, 2/9 + eps,
/// 4/9 - eps) and the dual-conjugate (1/q~', 1/r~', 1/p~') = (2/3 - 6eps,
/// 4/9 + 2eps, 2/9 - 2eps). Both sides have harmonic mean HM(p, r) = 3
/// identically in eps (verified on construction).
struct SolvableTriplets {
    InvTriplet primal;
    InvTriplet dual_primed;
};

SolvableTriplets solvable_triplets(const Rational& eps);

/// Exponent bookkeeping for the loss-term estimate: the fixed triplet
/// (1/q2, 1/r2, 1/p2) = (1/2, 11/30, 21/30) with harmonic mean a2 = 15/8
/// (so 1/p2 + 1/r2 = 2/a2 = 16/15), the companion triplet shifted from the
/// primal solvable triplet at eps, the weight lower bound ell2 > gamma +
/// 9/10, and the second weight ell3 = ell2 + gamma + 1/9.
struct LossExponentSet {
    Rational ell2_lower;  ///< strict lower bound for ell2
    InvTriplet base;      ///< (1/2, 11/30, 21/30)
    Rational inv_a2;      ///< 8/15
    InvTriplet shifted;   ///< primal(eps) + (1/2, 11/30, 1/30) componentwise
};

LossExponentSet loss_exponent_set(const Rational& gamma, const Rational& eps);

/// ell3 = ell2 + gamma + 1/9.
Rational ell3_from(const Rational& ell2, const Rational& gamma);

}  // namespace boltzkit
