#include "boltzkit/exponents.hpp"

#include <stdexcept>

namespace boltzkit {

namespace {

void require_reciprocal(const Rational& x, const char* name) {
    if (x < Rational(0) || x > Rational(1))
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1] (reciprocal of an exponent in [1, inf])");
}

void require_gamma(const Rational& gamma) {
    if (gamma < Rational(0) || gamma > Rational(1))
        throw std::invalid_argument("gamma must lie in [0, 1]");
}

/// Range gamma/6 <= 1/r <= 1 - 5 gamma/6, strict at gamma = 0 where the
/// closed range would touch the forbidden exponents r = infinity and r = 1.
bool r_range_ok(const Rational& inv_r, const Rational& gamma) {
    const Rational lo = gamma / Rational(6);
    const Rational hi = Rational(1) - Rational(5) * gamma / Rational(6);
    if (gamma.is_zero()) return inv_r > lo && inv_r < hi;
    return inv_r >= lo && inv_r <= hi;
}

}  // namespace

HlsCheck check_hls_scaling(const HlsExponents& e) {
    require_reciprocal(e.inv_p, "1/p");
    require_reciprocal(e.inv_q, "1/q");
    require_reciprocal(e.inv_r, "1/r");
    require_gamma(e.gamma);

    HlsCheck out;
    out.scaling_defect = e.inv_p + e.inv_q - Rational(1) - e.inv_r - e.gamma / Rational(3);
    if (!out.scaling_defect.is_zero())
        out.verdict = HlsVerdict::violates_scaling;
    else if (!r_range_ok(e.inv_r, e.gamma))
        out.verdict = HlsVerdict::violates_r_range;
    else
        out.verdict = HlsVerdict::admissible;
    return out;
}

WeightedHlsCheck check_weighted_hls(const Rational& inv_p, const Rational& inv_q,
                                    const Rational& inv_m, const Rational& inv_r,
                                    double ell1, const Rational& gamma) {
    require_reciprocal(inv_p, "1/p");
    require_reciprocal(inv_q, "1/q");
    require_reciprocal(inv_m, "1/m");
    require_reciprocal(inv_r, "1/r");
    require_gamma(gamma);

    WeightedHlsCheck out;
    out.scaling_defect = inv_p + inv_q + inv_m - Rational(1) - inv_r - gamma / Rational(3);
    if (!out.scaling_defect.is_zero()) {
        out.verdict = WeightedHlsVerdict::violates_scaling;
    } else if (!r_range_ok(inv_r, gamma)) {
        out.verdict = WeightedHlsVerdict::violates_r_range;
    } else if (inv_p + inv_m >= Rational(1) || inv_q + inv_m >= Rational(1)) {
        out.verdict = WeightedHlsVerdict::violates_integrability;
    } else if (!(ell1 > (Rational(3) * inv_m).to_double())) {
        out.verdict = WeightedHlsVerdict::violates_weight;
    } else {
        out.verdict = WeightedHlsVerdict::admissible;
    }
    return out;
}

KtVerdict check_kt_admissible(const InvTriplet& t, int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    require_reciprocal(t.inv_q, "1/q");
    require_reciprocal(t.inv_r, "1/r");
    require_reciprocal(t.inv_p, "1/p");

    KtVerdict out;
    out.inv_a = t.inv_harmonic_mean();

    const Rational dd(d);
    // 1/q = (d/2)(1/p - 1/r)
    const bool identity = t.inv_q == dd / Rational(2) * (t.inv_p - t.inv_r);

    if (d == 1 && t.inv_r.is_zero() && t.inv_q == out.inv_a &&
        t.inv_p == Rational(2) * out.inv_a) {
        // Exceptional one-dimensional triplet (q, r, p) = (a, inf, a/2),
        // admissible even though it sits outside the r <= r*(a) range.
        out.admissible = true;
        return out;
    }

    // Branch at a = (d+1)/d, i.e. 1/a = d/(d+1).
    Rational inv_pstar;
    Rational inv_rstar;
    const bool upper_branch = out.inv_a <= dd / Rational(d + 1);
    if (upper_branch) {
        inv_pstar = out.inv_a * Rational(d + 1) / dd;
        inv_rstar = (d == 1) ? Rational(0) : out.inv_a * Rational(d - 1) / dd;
    } else {
        inv_pstar = Rational(1);
        inv_rstar = Rational(2) * out.inv_a - Rational(1);
    }

    const bool range = inv_pstar >= t.inv_p && t.inv_p >= out.inv_a &&
                       out.inv_a >= t.inv_r && t.inv_r >= inv_rstar;
    out.admissible = identity && range;
    out.endpoint = out.admissible && d >= 2 && upper_branch && !out.inv_a.is_zero() &&
                   t.inv_r == inv_rstar && t.inv_p == inv_pstar;
    return out;
}

EpsilonWindow epsilon_window(const Rational& gamma) {
    require_gamma(gamma);
    EpsilonWindow w;
    w.gamma = gamma;
    w.lower = Rational(5) * gamma / Rational(12) - Rational(7, 18);
    if (w.lower < Rational(0)) w.lower = Rational(0);
    w.upper = Rational(1, 9) - gamma / Rational(12);
    w.empty_strict = !(w.lower < w.upper);
    w.empty_nonstrict = w.lower > w.upper;
    w.single_point = w.lower == w.upper;
    return w;
}

SolvableTriplets solvable_triplets(const Rational& eps) {
    if (eps <= Rational(0) || eps > Rational(1, 9))
        throw std::invalid_argument("eps must lie in (0, 1/9]");

    SolvableTriplets s;
    s.primal = {Rational(1, 3) - Rational(3) * eps,
                Rational(2, 9) + eps,
                Rational(4, 9) - eps};
    s.dual_primed = {Rational(2, 3) - Rational(6) * eps,
                     Rational(4, 9) + Rational(2) * eps,
                     Rational(2, 9) - Rational(2) * eps};

    if (s.primal.inv_harmonic_mean() != Rational(1, 3) ||
        s.dual_primed.inv_harmonic_mean() != Rational(1, 3))
        throw std::logic_error("solvable triplets lost the harmonic mean 3");
    return s;
}

LossExponentSet loss_exponent_set(const Rational& gamma, const Rational& eps) {
    require_gamma(gamma);
    LossExponentSet set;
    set.ell2_lower = gamma + Rational(9, 10);
    set.base = {Rational(1, 2), Rational(11, 30), Rational(21, 30)};
    set.inv_a2 = set.base.inv_harmonic_mean();
    if (set.inv_a2 != Rational(8, 15))
        throw std::logic_error("loss base triplet lost the harmonic mean 15/8");

    const InvTriplet primal = solvable_triplets(eps).primal;
    set.shifted = {primal.inv_q + Rational(1, 2),
                   primal.inv_r + Rational(11, 30),
                   primal.inv_p + Rational(1, 30)};
    return set;
}

Rational ell3_from(const Rational& ell2, const Rational& gamma) {
    return ell2 + gamma + Rational(1, 9);
}

}  // namespace boltzkit
