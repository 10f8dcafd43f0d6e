#include <doctest.h>

#include <boltzkit/exponents.hpp>

#include <stdexcept>

using namespace boltzkit;

TEST_CASE("gain scaling check accepts the balanced triplets") {
  // gamma = 0: p = q = 3/2, r = 3.
  HlsCheck c0 = check_hls_scaling({Rational(2, 3), Rational(2, 3), Rational(1, 3), Rational(0)});
  CHECK(c0.verdict == HlsVerdict::admissible);
  CHECK(c0.scaling_defect.is_zero());
  // gamma = 1: p = q = 4/3, r = 6 (the only admissible r).
  HlsCheck c1 = check_hls_scaling({Rational(3, 4), Rational(3, 4), Rational(1, 6), Rational(1)});
  CHECK(c1.verdict == HlsVerdict::admissible);
  // gamma = 1/2 on the closed range boundary 1/r = gamma/6 = 1/12.
  HlsCheck cb = check_hls_scaling({Rational(5, 8), Rational(5, 8), Rational(1, 12), Rational(1, 2)});
  CHECK(cb.verdict == HlsVerdict::admissible);
}

TEST_CASE("gain scaling check reports the dilation defect") {
  HlsCheck c = check_hls_scaling({Rational(1, 2), Rational(1, 2), Rational(1, 3), Rational(0)});
  CHECK(c.verdict == HlsVerdict::violates_scaling);
  CHECK(c.scaling_defect == Rational(-1, 3));
  HlsCheck d = check_hls_scaling({Rational(1), Rational(2, 3), Rational(1, 3), Rational(0)});
  CHECK(d.verdict == HlsVerdict::violates_scaling);
  CHECK(d.scaling_defect == Rational(1, 3));
}

TEST_CASE("gain scaling check enforces the r range") {
  // gamma = 1 pins 1/r = 1/6; a balanced triplet with 1/r = 1/3 is rejected.
  HlsCheck c = check_hls_scaling({Rational(5, 6), Rational(5, 6), Rational(1, 3), Rational(1)});
  CHECK(c.verdict == HlsVerdict::violates_r_range);
  // gamma = 0 excludes both ends: r = infinity and r = 1.
  HlsCheck inf_end = check_hls_scaling({Rational(1, 2), Rational(1, 2), Rational(0), Rational(0)});
  CHECK(inf_end.verdict == HlsVerdict::violates_r_range);
  HlsCheck one_end = check_hls_scaling({Rational(1), Rational(1), Rational(1), Rational(0)});
  CHECK(one_end.verdict == HlsVerdict::violates_r_range);
}

TEST_CASE("gain scaling check validates its inputs") {
  CHECK_THROWS_AS(check_hls_scaling({Rational(3, 2), Rational(1, 2), Rational(1, 3), Rational(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_hls_scaling({Rational(1, 2), Rational(1, 2), Rational(1, 3), Rational(2)}),
                  std::invalid_argument);
}

TEST_CASE("weighted scaling check layers the moment conditions") {
  // 1/m = 0 coincides with the unweighted check.
  WeightedHlsCheck plain = check_weighted_hls(Rational(2, 3), Rational(2, 3), Rational(0),
                                              Rational(1, 3), 2.0, Rational(0));
  CHECK(plain.verdict == WeightedHlsVerdict::admissible);

  // Balanced with 1/m = 1/3: needs ell1 > 1.
  WeightedHlsCheck ok = check_weighted_hls(Rational(1, 2), Rational(1, 2), Rational(1, 3),
                                           Rational(1, 3), 1.5, Rational(0));
  CHECK(ok.verdict == WeightedHlsVerdict::admissible);
  WeightedHlsCheck flat = check_weighted_hls(Rational(1, 2), Rational(1, 2), Rational(1, 3),
                                             Rational(1, 3), 1.0, Rational(0));
  CHECK(flat.verdict == WeightedHlsVerdict::violates_weight);

  // 1/p + 1/m >= 1 is rejected before the weight condition.
  WeightedHlsCheck heavy = check_weighted_hls(Rational(2, 3), Rational(1, 6), Rational(1, 2),
                                              Rational(1, 3), 9.0, Rational(0));
  CHECK(heavy.verdict == WeightedHlsVerdict::violates_integrability);

  WeightedHlsCheck off = check_weighted_hls(Rational(1, 2), Rational(1, 2), Rational(1, 2),
                                            Rational(1, 3), 9.0, Rational(0));
  CHECK(off.verdict == WeightedHlsVerdict::violates_scaling);
  CHECK(off.scaling_defect == Rational(1, 6));
}

TEST_CASE("kinetic transport admissibility accepts the loss base triplet") {
  const InvTriplet base{Rational(1, 2), Rational(11, 30), Rational(21, 30)};
  KtVerdict v = check_kt_admissible(base, 3);
  CHECK(v.admissible);
  CHECK(!v.endpoint);
  CHECK(v.inv_a == Rational(8, 15));
}

TEST_CASE("kinetic transport admissibility flags endpoints") {
  // d = 3, a = 2: the triplet (q, r, p) = (2, 3, 3/2) sits exactly at
  // (a, r*, p*).
  KtVerdict v = check_kt_admissible({Rational(1, 2), Rational(1, 3), Rational(2, 3)}, 3);
  CHECK(v.admissible);
  CHECK(v.endpoint);
  CHECK(v.inv_a == Rational(1, 2));
}

TEST_CASE("kinetic transport identity failures are rejected") {
  KtVerdict v = check_kt_admissible({Rational(1, 2), Rational(1, 3), Rational(1, 2)}, 3);
  CHECK(!v.admissible);
  KtVerdict w = check_kt_admissible({Rational(0), Rational(1, 2), Rational(1, 4)}, 3);
  CHECK(!w.admissible);
}

TEST_CASE("one dimensional exceptional triplet is admitted") {
  // (q, r, p) = (a, inf, a/2) with a = 4.
  KtVerdict v = check_kt_admissible({Rational(1, 4), Rational(0), Rational(1, 2)}, 1);
  CHECK(v.admissible);
  CHECK(!v.endpoint);
}

TEST_CASE("epsilon window shrinks to a point at gamma one") {
  EpsilonWindow w0 = epsilon_window(Rational(0));
  CHECK(w0.lower == Rational(0));
  CHECK(w0.upper == Rational(1, 9));
  CHECK(!w0.empty_strict);
  CHECK(w0.contains(Rational(1, 18)));
  CHECK(!w0.contains(Rational(0)));
  CHECK(w0.contains(Rational(0), false));

  EpsilonWindow w1 = epsilon_window(Rational(1));
  CHECK(w1.lower == Rational(1, 36));
  CHECK(w1.upper == Rational(1, 36));
  CHECK(w1.empty_strict);
  CHECK(!w1.empty_nonstrict);
  CHECK(w1.single_point);
  CHECK(!w1.contains(Rational(1, 36)));
  CHECK(w1.contains(Rational(1, 36), false));

  EpsilonWindow wh = epsilon_window(Rational(1, 2));
  CHECK(wh.lower == Rational(0));
  CHECK(wh.upper == Rational(1, 9) - Rational(1, 24));
  CHECK(!wh.empty_strict);
}

TEST_CASE("solvable triplets keep harmonic mean three across the window") {
  for (const Rational& eps : {Rational(1, 36), Rational(1, 18), Rational(1, 10)}) {
    SolvableTriplets s = solvable_triplets(eps);
    CHECK(s.primal.inv_harmonic_mean() == Rational(1, 3));
    CHECK(s.dual_primed.inv_harmonic_mean() == Rational(1, 3));
    // The primal triplet is kinetic-transport admissible throughout.
    KtVerdict v = check_kt_admissible(s.primal, 3);
    CHECK(v.admissible);
    CHECK(!v.endpoint);
  }
  SolvableTriplets s = solvable_triplets(Rational(1, 18));
  CHECK(s.primal == InvTriplet{Rational(1, 6), Rational(5, 18), Rational(7, 18)});
  CHECK(s.dual_primed == InvTriplet{Rational(1, 3), Rational(5, 9), Rational(1, 9)});
  CHECK_THROWS_AS(solvable_triplets(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(solvable_triplets(Rational(1, 8)), std::invalid_argument);
}

TEST_CASE("conjugated dual triplet hits the endpoint at eps one eighteenth") {
  // The conjugate of the primed dual triplet is admissible for eps below
  // 1/18, an endpoint exactly there, and inadmissible beyond.
  auto conj_dual = [](const Rational& eps) {
    return solvable_triplets(eps).dual_primed.conjugate();
  };
  // Conjugation flips the shared harmonic mean from 3 to 3/2, independent
  // of eps.
  for (const Rational& eps : {Rational(1, 36), Rational(1, 18), Rational(1, 10)}) {
    CHECK(conj_dual(eps).inv_harmonic_mean() == Rational(2, 3));
  }
  KtVerdict below = check_kt_admissible(conj_dual(Rational(1, 20)), 3);
  CHECK(below.admissible);
  CHECK(!below.endpoint);
  KtVerdict at = check_kt_admissible(conj_dual(Rational(1, 18)), 3);
  CHECK(at.admissible);
  CHECK(at.endpoint);
  KtVerdict above = check_kt_admissible(conj_dual(Rational(1, 16)), 3);
  CHECK(!above.admissible);
}

TEST_CASE("loss exponent set carries the fixed and shifted triplets") {
  LossExponentSet set = loss_exponent_set(Rational(1), Rational(1, 36));
  CHECK(set.ell2_lower == Rational(19, 10));
  CHECK(set.base == InvTriplet{Rational(1, 2), Rational(11, 30), Rational(7, 10)});
  CHECK(set.inv_a2 == Rational(8, 15));
  CHECK(set.shifted == InvTriplet{Rational(3, 4), Rational(37, 60), Rational(9, 20)});
  // The shifted triplet keeps the base harmonic mean for every eps.
  for (const Rational& eps : {Rational(1, 36), Rational(1, 18), Rational(1, 10)}) {
    CHECK(loss_exponent_set(Rational(1, 2), eps).shifted.inv_harmonic_mean() == Rational(8, 15));
  }
  CHECK(ell3_from(Rational(19, 10), Rational(1)) == Rational(19, 10) + Rational(10, 9));
}
