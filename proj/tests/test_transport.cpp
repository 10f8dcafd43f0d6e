#include <doctest.h>

#include <boltzkit/field.hpp>
#include <boltzkit/transport.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace boltzkit;

namespace {

// Product initial state a(x) * g(v) with a smooth periodic bump in x.
SlabField product_state(int n_x, double length, const VelocityGrid& vgrid) {
  SlabField f(n_x, length, vgrid);
  VelocityField g = VelocityField::gaussian(vgrid, {0.0, 0.0, 0.0});
  for (int j = 0; j < n_x; ++j) {
    const double x = f.x_coord(j);
    const double a = 1.0 + 0.5 * std::sin(2.0 * M_PI * x / length);
    for (std::size_t v = 0; v < vgrid.size(); ++v) {
      f.values()[f.index(j, v)] = a * g[v];
    }
  }
  return f;
}

}  // namespace

TEST_CASE("homogeneous fields are fixed points of streaming") {
  VelocityGrid vgrid(8, 2.0);
  SlabField f(1, 1.0, vgrid);
  VelocityField g = VelocityField::gaussian(vgrid, {0.3, 0.0, 0.0});
  for (std::size_t v = 0; v < vgrid.size(); ++v) f.values()[v] = g[v];
  SlabField moved = free_transport(f, 123.0);
  CHECK(moved.values() == f.values());
}

TEST_CASE("grid aligned shifts are exact") {
  VelocityGrid vgrid(8, 2.0);
  const int n_x = 16;
  const double length = 8.0;  // dx = 1/2
  SlabField f = product_state(n_x, length, vgrid);
  // v1 = 1 at node index 6 (coord(6) = -2 + 0.5*6 = 1); t = dx / v1 shifts
  // by exactly one cell.
  const double t = 0.5;
  SlabField moved = free_transport(f, t);
  const std::size_t plane = vgrid.size() / vgrid.n();
  for (int iv1 = 0; iv1 < vgrid.n(); ++iv1) {
    const double v1 = vgrid.coord(iv1);
    const double cells = v1 * t / f.dx();
    if (cells != std::floor(cells)) continue;
    const int shift = static_cast<int>(cells);
    for (int j = 0; j < n_x; ++j) {
      const int src = ((j - shift) % n_x + n_x) % n_x;
      const std::size_t v_flat = iv1 * plane;  // first node of the v1 plane
      CHECK(moved.values()[moved.index(j, v_flat)] ==
            doctest::Approx(f.values()[f.index(src, v_flat)]).epsilon(1e-14));
    }
  }
}

TEST_CASE("streaming composes along the group law") {
  VelocityGrid vgrid(8, 2.0);
  SlabField f = product_state(12, 6.0, vgrid);
  SlabField two_steps = free_transport(free_transport(f, 0.4), 0.35);
  SlabField one_step = free_transport(f, 0.75);
  // Linear interpolation commutes with itself only on aligned shifts, so
  // composed and direct transport agree to interpolation error, not exactly.
  double max_diff = 0.0;
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    max_diff = std::max(max_diff, std::abs(two_steps.values()[i] - one_step.values()[i]));
  }
  CHECK(max_diff < 0.05 * f.sup_norm());
}

TEST_CASE("transport conserves mass and positivity") {
  VelocityGrid vgrid(8, 2.0);
  SlabField f = product_state(12, 6.0, vgrid);
  SlabField moved = free_transport(f, 0.61);
  CHECK(moved.non_negative());
  CHECK(moved.mass() == doctest::Approx(f.mass()).epsilon(1e-12));
}

TEST_CASE("transport reverses to the initial state on aligned shifts") {
  VelocityGrid vgrid(8, 2.0);
  SlabField f = product_state(16, 8.0, vgrid);
  // dx = 1/2 and every v1 is a multiple of 1/2, so t = 1 shifts every
  // velocity plane by a whole number of cells; the round trip is exact.
  SlabField there = free_transport(f, 1.0);
  SlabField back = free_transport(there, -1.0);
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    CHECK(back.values()[i] == doctest::Approx(f.values()[i]).epsilon(1e-12));
  }
}

TEST_CASE("support wrap is refused") {
  VelocityGrid vgrid(8, 2.0);
  SlabField f = product_state(12, 6.0, vgrid);
  // Budget: |t| * R <= L / 2 -> t <= 1.5 at R = 2, L = 6.
  CHECK_NOTHROW(free_transport(f, 1.5));
  CHECK_THROWS_AS(free_transport(f, 1.6), std::range_error);
  CHECK_THROWS_AS(free_transport(f, -1.6), std::range_error);
}

TEST_CASE("sample_x interpolates the x profile periodically") {
  VelocityGrid vgrid(8, 2.0);
  SlabField f(4, 4.0, vgrid);
  const std::size_t v = 3;
  for (int j = 0; j < 4; ++j) f.values()[f.index(j, v)] = j + 1.0;  // 1,2,3,4
  CHECK(sample_x(f, 0.0, v) == 1.0);
  CHECK(sample_x(f, 1.5, v) == doctest::Approx(2.5));
  CHECK(sample_x(f, 3.5, v) == doctest::Approx(0.5 * 4.0 + 0.5 * 1.0));  // wraps to cell 0
  CHECK(sample_x(f, -0.5, v) == doctest::Approx(0.5 * 4.0 + 0.5 * 1.0));
  CHECK(sample_x(f, 4.0, v) == 1.0);  // exact seam
}

TEST_CASE("trajectory samples the flow at uniform times") {
  VelocityGrid vgrid(8, 2.0);
  SlabField f = product_state(12, 6.0, vgrid);
  auto traj = transport_trajectory(f, 0.25, 4);
  REQUIRE(traj.size() == 5);
  CHECK(traj[0].values() == f.values());
  SlabField direct = free_transport(f, 0.75);
  CHECK(traj[3].values() == direct.values());
}

TEST_CASE("duhamel integral reduces to quadrature on frozen sources") {
  VelocityGrid vgrid(8, 2.0);
  // Homogeneous in x: U(t) is the identity, so the integral of a constant
  // source over [0, t] is t * F.
  SlabField src(1, 1.0, vgrid);
  for (std::size_t v = 0; v < vgrid.size(); ++v) src.values()[v] = 2.0 + (v % 5);
  std::vector<SlabField> source(9, src);
  const double dt = 0.125;
  SlabField acc = duhamel_integral(source, dt, 1.0);
  for (std::size_t v = 0; v < vgrid.size(); ++v) {
    CHECK(acc.values()[v] == doctest::Approx(src.values()[v]).epsilon(1e-13));
  }
  SlabField zero = duhamel_integral(source, dt, 0.0);
  CHECK(zero.sup_norm() == 0.0);
  CHECK_THROWS_AS(duhamel_integral(source, dt, 1.2), std::invalid_argument);
  CHECK_THROWS_AS(duhamel_integral(source, dt, 0.3), std::invalid_argument);
}

TEST_CASE("duhamel integral converges to the exact mild solution") {
  // For the t-independent product source F(x, v) = a(x) g(v), the mild
  // integral int_0^t U(t - s) F ds has an exact x-profile average the
  // trapezoid rule approaches at second order in dt.
  VelocityGrid vgrid(8, 2.0);
  const double horizon = 1.0;
  auto run = [&](int steps) {
    SlabField src = product_state(16, 8.0, vgrid);
    const double dt = horizon / steps;
    std::vector<SlabField> source;
    source.reserve(steps + 1);
    for (int i = 0; i <= steps; ++i) source.push_back(src);
    return duhamel_integral(source, dt, horizon);
  };
  SlabField coarse = run(4);
  SlabField fine = run(8);
  SlabField finest = run(16);
  double d1 = 0.0;
  double d2 = 0.0;
  for (std::size_t i = 0; i < coarse.values().size(); ++i) {
    d1 = std::max(d1, std::abs(coarse.values()[i] - finest.values()[i]));
    d2 = std::max(d2, std::abs(fine.values()[i] - finest.values()[i]));
  }
  CHECK(d2 < 0.6 * d1);
}
