#include <doctest.h>

#include <boltzkit/field.hpp>
#include <boltzkit/velocity_grid.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

using namespace boltzkit;

TEST_CASE("velocity grid places the origin on a node") {
  VelocityGrid grid(16, 4.0);
  CHECK(grid.h() == 0.5);
  CHECK(grid.coord(0) == -4.0);
  CHECK(grid.coord(8) == 0.0);
  CHECK(grid.coord(15) == doctest::Approx(3.5));
  CHECK(grid.size() == 4096);
  const Vec3 v = grid.node(grid.index(1, 2, 3));
  CHECK(v.x == grid.coord(1));
  CHECK(v.y == grid.coord(2));
  CHECK(v.z == grid.coord(3));
}

TEST_CASE("velocity grid rejects bad shapes") {
  CHECK_THROWS_AS(VelocityGrid(6, 4.0), std::invalid_argument);
  CHECK_THROWS_AS(VelocityGrid(9, 4.0), std::invalid_argument);
  CHECK_THROWS_AS(VelocityGrid(16, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(VelocityGrid(16, -1.0), std::invalid_argument);
}

TEST_CASE("gaussian field mass approximates the continuum integral") {
  VelocityGrid grid(32, 6.0);
  VelocityField f = VelocityField::gaussian(grid, {0.0, 0.0, 0.0});
  // int exp(-|v|^2) dv = pi^{3/2}
  CHECK(f.mass() == doctest::Approx(std::pow(M_PI, 1.5)).epsilon(1e-6));
  CHECK(f.sup_norm() == 1.0);
  CHECK(f.non_negative());
  CHECK(f.finite());

  // Center 0.75 sits on a node of the h = 0.375 grid, so the sup is exact.
  VelocityField g = VelocityField::gaussian(grid, {0.75, 0.0, 0.0}, 2.0, 0.5);
  CHECK(g.mass() == doctest::Approx(0.5 * std::pow(M_PI / 2.0, 1.5)).epsilon(1e-6));
  CHECK(g.sup_norm() == 0.5);
}

TEST_CASE("field arithmetic is pointwise") {
  VelocityGrid grid(8, 2.0);
  VelocityField f = VelocityField::gaussian(grid, {0.0, 0.0, 0.0});
  VelocityField g = f;
  g += f;
  CHECK(g.sup_norm() == doctest::Approx(2.0 * f.sup_norm()));
  g -= f;
  g *= 3.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(g[i] == doctest::Approx(3.0 * f[i]));
  }
  VelocityField h = f;
  h.multiply_pointwise(f);
  CHECK(h[grid.index(4, 4, 4)] == doctest::Approx(f[grid.index(4, 4, 4)] * f[grid.index(4, 4, 4)]));
}

TEST_CASE("field flags non finite and negative values") {
  VelocityGrid grid(8, 2.0);
  VelocityField f(grid);
  CHECK(f.non_negative());
  f.values()[3] = -1e-12;
  CHECK(!f.non_negative());
  f.values()[3] = std::numeric_limits<double>::quiet_NaN();
  CHECK(!f.finite());
}

TEST_CASE("slab field indexes x major") {
  VelocityGrid vgrid(8, 2.0);
  SlabField slab(4, 8.0, vgrid);
  CHECK(slab.x_coord(0) == 0.0);
  CHECK(slab.x_coord(1) == 2.0);
  CHECK(slab.index(2, 5) == 2 * vgrid.size() + 5);
  VelocityField f = VelocityField::gaussian(vgrid, {0.0, 0.0, 0.0});
  for (int j = 0; j < 4; ++j) {
    for (std::size_t v = 0; v < vgrid.size(); ++v) {
      slab.values()[slab.index(j, v)] = (j + 1) * f[v];
    }
  }
  VelocityField s2(vgrid, std::vector<double>(slab.slice(2), slab.slice(2) + vgrid.size()));
  CHECK(s2.sup_norm() == doctest::Approx(3.0));
  CHECK(slab.mass() == doctest::Approx((1 + 2 + 3 + 4) * f.mass() * 2.0));
  CHECK(slab.non_negative());
}
