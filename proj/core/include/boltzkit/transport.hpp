#pragma once

#include <span>
#include <vector>

#include "boltzkit/field.hpp"

namespace boltzkit {

/// Free kinetic streaming on the periodic slab: (U(t) f)(x, v) = f(x - v1 t, v),
/// advecting through the first velocity component only. Spatially homogeneous
/// fields (n_x = 1) are fixed points of U.
///
/// Evaluation is semi-Lagrangian with linear interpolation in x (positive
/// weights, so non-negativity survives) and periodic wrap of the sample
/// position. A wrap of the *support* is still forbidden: the slab emulates a
/// compactly supported problem on the line, so every transport call checks
/// the no-wrap budget |t| * R <= L / 2 (R bounds |v1| on the grid) and
/// refuses beyond it. Shifts aligned to the x grid are exact; multiplication
/// by any velocity profile commutes with U exactly.

/// U(t) f. Throws a range error when the no-wrap budget is exceeded
/// (n_x > 1 only); t may be negative.
SlabField free_transport(const SlabField& f, double t);

/// Linear interpolation of the x-profile of f at velocity node v_flat and
/// fractional cell position x_cells (periodic). Shared by transport and the
/// characteristic-line solver.
inline double sample_x(const SlabField& f, double x_cells, std::size_t v_flat) {
    const int n_x = f.n_x();
    if (n_x == 1) return f.values()[v_flat];
    double p = x_cells - std::floor(x_cells / n_x) * n_x;  // wrap into [0, n_x)
    if (p >= n_x) p = 0.0;                                 // guard rounding at the seam
    const int j0 = static_cast<int>(p);
    const double frac = p - j0;
    const int j1 = j0 + 1 == n_x ? 0 : j0 + 1;
    const std::size_t nv = f.vgrid().size();
    const double* base = f.values().data() + v_flat;
    return (1.0 - frac) * base[static_cast<std::size_t>(j0) * nv] +
           frac * base[static_cast<std::size_t>(j1) * nv];
}

/// The trajectory {U(i dt) f0 : i = 0..n_steps} (n_steps + 1 slices).
std::vector<SlabField> transport_trajectory(const SlabField& f0, double dt, int n_steps);

/// Duhamel accumulation int_0^t U(t - s) F(s) ds by the trapezoid rule on
/// the uniform sample grid s_i = i dt. The first samples of `source` up to
/// s = t are used; t must sit on the grid (within rounding) and be covered
/// by the samples, else a domain error. t = 0 gives the zero field.
SlabField duhamel_integral(std::span<const SlabField> source, double dt, double t);

}  // namespace boltzkit
