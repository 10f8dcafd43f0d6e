#pragma once

#include <limits>
#include <span>

#include "boltzkit/field.hpp"

namespace boltzkit {

/// Exponent value meaning L^infinity.
constexpr double p_inf = std::numeric_limits<double>::infinity();

/// Weighted velocity norm || <v>^ell f ||_{L^p_v} on the grid:
/// (h^3 sum (|f| <v>^ell)^p)^{1/p}, or the max for p = infinity.
double norm_v(const VelocityField& f, double p, double ell = 0.0);

/// Mixed spatial-velocity norm || || <v>^ell f ||_{L^p_v} ||_{L^r_x} on a
/// slab: the inner velocity norm per spatial cell, then the L^r_x norm of
/// that profile (dx-weighted sum, or max for r = infinity).
double norm_xv(const SlabField& f, double r, double p, double ell = 0.0);

/// Space-time norm of a trajectory sampled at increasing times:
/// L^q_t L^r_x L^p_v with <v>^ell weight. Finite q uses trapezoid weights in
/// t (so the time factor of a t-constant trajectory is exactly
/// (t_last - t_first)^{1/q}); q = infinity takes the max over samples.
double norm_txv(std::span<const SlabField> traj, std::span<const double> times,
                double q, double r, double p, double ell = 0.0);

/// The <v>^ell weight evaluated on a grid (shared helper).
std::vector<double> bracket_weights(const VelocityGrid& grid, double ell);

}  // namespace boltzkit
