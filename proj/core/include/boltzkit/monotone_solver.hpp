#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "boltzkit/collision.hpp"
#include "boltzkit/field.hpp"

namespace boltzkit {

/// A distribution sampled on the uniform time grid t_i = i dt, i = 0..N.
using Trajectory = std::vector<SlabField>;

/// Shared configuration of the small-data solvers.
///
/// Interpolation is pinned to linear everywhere in this module: the monotone
/// scheme needs every elementary operation to preserve non-negativity and
/// entrywise ordering, which positive interpolation weights give for free and
/// higher-order stencils do not.
struct SolveConfig {
    double gamma = 1.0;  ///< kernel power, in [0, 1]
    double ell = 4.0;    ///< moment weight; must satisfy ell > 2 gamma + 10/9
    double horizon = 2.0;
    double dt = 0.1;

    int n_x = 1;          ///< 1 = spatially homogeneous
    double length = 1.0;  ///< slab period (ignored when n_x = 1)
    int n_v = 8;
    double extent = 4.5;  ///< velocity box radius

    int n_mu = 4;
    int n_phi = 8;
    int threads = 0;

    double tolerance = 1e-8;  ///< stop threshold for Picard differences / bracket gap
    int max_iterations = 40;
    double eta = 1e-2;  ///< admission bound for || <v>^ell f0 ||_{L3_x L3_v}

    int n_steps() const;
    /// Throws std::invalid_argument on a bad field, including a weight at or
    /// below 2 gamma + 10/9 and, for n_x > 1, a slab shorter than the no-wrap
    /// budget 2 * extent * horizon.
    void validate() const;
};

/// Data too large: successive Picard differences stopped contracting.
struct DivergenceError : std::runtime_error {
    double factor;  ///< measured ratio of successive differences
    explicit DivergenceError(double factor_);
};

/// The bracket ordering failed beyond the numerical slack.
struct MonotonicityError : std::runtime_error {
    int iteration;
    std::size_t time_index;
    double defect;  ///< most negative ordering difference found
    MonotonicityError(const std::string& what_, int iteration_, std::size_t time_index_,
                      double defect_);
};

/// Iteration budget exhausted before the stop threshold.
struct ConvergenceError : std::runtime_error {
    std::vector<double> history;  ///< per-iteration difference / gap norms
    ConvergenceError(const std::string& what_, std::vector<double> history_);
};

/// The smallness norm used for solver admission: || <v>^ell f ||_{L3_x L3_v}.
double smallness_norm(const SlabField& f, double ell);

/// Wraps a velocity-only distribution as a homogeneous slab (n_x = 1).
SlabField lift_homogeneous(const VelocityField& f);

/// Per-sample discrete mass of a trajectory.
std::vector<double> mass_history(const Trajectory& traj);

struct GainOnlyResult {
    Trajectory trajectory;
    std::vector<double> times;
    /// Mixed-norm distance between successive Picard sweeps, one entry per
    /// completed sweep.
    std::vector<double> diff_history;
    int iterations = 0;
};

/// Picard iteration for the gain-only equation
///   f(t) = U(t) f0 + int_0^t U(t-s) Q+(f,f)(s) ds
/// started from f^(0) = U(.) f0. Every update adds a non-negative Duhamel
/// term to U(.) f0, so all iterates are entrywise >= 0 and >= U(.) f0.
///
/// Preconditions: f0 >= 0 on the configured grids and
/// smallness_norm(f0, ell) <= eta (throws std::domain_error otherwise).
/// Throws DivergenceError when successive differences grow while above the
/// stop threshold, ConvergenceError when the budget runs out.
GainOnlyResult gain_only_solve(const SlabField& f0, const SolveConfig& cfg);

/// Mild solution of the damped linear equation
///   (d/dt + v1 d/dx + damping) f = source,  f(0) = f0,
/// along characteristics:
///   f(t_i, x, v) = e^{-D_i} f0(x - v1 t_i, v)
///                + sum_m w_m e^{-(D_i - D_m)} source(t_m, x - v1 (t_i - t_m), v)
/// with trapezoid weights w and D the trapezoid accumulation of the damping
/// field along the same characteristic. The exponential factors keep the
/// output >= 0 for any dt and <= the undamped Duhamel value.
///
/// `source` and `damping` must each hold n_steps() + 1 time samples; both
/// must be entrywise >= 0 (std::domain_error otherwise).
Trajectory damped_linear_step(const Trajectory& source, const Trajectory& damping,
                              const SlabField& f0, const SolveConfig& cfg);

/// Bracket diagnostics of one update (g_n, h_n) -> (g_{n+1}, h_{n+1}).
/// The defects are minima over all time-space-velocity samples and certify
/// the ordering h_n <= h_{n+1} <= g_{n+1} <= g_n when >= 0 (a small negative
/// value within the rounding slack is tolerated).
struct IterationState {
    int n = 0;            ///< index of the freshly produced pair
    double defect_g = 0;  ///< min(g_n - g_{n+1})
    double defect_h = 0;  ///< min(h_{n+1} - h_n)
    double defect_gh = 0; ///< min(g_{n+1} - h_{n+1})
    double gap = 0;       ///< sup_t || <v>^ell (g-h)(t) ||_{L3_x L3_v} at n+1
    double ratio = 0;     ///< gap / previous gap (0 for the first entry)
};

struct KsResult {
    Trajectory limit;  ///< midpoint (g + h)/2 of the final bracket
    Trajectory upper;  ///< final g_n
    Trajectory lower;  ///< final h_n
    std::vector<double> times;
    std::vector<IterationState> history;
    double final_gap = 0;
    int iterations = 0;
};

/// Monotone bracket iteration: g_1 = gain_only_solve(f0), h_1 = 0, then
///   g_{n+1} = damped_linear_step(Q+(g_n,g_n), L(h_n), f0)
///   h_{n+1} = damped_linear_step(Q+(h_n,h_n), L(g_n), f0)
/// except that g_2 is assigned from g_1 (for the gain-only fixed point the
/// two coincide, and recomputing would only add the Picard stopping error).
/// The beginning condition 0 <= h_1 <= h_2 <= g_2 <= g_1 and the entrywise
/// ordering of every later pair are checked against a slack of 1e-10 times
/// the largest g_1 value; a worse defect raises MonotonicityError with its
/// location. Stops when the weighted bracket gap drops below cfg.tolerance;
/// raises ConvergenceError with the gap history when the budget runs out.
KsResult ks_iterate(const SlabField& f0, const SolveConfig& cfg);

struct ScatteringReport {
    SlabField f_infinity;           ///< U(-T) f(T), the scattering-limit estimate
    std::vector<double> times;
    std::vector<double> residuals;  ///< || U(-t_i) f(t_i) - f_infinity ||_{L3_x L3_v}
    /// Whether the residuals decrease along the grid within a slack of 1e-3
    /// times the initial residual.
    bool decreasing = true;
    /// residual(T/2) / residual(0); 0 when the trajectory is collisionless.
    double half_over_start = 0;
};

/// Pull-back diagnostic: if f scatters, B(t) = U(-t) f(t) is Cauchy in t and
/// the residuals against B(T) shrink. The trajectory must hold
/// cfg.n_steps() + 1 samples.
ScatteringReport scattering_probe(const Trajectory& traj, const SolveConfig& cfg);

}  // namespace boltzkit
