#include "boltzkit/monotone_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "boltzkit/norms.hpp"
#include "boltzkit/parallel.hpp"
#include "boltzkit/transport.hpp"

namespace boltzkit {

int SolveConfig::n_steps() const {
    const double steps = horizon / dt;
    const int m = static_cast<int>(std::lround(steps));
    if (std::abs(steps - m) > 1e-9 || m < 1)
        throw std::invalid_argument("SolveConfig: horizon must be a positive multiple of dt");
    return m;
}

void SolveConfig::validate() const {
    if (!(gamma >= 0.0) || gamma > 1.0)
        throw std::invalid_argument("SolveConfig: gamma must be in [0, 1]");
    if (!(ell > 2.0 * gamma + 10.0 / 9.0))
        throw std::invalid_argument("SolveConfig: weight ell must exceed 2 gamma + 10/9");
    if (!(dt > 0.0) || !(horizon > 0.0))
        throw std::invalid_argument("SolveConfig: dt and horizon must be positive");
    n_steps();
    if (n_x < 1) throw std::invalid_argument("SolveConfig: n_x must be >= 1");
    if (n_x > 1 && !(extent * horizon < length / 2.0))
        throw std::invalid_argument(
            "SolveConfig: slab too short, need extent * horizon < length / 2");
    if (!(eta > 0.0)) throw std::invalid_argument("SolveConfig: eta must be positive");
    if (!(tolerance > 0.0)) throw std::invalid_argument("SolveConfig: tolerance must be positive");
    if (max_iterations < 1)
        throw std::invalid_argument("SolveConfig: max_iterations must be >= 1");
}

DivergenceError::DivergenceError(double factor_)
    : std::runtime_error([factor_] {
          std::ostringstream os;
          os << "Picard iteration diverges: successive differences grew by factor " << factor_
             << " (initial data too large)";
          return os.str();
      }()),
      factor(factor_) {}

MonotonicityError::MonotonicityError(const std::string& what_, int iteration_,
                                     std::size_t time_index_, double defect_)
    : std::runtime_error([&] {
          std::ostringstream os;
          os << what_ << " at iteration " << iteration_ << ", time sample " << time_index_
             << ", worst defect " << defect_;
          return os.str();
      }()),
      iteration(iteration_),
      time_index(time_index_),
      defect(defect_) {}

ConvergenceError::ConvergenceError(const std::string& what_, std::vector<double> history_)
    : std::runtime_error(what_), history(std::move(history_)) {}

double smallness_norm(const SlabField& f, double ell) { return norm_xv(f, 3.0, 3.0, ell); }

SlabField lift_homogeneous(const VelocityField& f) {
    SlabField out(1, 1.0, f.grid());
    out.values() = f.values();
    return out;
}

std::vector<double> mass_history(const Trajectory& traj) {
    std::vector<double> out;
    out.reserve(traj.size());
    for (const auto& slab : traj) out.push_back(slab.mass());
    return out;
}

namespace {

void require_matches(const SlabField& f0, const SolveConfig& cfg, const char* who) {
    const bool grid_ok =
        f0.vgrid().n() == cfg.n_v && f0.vgrid().extent() == cfg.extent && f0.n_x() == cfg.n_x;
    const bool len_ok = cfg.n_x == 1 || f0.length() == cfg.length;
    if (!grid_ok || !len_ok)
        throw std::invalid_argument(std::string(who) + ": field does not match the config grids");
}

CollisionOperator make_operator(const SlabField& f0, const SolveConfig& cfg) {
    return CollisionOperator(f0.vgrid(), HemisphereRule(cfg.n_mu, cfg.n_phi),
                             CollisionKernel{cfg.gamma},
                             {InterpScheme::linear, cfg.threads, 1});
}

std::vector<double> time_grid(const SolveConfig& cfg) {
    const int n = cfg.n_steps();
    std::vector<double> t(n + 1);
    for (int i = 0; i <= n; ++i) t[i] = i * cfg.dt;
    return t;
}

/// Applies a per-velocity-slice operation op(VelocityField) -> VelocityField
/// to every spatial cell of every time sample.
template <class SliceOp>
Trajectory map_slices(const Trajectory& traj, SliceOp&& op) {
    Trajectory out;
    out.reserve(traj.size());
    for (const auto& slab : traj) {
        SlabField mapped(slab.n_x(), slab.length(), slab.vgrid());
        const std::size_t nv = slab.vgrid().size();
        std::vector<double> slice(nv);
        for (int j = 0; j < slab.n_x(); ++j) {
            std::copy(slab.slice(j), slab.slice(j) + nv, slice.begin());
            const VelocityField result = op(VelocityField(slab.vgrid(), slice));
            std::copy(result.values().begin(), result.values().end(), mapped.slice(j));
        }
        out.push_back(std::move(mapped));
    }
    return out;
}

Trajectory gain_of(const CollisionOperator& op, const Trajectory& traj) {
    return map_slices(traj, [&](const VelocityField& f) { return op.gain(f, f); });
}

Trajectory loss_factor_of(const CollisionOperator& op, const Trajectory& traj) {
    return map_slices(traj, [&](const VelocityField& f) { return op.loss_factor(f); });
}

Trajectory zero_trajectory(const SlabField& shape, std::size_t n_samples) {
    Trajectory out;
    out.reserve(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i)
        out.emplace_back(shape.n_x(), shape.length(), shape.vgrid());
    return out;
}

/// Largest time-slice value of || <v>^ell (a - b)(t) ||_{L3_x L3_v}.
double bracket_gap(const Trajectory& a, const Trajectory& b, double ell) {
    double gap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        SlabField diff = a[i];
        diff -= b[i];
        gap = std::max(gap, norm_xv(diff, 3.0, 3.0, ell));
    }
    return gap;
}

struct MinLocation {
    double value = std::numeric_limits<double>::infinity();
    std::size_t time = 0;
    std::size_t flat = 0;
};

MinLocation min_difference(const Trajectory& a, const Trajectory& b) {
    MinLocation loc;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& av = a[i].values();
        const auto& bv = b[i].values();
        for (std::size_t k = 0; k < av.size(); ++k) {
            const double d = av[k] - bv[k];
            if (d < loc.value) loc = {d, i, k};
        }
    }
    return loc;
}

bool trajectory_non_negative(const Trajectory& traj) {
    for (const auto& slab : traj)
        if (!slab.non_negative()) return false;
    return true;
}

}  // namespace

GainOnlyResult gain_only_solve(const SlabField& f0, const SolveConfig& cfg) {
    cfg.validate();
    require_matches(f0, cfg, "gain_only_solve");
    if (!f0.non_negative())
        throw std::invalid_argument("gain_only_solve: initial data must be >= 0");
    const double size = smallness_norm(f0, cfg.ell);
    if (size > cfg.eta) {
        std::ostringstream os;
        os << "gain_only_solve: || <v>^ell f0 ||_3 = " << size << " exceeds eta = " << cfg.eta;
        throw std::domain_error(os.str());
    }

    const int n = cfg.n_steps();
    const CollisionOperator op = make_operator(f0, cfg);

    GainOnlyResult res;
    res.times = time_grid(cfg);
    const Trajectory base = transport_trajectory(f0, cfg.dt, n);
    res.trajectory = base;

    for (int sweep = 0; sweep < cfg.max_iterations; ++sweep) {
        const Trajectory source = gain_of(op, res.trajectory);
        Trajectory next = base;
        for (int i = 1; i <= n; ++i) next[i] += duhamel_integral(source, cfg.dt, res.times[i]);

        const double diff = bracket_gap(next, res.trajectory, cfg.ell);
        if (!res.diff_history.empty()) {
            const double prev = res.diff_history.back();
            if (diff >= prev && diff > cfg.tolerance && prev > 0.0)
                throw DivergenceError(diff / prev);
        }
        res.diff_history.push_back(diff);
        res.trajectory = std::move(next);
        res.iterations = sweep + 1;
        if (diff < cfg.tolerance) return res;
    }
    throw ConvergenceError("gain_only_solve: no convergence within the iteration budget",
                           res.diff_history);
}

Trajectory damped_linear_step(const Trajectory& source, const Trajectory& damping,
                              const SlabField& f0, const SolveConfig& cfg) {
    cfg.validate();
    require_matches(f0, cfg, "damped_linear_step");
    const int n = cfg.n_steps();
    if (source.size() != static_cast<std::size_t>(n) + 1 ||
        damping.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("damped_linear_step: need n_steps + 1 time samples");
    for (int i = 0; i <= n; ++i) {
        source[i].check_same_shape(f0);
        damping[i].check_same_shape(f0);
    }
    if (!trajectory_non_negative(damping))
        throw std::domain_error("damped_linear_step: damping must be >= 0");
    if (!trajectory_non_negative(source))
        throw std::domain_error("damped_linear_step: source must be >= 0");

    const VelocityGrid& vg = f0.vgrid();
    const int nvx = vg.n();
    const std::size_t nv = vg.size();
    const std::size_t plane = nv / nvx;  // nodes per v1 slice
    const double dx = f0.dx();
    const double dt = cfg.dt;

    Trajectory out;
    out.reserve(n + 1);
    out.push_back(f0);

    for (int i = 1; i <= n; ++i) {
        SlabField slab(f0.n_x(), f0.length(), vg);
        double* dst = slab.values().data();
        const std::size_t count = slab.size();

        parallel_for(count, cfg.threads, [&](std::size_t begin, std::size_t end) {
            std::vector<double> x_cells(i + 1), big_d(i + 1);
            for (std::size_t node = begin; node < end; ++node) {
                const std::size_t j = node / nv;
                const std::size_t v_flat = node % nv;
                const int iv1 = static_cast<int>(v_flat / plane);
                const double v1 = vg.coord(iv1);

                // Characteristic positions and the running damping integral
                // D_m = int_0^{t_m} damping along the characteristic, by the
                // trapezoid rule on the same samples.
                double prev_lambda = 0.0;
                for (int m = 0; m <= i; ++m) {
                    const double tau = (i - m) * dt;
                    const double shift_cells = v1 * tau / dx;
                    x_cells[m] = static_cast<double>(j) - shift_cells;
                    const double lambda = sample_x(damping[m], x_cells[m], v_flat);
                    big_d[m] = m == 0 ? 0.0 : big_d[m - 1] + 0.5 * dt * (prev_lambda + lambda);
                    prev_lambda = lambda;
                }

                const double d_total = big_d[i];
                double acc = std::exp(-d_total) * sample_x(f0, x_cells[0], v_flat);
                for (int m = 0; m <= i; ++m) {
                    const double w = (m == 0 || m == i) ? 0.5 * dt : dt;
                    acc += w * std::exp(-(d_total - big_d[m])) *
                           sample_x(source[m], x_cells[m], v_flat);
                }
                dst[node] = acc;
            }
        });
        out.push_back(std::move(slab));
    }
    return out;
}

KsResult ks_iterate(const SlabField& f0, const SolveConfig& cfg) {
    cfg.validate();
    require_matches(f0, cfg, "ks_iterate");

    GainOnlyResult gained = gain_only_solve(f0, cfg);
    const CollisionOperator op = make_operator(f0, cfg);
    const std::size_t n_samples = gained.trajectory.size();

    KsResult res;
    res.times = gained.times;
    Trajectory g = std::move(gained.trajectory);
    Trajectory h = zero_trajectory(f0, n_samples);

    double scale = 0.0;
    for (const auto& slab : g) scale = std::max(scale, slab.sup_norm());
    const double eps_num = 1e-10 * scale;

    std::vector<double> gaps;
    double gap = bracket_gap(g, h, cfg.ell);
    gaps.push_back(gap);
    int n = 1;

    while (gap >= cfg.tolerance) {
        if (n >= cfg.max_iterations)
            throw ConvergenceError("ks_iterate: bracket gap did not close within the budget",
                                   gaps);

        Trajectory g_next, h_next;
        if (n == 1) {
            // g_2 = g_1: the gain-only fixed point already solves the first
            // damped equation (h_1 = 0 means no damping); recomputing would
            // only re-add the Picard stopping error.
            g_next = g;
            h_next = damped_linear_step(zero_trajectory(f0, n_samples), loss_factor_of(op, g),
                                        f0, cfg);
        } else {
            g_next = damped_linear_step(gain_of(op, g), loss_factor_of(op, h), f0, cfg);
            h_next = damped_linear_step(gain_of(op, h), loss_factor_of(op, g), f0, cfg);
        }

        IterationState st;
        st.n = n + 1;
        const MinLocation dg = min_difference(g, g_next);
        const MinLocation dh = min_difference(h_next, h);
        const MinLocation dgh = min_difference(g_next, h_next);
        st.defect_g = dg.value;
        st.defect_h = dh.value;
        st.defect_gh = dgh.value;
        if (dg.value < -eps_num)
            throw MonotonicityError("ks_iterate: upper iterates not decreasing", st.n, dg.time,
                                    dg.value);
        if (dh.value < -eps_num)
            throw MonotonicityError("ks_iterate: lower iterates not increasing", st.n, dh.time,
                                    dh.value);
        if (dgh.value < -eps_num)
            throw MonotonicityError("ks_iterate: bracket crossed", st.n, dgh.time, dgh.value);

        const double gap_next = bracket_gap(g_next, h_next, cfg.ell);
        st.gap = gap_next;
        st.ratio = gap > 0.0 ? gap_next / gap : 0.0;
        res.history.push_back(st);
        gaps.push_back(gap_next);

        g = std::move(g_next);
        h = std::move(h_next);
        gap = gap_next;
        ++n;
    }

    res.limit = g;
    for (std::size_t i = 0; i < res.limit.size(); ++i) {
        auto& lv = res.limit[i].values();
        const auto& hv = h[i].values();
        for (std::size_t k = 0; k < lv.size(); ++k) lv[k] = 0.5 * (lv[k] + hv[k]);
    }
    res.upper = std::move(g);
    res.lower = std::move(h);
    res.final_gap = gap;
    res.iterations = n;
    return res;
}

ScatteringReport scattering_probe(const Trajectory& traj, const SolveConfig& cfg) {
    cfg.validate();
    const int n = cfg.n_steps();
    if (traj.size() != static_cast<std::size_t>(n) + 1)
        throw std::invalid_argument("scattering_probe: need n_steps + 1 time samples");

    const std::vector<double> times = time_grid(cfg);
    ScatteringReport rep{free_transport(traj[n], -times[n]), times, {}, true, 0.0};

    for (int i = 0; i <= n; ++i) {
        SlabField diff = free_transport(traj[i], -times[i]);
        diff -= rep.f_infinity;
        rep.residuals.push_back(norm_xv(diff, 3.0, 3.0, 0.0));
    }

    const double slack = 1e-3 * rep.residuals.front();
    for (int i = 0; i + 1 <= n; ++i)
        if (rep.residuals[i + 1] > rep.residuals[i] + slack) rep.decreasing = false;

    if (rep.residuals.front() > 0.0)
        rep.half_over_start = rep.residuals[n / 2] / rep.residuals.front();
    return rep;
}

}  // namespace boltzkit
