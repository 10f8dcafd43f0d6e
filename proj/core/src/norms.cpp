#include "boltzkit/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "boltzkit/parallel.hpp"

namespace boltzkit {

namespace {

void check_exponent(double p, const char* what) {
    if (!(p >= 1.0))  // NaN and p < 1 both land here
        throw std::invalid_argument(std::string(what) + ": exponent must be >= 1 (or infinity)");
}

/// || w .* f ||_p over a raw slice with measure factor `measure` per sample.
double weighted_lp(const double* f, const double* w, std::size_t count,
                   double p, double measure) {
    if (p == p_inf) {
        double m = 0.0;
        for (std::size_t i = 0; i < count; ++i) m = std::max(m, std::abs(f[i]) * w[i]);
        return m;
    }
    std::vector<double> powed(count);
    for (std::size_t i = 0; i < count; ++i)
        powed[i] = std::pow(std::abs(f[i]) * w[i], p);
    return std::pow(measure * pairwise_sum(powed), 1.0 / p);
}

}  // namespace

std::vector<double> bracket_weights(const VelocityGrid& grid, double ell) {
    std::vector<double> w(grid.size(), 1.0);
    if (ell != 0.0) {
        for (std::size_t i = 0; i < grid.size(); ++i)
            w[i] = std::pow(bracket(grid.node(i)), ell);
    }
    return w;
}

double norm_v(const VelocityField& f, double p, double ell) {
    check_exponent(p, "norm_v");
    const std::vector<double> w = bracket_weights(f.grid(), ell);
    return weighted_lp(f.values().data(), w.data(), f.size(), p,
                       f.grid().cell_volume());
}

double norm_xv(const SlabField& f, double r, double p, double ell) {
    check_exponent(r, "norm_xv");
    check_exponent(p, "norm_xv");
    const std::vector<double> w = bracket_weights(f.vgrid(), ell);
    const std::size_t nv = f.vgrid().size();
    std::vector<double> per_cell(f.n_x());
    for (int j = 0; j < f.n_x(); ++j)
        per_cell[j] = weighted_lp(f.slice(j), w.data(), nv, p,
                                  f.vgrid().cell_volume());
    if (r == p_inf) {
        double m = 0.0;
        for (double v : per_cell) m = std::max(m, v);
        return m;
    }
    for (double& v : per_cell) v = std::pow(v, r);
    return std::pow(f.dx() * pairwise_sum(per_cell), 1.0 / r);
}

double norm_txv(std::span<const SlabField> traj, std::span<const double> times,
                double q, double r, double p, double ell) {
    check_exponent(q, "norm_txv");
    if (traj.empty()) throw std::invalid_argument("norm_txv: empty trajectory");
    if (traj.size() != times.size())
        throw std::invalid_argument("norm_txv: times do not match trajectory");
    std::vector<double> slice_norms(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i)
        slice_norms[i] = norm_xv(traj[i], r, p, ell);
    if (q == p_inf) {
        double m = 0.0;
        for (double v : slice_norms) m = std::max(m, v);
        return m;
    }
    if (traj.size() == 1)
        throw std::invalid_argument("norm_txv: finite q needs >= 2 time samples");
    double acc = 0.0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        double wt = 0.0;
        if (i > 0) wt += 0.5 * (times[i] - times[i - 1]);
        if (i + 1 < traj.size()) wt += 0.5 * (times[i + 1] - times[i]);
        acc += wt * std::pow(slice_norms[i], q);
    }
    return std::pow(acc, 1.0 / q);
}

}  // namespace boltzkit
