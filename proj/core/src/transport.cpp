#include "boltzkit/transport.hpp"

#include <cmath>
#include <stdexcept>

#include "boltzkit/parallel.hpp"

namespace boltzkit {

namespace {

void check_no_wrap(const SlabField& f, double t) {
    if (f.n_x() == 1) return;
    const double reach = std::abs(t) * f.vgrid().extent();
    if (!(reach <= 0.5 * f.length()))
        throw std::range_error("free_transport: |t| * max|v1| exceeds L/2, support would wrap");
}

}  // namespace

SlabField free_transport(const SlabField& f, double t) {
    check_no_wrap(f, t);
    if (f.n_x() == 1 || t == 0.0) return f;

    const int n_x = f.n_x();
    const double dx = f.dx();
    const VelocityGrid& vg = f.vgrid();
    const std::size_t nv = vg.size();
    const int n = vg.n();

    SlabField out(n_x, f.length(), vg);
    const double* src = f.values().data();
    double* dst = out.values().data();

    // The shift depends only on the first velocity index; process one
    // (v1, x) plane at a time so the interpolation setup is hoisted.
    parallel_for(static_cast<std::size_t>(n), 0, [&](std::size_t begin, std::size_t end) {
        for (std::size_t ivx = begin; ivx < end; ++ivx) {
            const double shift_cells = vg.coord(static_cast<int>(ivx)) * t / dx;
            const std::size_t plane = ivx * static_cast<std::size_t>(n) * n;
            const std::size_t plane_len = static_cast<std::size_t>(n) * n;
            for (int j = 0; j < n_x; ++j) {
                double p = j - shift_cells;
                p -= std::floor(p / n_x) * n_x;
                if (p >= n_x) p = 0.0;
                const int j0 = static_cast<int>(p);
                const double frac = p - j0;
                const int j1 = j0 + 1 == n_x ? 0 : j0 + 1;
                const double* s0 = src + static_cast<std::size_t>(j0) * nv + plane;
                const double* s1 = src + static_cast<std::size_t>(j1) * nv + plane;
                double* d = dst + static_cast<std::size_t>(j) * nv + plane;
                for (std::size_t k = 0; k < plane_len; ++k)
                    d[k] = (1.0 - frac) * s0[k] + frac * s1[k];
            }
        }
    });
    return out;
}

std::vector<SlabField> transport_trajectory(const SlabField& f0, double dt, int n_steps) {
    if (!(dt > 0.0)) throw std::invalid_argument("transport_trajectory: dt must be positive");
    if (n_steps < 0) throw std::invalid_argument("transport_trajectory: n_steps must be >= 0");
    std::vector<SlabField> traj;
    traj.reserve(n_steps + 1);
    for (int i = 0; i <= n_steps; ++i) traj.push_back(free_transport(f0, i * dt));
    return traj;
}

SlabField duhamel_integral(std::span<const SlabField> source, double dt, double t) {
    if (source.empty()) throw std::invalid_argument("duhamel_integral: no source samples");
    if (!(dt > 0.0)) throw std::invalid_argument("duhamel_integral: dt must be positive");
    if (!(t >= 0.0)) throw std::invalid_argument("duhamel_integral: t must be >= 0");
    for (std::size_t i = 1; i < source.size(); ++i) source[i].check_same_shape(source[0]);

    const double steps = t / dt;
    const int m = static_cast<int>(std::lround(steps));
    if (std::abs(steps - m) > 1e-9)
        throw std::invalid_argument("duhamel_integral: t does not sit on the sample grid");
    if (m >= static_cast<int>(source.size()))
        throw std::invalid_argument("duhamel_integral: samples do not cover [0, t]");

    SlabField acc(source[0].n_x(), source[0].length(), source[0].vgrid());
    if (m == 0) return acc;

    for (int i = 0; i <= m; ++i) {
        SlabField term = free_transport(source[i], t - i * dt);
        const double w = (i == 0 || i == m) ? 0.5 * dt : dt;
        term *= w;
        acc += term;
    }
    return acc;
}

}  // namespace boltzkit
