#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "boltzkit/field_io.hpp"
#include "boltzkit/monotone_solver.hpp"
#include "tool_common.hpp"

namespace boltzkit::cli {

namespace {

const std::vector<std::string_view> kSolveSchema{
    "kernel.gamma",     "solver.ell",      "solver.horizon",  "solver.dt",
    "solver.eta",       "solver.tolerance", "solver.max_iterations",
    "grid.n_x",         "grid.length",     "grid.n_v",        "grid.extent",
    "grid.n_mu",        "grid.n_phi",      "initial.center",  "initial.alpha",
    "initial.x_width",  "initial.fraction", "output.trajectory", "output.csv",
    "output.json"};

SolveConfig solve_config_from(const Config& cfg, int threads) {
    SolveConfig sc;
    sc.gamma = cfg.has("kernel.gamma") ? cfg.get_rational("kernel.gamma").to_double() : sc.gamma;
    sc.ell = cfg.get_double("solver.ell", sc.ell);
    sc.horizon = cfg.get_double("solver.horizon", sc.horizon);
    sc.dt = cfg.get_double("solver.dt", sc.dt);
    sc.eta = cfg.get_double("solver.eta", sc.eta);
    sc.tolerance = cfg.get_double("solver.tolerance", sc.tolerance);
    sc.max_iterations = cfg.get_int("solver.max_iterations", sc.max_iterations);
    sc.n_x = cfg.get_int("grid.n_x", sc.n_x);
    sc.length = cfg.get_double("grid.length", sc.length);
    sc.n_v = cfg.get_int("grid.n_v", sc.n_v);
    sc.extent = cfg.get_double("grid.extent", sc.extent);
    sc.n_mu = cfg.get_int("grid.n_mu", sc.n_mu);
    sc.n_phi = cfg.get_int("grid.n_phi", sc.n_phi);
    sc.threads = threads;
    sc.validate();
    return sc;
}

/// Initial datum: --init field file when given, otherwise a velocity
/// Gaussian from initial.* scaled so its smallness norm is
/// initial.fraction x solver.eta. For n_x > 1 an x-Gaussian profile of width
/// initial.x_width (0 = uniform) centered at mid-box modulates the slices.
SlabField initial_datum(const Config& cfg, const SolveConfig& sc, const std::string& init_path) {
    if (!init_path.empty()) {
        LoadedTrajectory loaded = read_trajectory(init_path);
        if (loaded.fields.size() != 1)
            throw std::invalid_argument("solve: initial file holds " +
                                        std::to_string(loaded.fields.size()) +
                                        " time slices, expected one");
        return std::move(loaded.fields.front());
    }
    const VelocityGrid grid(sc.n_v, sc.extent);
    const Vec3 center = cfg.has("initial.center") ? cfg.get_vec3("initial.center") : Vec3{};
    const double alpha = cfg.get_double("initial.alpha", 1.0);
    const VelocityField slice = VelocityField::gaussian(grid, center, alpha);

    SlabField f0 = [&] {
        if (sc.n_x == 1) return lift_homogeneous(slice);
        SlabField out(sc.n_x, sc.length, grid);
        const double x_width = cfg.get_double("initial.x_width", 0.0);
        for (int j = 0; j < sc.n_x; ++j) {
            const double x = out.dx() * j - sc.length / 2.0;
            const double profile =
                x_width > 0.0 ? std::exp(-x * x / (2.0 * x_width * x_width)) : 1.0;
            for (std::size_t v = 0; v < grid.size(); ++v)
                out.values()[out.index(j, v)] = profile * slice.values()[v];
        }
        return out;
    }();
    const double fraction = cfg.get_double("initial.fraction", 0.5);
    if (!(fraction > 0.0)) throw std::invalid_argument("solve: initial.fraction must be > 0");
    f0 *= fraction * sc.eta / smallness_norm(f0, sc.ell);
    return f0;
}

nlohmann::json report_stub(const Config& cfg, const SolveConfig& sc) {
    nlohmann::json report;
    report["version"] = kVersion;
    report["config_hash"] = cfg.hash_hex();
    report["gamma"] = sc.gamma;
    report["horizon"] = sc.horizon;
    report["dt"] = sc.dt;
    return report;
}

}  // namespace

/// solve-gain: gain-only Picard sweeps; writes the trajectory container, the
/// per-sweep contraction CSV, and a JSON report with the scattering
/// residuals and mass history.
int run_solve_gain(const GlobalOptions& opt, const std::string& init_path) {
    const Config cfg = load_config(opt);
    cfg.validate_keys(kSolveSchema);
    const SolveConfig sc = solve_config_from(cfg, opt.threads);
    const SlabField f0 = initial_datum(cfg, sc, init_path);

    const GainOnlyResult result = gain_only_solve(f0, sc);
    const ScatteringReport scattering = scattering_probe(result.trajectory, sc);

    const std::string traj_path =
        opt.out_path(cfg.get_string("output.trajectory", "trajectory.fld"));
    write_trajectory(traj_path, result.trajectory, 0.0, sc.dt);

    const std::string csv_path = opt.out_path(cfg.get_string("output.csv", "iterations.csv"));
    CsvWriter csv(csv_path, std::vector<std::string>{"sweep", "diff"});
    for (std::size_t i = 0; i < result.diff_history.size(); ++i)
        csv.row(std::vector<double>{static_cast<double>(i + 1), result.diff_history[i]});
    csv.finish(base_metadata(cfg));

    nlohmann::json report = report_stub(cfg, sc);
    report["sweeps"] = result.iterations;
    report["times"] = scattering.times;
    report["residuals"] = scattering.residuals;
    report["residual_decreasing"] = scattering.decreasing;
    report["residual_half_over_start"] = scattering.half_over_start;
    report["mass_history"] = mass_history(result.trajectory);
    const std::string json_path = opt.out_path(cfg.get_string("output.json", "report.json"));
    std::ofstream out(json_path);
    out << report.dump(2) << "\n";

    std::cout << "converged in " << result.iterations << " sweeps; residual(T/2)/residual(0) = "
              << format_double(scattering.half_over_start) << "; wrote " << traj_path << ", "
              << csv_path << ", " << json_path << "\n";
    return 0;
}

/// solve-ks: monotone bracket iteration; writes the bracket-midpoint
/// trajectory, the per-iteration CSV (ordering defects, gap, contraction
/// ratio), and a JSON report with the gap history and mass history.
int run_solve_ks(const GlobalOptions& opt, const std::string& init_path) {
    const Config cfg = load_config(opt);
    cfg.validate_keys(kSolveSchema);
    const SolveConfig sc = solve_config_from(cfg, opt.threads);
    const SlabField f0 = initial_datum(cfg, sc, init_path);

    const KsResult result = ks_iterate(f0, sc);

    const std::string traj_path =
        opt.out_path(cfg.get_string("output.trajectory", "trajectory.fld"));
    write_trajectory(traj_path, result.limit, 0.0, sc.dt);

    const std::string csv_path = opt.out_path(cfg.get_string("output.csv", "iterations.csv"));
    CsvWriter csv(csv_path, std::vector<std::string>{"n", "defect_g", "defect_h", "defect_gh",
                                                     "gap", "ratio"});
    for (const IterationState& st : result.history)
        csv.row(std::vector<double>{static_cast<double>(st.n), st.defect_g, st.defect_h,
                                    st.defect_gh, st.gap, st.ratio});
    csv.finish(base_metadata(cfg));

    nlohmann::json report = report_stub(cfg, sc);
    report["iterations"] = result.iterations;
    report["final_gap"] = result.final_gap;
    report["times"] = result.times;
    report["mass_history"] = mass_history(result.limit);
    const std::string json_path = opt.out_path(cfg.get_string("output.json", "report.json"));
    std::ofstream out(json_path);
    out << report.dump(2) << "\n";

    std::cout << "bracket closed to gap " << format_double(result.final_gap) << " in "
              << result.iterations << " iterations; wrote " << traj_path << ", " << csv_path
              << ", " << json_path << "\n";
    return 0;
}

}  // namespace boltzkit::cli
