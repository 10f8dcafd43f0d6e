#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boltzkit/monotone_solver.hpp"
#include "boltzkit/oscillatory_symbol.hpp"
#include "boltzkit/rational.hpp"
#include "tool_common.hpp"

namespace boltzkit::cli {

int run_exponents_check(const Rational& gamma, const std::string& inv_r_text,
                        const std::string& inv_p_text, const std::string& inv_q_text);
int run_exponents_enumerate(const GlobalOptions& opt, const Rational& gamma, int max_den);
int run_collide(const GlobalOptions& opt, const std::string& f_path, const std::string& g_path);
int run_norms(const GlobalOptions& opt, const std::string& field_path, double ell,
              std::vector<double> exponents);
int run_hls_sweep(const GlobalOptions& opt);
int run_symbol_eval(const GlobalOptions& opt, double s, double theta0, double gamma);
int run_symbol_ray(const GlobalOptions& opt, double theta0, double gamma, double s_lo,
                   double s_hi, int count);
int run_symbol_region(const GlobalOptions& opt, double s, double theta0, double gamma, int z);
int run_symbol_partition(const GlobalOptions& opt, int max_level, int n_thetas, int n_radii);
int run_solve_gain(const GlobalOptions& opt, const std::string& init_path);
int run_solve_ks(const GlobalOptions& opt, const std::string& init_path);

}  // namespace boltzkit::cli

int main(int argc, char** argv) {
    using namespace boltzkit;
    using namespace boltzkit::cli;

    CLI::App app{"boltzkit: cutoff Boltzmann collision operator toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opt;
    app.add_option("--config", opt.config_path, "key-value configuration file");
    app.add_option("--out", opt.out_flag,
                   "output directory (default: $BOLTZKIT_OUT, else the working directory)");
    app.add_option("--threads", opt.threads, "worker thread cap (0 = all hardware threads)");
    auto* seed_flag = app.add_option("--seed", opt.seed, "seed for synthesized mixtures");

    int rc = 0;

    // exponents
    std::string gamma_text = "1", check_r, check_p, check_q;
    int max_den = 72;
    auto* exponents = app.add_subcommand(
        "exponents", "exact-rational admissibility checks and window enumeration");
    exponents->add_option("--gamma", gamma_text, "kernel exponent as a rational")->required();
    exponents->add_option("--check-r", check_r,
                          "check mode: reciprocal 1/r to test (omit to enumerate)");
    exponents->add_option("--check-p", check_p, "check mode: reciprocal 1/p (default balanced)");
    exponents->add_option("--check-q", check_q, "check mode: reciprocal 1/q (default balanced)");
    exponents->add_option("--max-den", max_den, "enumerate mode: denominator bound");
    exponents->callback([&] {
        const Rational gamma = Rational::parse(gamma_text);
        rc = check_r.empty() ? run_exponents_enumerate(opt, gamma, max_den)
                             : run_exponents_check(gamma, check_r, check_p, check_q);
    });

    // collide
    std::string f_path, g_path;
    auto* collide = app.add_subcommand(
        "collide", "apply the collision operator to a pair of velocity fields");
    collide->add_option("--f", f_path, "first input field file (else family.f from config)");
    collide->add_option("--g", g_path, "second input field file (else family.g from config)");
    collide->callback([&] {
        opt.seed_set = seed_flag->count() > 0;
        rc = run_collide(opt, f_path, g_path);
    });

    // norms
    std::string field_path;
    double ell = 0.0;
    std::vector<double> norm_exponents;
    auto* norms = app.add_subcommand("norms", "norm table of a field file");
    norms->add_option("--field", field_path, "input field file")->required();
    norms->add_option("--ell", ell, "bracket weight exponent");
    norms->add_option("--p", norm_exponents, "Lebesgue exponents (default 1 2 3 inf)");
    norms->callback([&] { rc = run_norms(opt, field_path, ell, norm_exponents); });

    // hls-sweep
    auto* sweep = app.add_subcommand("hls-sweep", "dilation sweep of the gain-estimate ratio");
    sweep->callback([&] {
        opt.seed_set = seed_flag->count() > 0;
        rc = run_hls_sweep(opt);
    });

    // symbol
    auto* symbol = app.add_subcommand("symbol", "oscillatory symbol evaluation and asymptotics");
    symbol->require_subcommand(1);
    double s = 100.0, theta0 = M_PI / 2.0, sym_gamma = 1.0, s_lo = 1e2, s_hi = 1e4;
    int ray_count = 5, cone_z = -1, max_level = 8, n_thetas = 256, n_radii = 128;

    auto* eval = symbol->add_subcommand("eval", "one symbol value by converged quadrature");
    eval->add_option("--s", s, "radial invariant |x||xi|")->required();
    eval->add_option("--theta0", theta0, "angle between x and xi")->required();
    eval->add_option("--gamma", sym_gamma, "kernel exponent");
    eval->callback([&] { rc = run_symbol_eval(opt, s, theta0, sym_gamma); });

    auto* ray = symbol->add_subcommand("ray", "residual decay along a fixed-angle ray");
    ray->add_option("--theta0", theta0, "angle between x and xi")->required();
    ray->add_option("--gamma", sym_gamma, "kernel exponent");
    ray->add_option("--s-lo", s_lo, "smallest s");
    ray->add_option("--s-hi", s_hi, "largest s");
    ray->add_option("--count", ray_count, "number of log-spaced samples");
    ray->callback([&] { rc = run_symbol_ray(opt, theta0, sym_gamma, s_lo, s_hi, ray_count); });

    auto* region = symbol->add_subcommand("region", "classify a phase point and measure region II");
    region->add_option("--s", s, "radial invariant |x||xi|")->required();
    region->add_option("--theta0", theta0, "angle between x and xi")->required();
    region->add_option("--gamma", sym_gamma, "kernel exponent");
    region->add_option("--z", cone_z, "dyadic cone level (default: tightest cone for theta0)");
    region->callback([&] {
        const int z = cone_z >= 0 ? cone_z : best_cone_level(theta0);
        rc = run_symbol_region(opt, s, theta0, sym_gamma, z);
    });

    auto* partition = symbol->add_subcommand("partition", "audit the partitions of unity");
    partition->add_option("--max-level", max_level, "angular truncation level");
    partition->add_option("--thetas", n_thetas, "angular sample count");
    partition->add_option("--radii", n_radii, "radial sample count");
    partition->callback([&] { rc = run_symbol_partition(opt, max_level, n_thetas, n_radii); });

    // solve-gain / solve-ks
    std::string init_path;
    auto* solve_gain = app.add_subcommand("solve-gain", "gain-only Picard mild solve");
    solve_gain->add_option("--init", init_path, "initial field file (else initial.* from config)");
    solve_gain->callback([&] { rc = run_solve_gain(opt, init_path); });

    auto* solve_ks = app.add_subcommand("solve-ks", "monotone bracket mild solve");
    solve_ks->add_option("--init", init_path, "initial field file (else initial.* from config)");
    solve_ks->callback([&] { rc = run_solve_ks(opt, init_path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const MonotonicityError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const DivergenceError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const ConvergenceError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
