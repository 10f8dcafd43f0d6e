#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "boltzkit/exponents.hpp"
#include "boltzkit/field_io.hpp"
#include "tool_common.hpp"

namespace boltzkit::cli {

namespace {

std::string kt_label(const KtVerdict& v) {
    if (!v.admissible) return "rejected";
    return v.endpoint ? "endpoint" : "admissible";
}

}  // namespace

/// check mode: prints one verdict row for the given reciprocals; exit 0
/// whether or not the exponents are admissible (only malformed input fails).
int run_exponents_check(const Rational& gamma, const std::string& inv_r_text,
                        const std::string& inv_p_text, const std::string& inv_q_text) {
    const Rational inv_r = Rational::parse(inv_r_text);
    // Unless both sides are pinned, split the scaling balance evenly.
    const Rational balanced = (Rational(1) + inv_r + gamma / Rational(3)) / Rational(2);
    const Rational inv_p = inv_p_text.empty() ? balanced : Rational::parse(inv_p_text);
    const Rational inv_q = inv_q_text.empty() ? balanced : Rational::parse(inv_q_text);

    const HlsCheck check = check_hls_scaling({inv_p, inv_q, inv_r, gamma});
    std::string verdict;
    switch (check.verdict) {
        case HlsVerdict::admissible: verdict = "admissible"; break;
        case HlsVerdict::violates_scaling: verdict = "violates-scaling"; break;
        case HlsVerdict::violates_r_range: verdict = "violates-r-range"; break;
    }
    std::cout << "gamma=" << gamma.str() << " 1/p=" << inv_p.str() << " 1/q=" << inv_q.str()
              << " 1/r=" << inv_r.str() << " verdict=" << verdict
              << " scaling_defect=" << check.scaling_defect.str() << "\n";
    return 0;
}

/// enumerate mode: sweeps the eps window at denominators <= max_den and
/// writes one CSV row per eps with both solvable triplets, their harmonic
/// means, and the kinetic-transport verdicts.
int run_exponents_enumerate(const GlobalOptions& opt, const Rational& gamma, int max_den) {
    const EpsilonWindow window = epsilon_window(gamma);
    std::vector<Rational> eps_values;
    for (int den = 1; den <= max_den; ++den) {
        for (int num = 1; num < den; ++num) {
            const Rational eps(num, den);
            if (eps.den() != den) continue;  // only reduced fractions, once each
            // Non-strict lower when the bound is positive, so the gamma
            // values whose window closes to a point still emit that point.
            if (window.contains(eps, /*strict_lower=*/window.lower == Rational(0)))
                eps_values.push_back(eps);
        }
    }
    std::sort(eps_values.begin(), eps_values.end());

    Config stamp;
    stamp.set("exponents.gamma", gamma.str());
    stamp.set("exponents.max_den", std::to_string(max_den));

    const std::string path = opt.out_path("exponents.csv");
    const std::vector<std::string> columns{
        "gamma",      "eps",        "inv_q",      "inv_r",     "inv_p",   "inv_a",
        "inv_q_dual", "inv_r_dual", "inv_p_dual", "inv_a_dual", "kt_primal", "kt_dual"};
    CsvWriter csv(path, columns);
    for (const Rational& eps : eps_values) {
        const SolvableTriplets t = solvable_triplets(eps);
        const KtVerdict primal = check_kt_admissible(t.primal, 3);
        const KtVerdict dual = check_kt_admissible(t.dual_primed, 3);
        csv.raw_row(gamma.str() + "," + eps.str() + "," + t.primal.inv_q.str() + "," +
                    t.primal.inv_r.str() + "," + t.primal.inv_p.str() + "," +
                    primal.inv_a.str() + "," + t.dual_primed.inv_q.str() + "," +
                    t.dual_primed.inv_r.str() + "," + t.dual_primed.inv_p.str() + "," +
                    dual.inv_a.str() + "," + kt_label(primal) + "," + kt_label(dual));
    }
    auto metadata = base_metadata(stamp);
    metadata["window_lower"] = window.lower.str();
    metadata["window_upper"] = window.upper.str();
    metadata["window_strict_reading"] = window.empty_strict ? "empty" : "nonempty";
    csv.finish(metadata);

    std::cout << "wrote " << eps_values.size() << " rows to " << path << "\n";
    return 0;
}

}  // namespace boltzkit::cli
