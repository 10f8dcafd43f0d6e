#include <cmath>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "boltzkit/field_io.hpp"
#include "boltzkit/norms.hpp"
#include "tool_common.hpp"

namespace boltzkit::cli {

/// Prints and writes the standard norm table of a field file: mass, sup, and
/// weighted L^p columns at the given bracket weight. Slab containers use the
/// mixed space-velocity norm with the same exponent in x and v.
int run_norms(const GlobalOptions& opt, const std::string& field_path, double ell,
              std::vector<double> exponents) {
    if (exponents.empty()) exponents = {1.0, 2.0, 3.0, std::numeric_limits<double>::infinity()};

    const LoadedTrajectory loaded = read_trajectory(field_path);
    if (loaded.fields.size() != 1)
        throw std::invalid_argument("norms: " + field_path + " holds " +
                                    std::to_string(loaded.fields.size()) +
                                    " time slices, expected a single field");
    const SlabField& f = loaded.fields.front();
    const bool homogeneous = loaded.header.d_x == 0;

    std::vector<std::string> columns{"mass", "sup"};
    std::vector<double> row{f.mass(), f.sup_norm()};
    for (double p : exponents) {
        const std::string tag = std::isinf(p) ? "inf" : format_double(p);
        columns.push_back(homogeneous ? "L" + tag : "LxLv" + tag);
        row.push_back(norm_xv(f, p, p, ell));
    }

    Config stamp;
    stamp.set("norms.ell", format_double(ell));
    const std::string csv_path = opt.out_path("norms.csv");
    CsvWriter csv(csv_path, columns);
    csv.row(row);
    auto metadata = base_metadata(stamp);
    metadata["field"] = field_path;
    csv.finish(metadata);

    for (std::size_t i = 0; i < columns.size(); ++i)
        std::cout << columns[i] << " = " << format_double(row[i]) << "\n";
    std::cout << "wrote " << csv_path << "\n";
    return 0;
}

}  // namespace boltzkit::cli
