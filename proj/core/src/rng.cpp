#include "boltzkit/rng.hpp"

#include <cmath>
#include <numbers>

namespace boltzkit {

double Rng::normal() {
    // Box-Muller on two fresh uniforms; u is kept away from 0.
    const double u = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    const double v = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

}  // namespace boltzkit
