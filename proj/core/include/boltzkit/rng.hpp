#pragma once

#include <cstdint>
#include <random>

#include "boltzkit/vec3.hpp"

namespace boltzkit {

/// Seeded random stream with portable output.
///
/// The raw stream is std::mt19937_64 (its sequence is pinned by the
/// standard); the uniform and normal transforms are written out here because
/// std::*_distribution output is implementation-defined, and result files
/// must be byte-identical across toolchains.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (polar-free form; no cached spare, so
    /// the draw count per call is fixed and the stream stays reproducible).
    double normal();

    Vec3 uniform3(double lo, double hi) {
        const double a = uniform(lo, hi), b = uniform(lo, hi), c = uniform(lo, hi);
        return {a, b, c};
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace boltzkit
