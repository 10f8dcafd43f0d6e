#pragma once

#include <cstddef>
#include <stdexcept>

#include "boltzkit/vec3.hpp"

namespace boltzkit {

/// Uniform cubic velocity lattice.
///
/// Nodes are the vertices v_i = -R + i*h per axis with h = 2R/n and
/// i = 0..n-1, covering [-R, R)^3. For even n the origin is a node. Flat
/// indexing is row-major: idx = (i*n + j)*n + k.
class VelocityGrid {
  public:
    VelocityGrid(int n, double extent)
        : n_(n), extent_(extent), h_(2.0 * extent / n) {
        if (n < 8 || n % 2 != 0)
            throw std::invalid_argument("VelocityGrid: need even n >= 8");
        if (!(extent > 0.0)) throw std::invalid_argument("VelocityGrid: extent must be positive");
    }

    int n() const { return n_; }
    double extent() const { return extent_; }
    double h() const { return h_; }
    double cell_volume() const { return h_ * h_ * h_; }
    std::size_t size() const {
        return static_cast<std::size_t>(n_) * n_ * n_;
    }

    double coord(int i) const { return -extent_ + h_ * i; }

    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
    }

    Vec3 node(int i, int j, int k) const { return {coord(i), coord(j), coord(k)}; }

    Vec3 node(std::size_t flat) const {
        const int k = static_cast<int>(flat % n_);
        const int j = static_cast<int>((flat / n_) % n_);
        const int i = static_cast<int>(flat / (static_cast<std::size_t>(n_) * n_));
        return node(i, j, k);
    }

    bool operator==(const VelocityGrid& o) const {
        return n_ == o.n_ && extent_ == o.extent_;
    }
    bool operator!=(const VelocityGrid& o) const { return !(*this == o); }

  private:
    int n_;
    double extent_;
    double h_;
};

}  // namespace boltzkit
