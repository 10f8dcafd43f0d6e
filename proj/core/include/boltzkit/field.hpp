#pragma once

#include <vector>

#include "boltzkit/velocity_grid.hpp"

namespace boltzkit {

/// Scalar samples on a VelocityGrid (a distribution function of v only).
class VelocityField {
  public:
    explicit VelocityField(const VelocityGrid& grid)
        : grid_(grid), values_(grid.size(), 0.0) {}
    VelocityField(const VelocityGrid& grid, std::vector<double> values);

    const VelocityGrid& grid() const { return grid_; }
    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }
    double& operator[](std::size_t i) { return values_[i]; }
    double operator[](std::size_t i) const { return values_[i]; }
    std::size_t size() const { return values_.size(); }

    /// Discrete mass: h^3 * sum of samples (pairwise reduction).
    double mass() const;
    double sup_norm() const;
    bool non_negative() const;
    bool finite() const;

    VelocityField& operator+=(const VelocityField& o);
    VelocityField& operator-=(const VelocityField& o);
    VelocityField& operator*=(double s);
    /// Pointwise product, as in the loss term f * L(g).
    VelocityField& multiply_pointwise(const VelocityField& o);

    /// Samples amplitude * exp(-alpha |v - center|^2) on the grid.
    static VelocityField gaussian(const VelocityGrid& grid, const Vec3& center,
                                  double alpha = 1.0, double amplitude = 1.0);

    void check_same_grid(const VelocityField& o) const;

  private:
    VelocityGrid grid_;
    std::vector<double> values_;
};

/// Distribution on a 1-d periodic slab in x times a velocity box:
/// f(x_j, v) with x_j = j * L / n_x, j = 0..n_x-1, on [0, L).
class SlabField {
  public:
    SlabField(int n_x, double length, const VelocityGrid& vgrid)
        : n_x_(n_x), length_(length), vgrid_(vgrid),
          values_(static_cast<std::size_t>(n_x) * vgrid.size(), 0.0) {
        if (n_x < 1) throw std::invalid_argument("SlabField: need n_x >= 1");
        if (!(length > 0.0)) throw std::invalid_argument("SlabField: length must be positive");
    }

    int n_x() const { return n_x_; }
    double length() const { return length_; }
    double dx() const { return length_ / n_x_; }
    const VelocityGrid& vgrid() const { return vgrid_; }
    std::size_t size() const { return values_.size(); }
    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }

    double x_coord(int j) const { return dx() * j; }
    std::size_t index(int j, std::size_t v_flat) const {
        return static_cast<std::size_t>(j) * vgrid_.size() + v_flat;
    }
    /// The velocity slice at spatial cell j (pointer into the flat storage).
    double* slice(int j) { return values_.data() + index(j, 0); }
    const double* slice(int j) const { return values_.data() + index(j, 0); }

    /// Discrete mass: dx * h^3 * sum (pairwise).
    double mass() const;
    double sup_norm() const;
    bool non_negative() const;

    SlabField& operator+=(const SlabField& o);
    SlabField& operator-=(const SlabField& o);
    SlabField& operator*=(double s);

    void check_same_shape(const SlabField& o) const;

  private:
    int n_x_;
    double length_;
    VelocityGrid vgrid_;
    std::vector<double> values_;
};

}  // namespace boltzkit
