#include "boltzkit/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "boltzkit/parallel.hpp"

namespace boltzkit {

VelocityField::VelocityField(const VelocityGrid& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid.size())
        throw std::invalid_argument("VelocityField: value count does not match grid");
}

double VelocityField::mass() const {
    return grid_.cell_volume() * pairwise_sum(values_);
}

double VelocityField::sup_norm() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

bool VelocityField::non_negative() const {
    for (double v : values_)
        if (v < 0.0) return false;
    return true;
}

bool VelocityField::finite() const {
    for (double v : values_)
        if (!std::isfinite(v)) return false;
    return true;
}

void VelocityField::check_same_grid(const VelocityField& o) const {
    if (grid_ != o.grid_)
        throw std::invalid_argument("VelocityField: grids do not match");
}

VelocityField& VelocityField::operator+=(const VelocityField& o) {
    check_same_grid(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

VelocityField& VelocityField::operator-=(const VelocityField& o) {
    check_same_grid(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

VelocityField& VelocityField::operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
}

VelocityField& VelocityField::multiply_pointwise(const VelocityField& o) {
    check_same_grid(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= o.values_[i];
    return *this;
}

VelocityField VelocityField::gaussian(const VelocityGrid& grid, const Vec3& center,
                                      double alpha, double amplitude) {
    VelocityField f(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Vec3 d = grid.node(i) - center;
        f[i] = amplitude * std::exp(-alpha * d.norm2());
    }
    return f;
}

double SlabField::mass() const {
    return dx() * vgrid_.cell_volume() * pairwise_sum(values_);
}

double SlabField::sup_norm() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

bool SlabField::non_negative() const {
    for (double v : values_)
        if (v < 0.0) return false;
    return true;
}

void SlabField::check_same_shape(const SlabField& o) const {
    if (n_x_ != o.n_x_ || length_ != o.length_ || vgrid_ != o.vgrid_)
        throw std::invalid_argument("SlabField: shapes do not match");
}

SlabField& SlabField::operator+=(const SlabField& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

SlabField& SlabField::operator-=(const SlabField& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

SlabField& SlabField::operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
}

}  // namespace boltzkit
