#include "dfbvp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dfbvp {

ShiftedGrid::ShiftedGrid(double offset_, std::size_t length_)
    : offset(offset_), length(length_) {
    if (length == 0) {
        throw std::length_error("ShiftedGrid: length must be at least 1");
    }
    if (!std::isfinite(offset)) {
        throw std::domain_error("ShiftedGrid: offset must be finite");
    }
}

GridFunction::GridFunction(ShiftedGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.length) {
        throw std::length_error("GridFunction: values must match grid length");
    }
}

GridFunction GridFunction::zeros(ShiftedGrid grid) {
    return GridFunction(grid, std::vector<double>(grid.length, 0.0));
}

double GridFunction::sup_norm() const {
    double m = 0.0;
    for (double v : values_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

}  // namespace dfbvp
