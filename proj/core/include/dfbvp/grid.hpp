#pragma once

#include <cstddef>
#include <vector>

namespace dfbvp {

/// The shifted integer grid {a, a+1, a+2, ...} truncated to a finite number
/// of points. Points are derived from (offset, index); no per-point reals
/// are stored, so repeated shifting cannot accumulate rounding.
struct ShiftedGrid {
    double offset;
    std::size_t length;

    ShiftedGrid(double offset_, std::size_t length_);

    double point(std::size_t k) const { return offset + static_cast<double>(k); }
    bool operator==(const ShiftedGrid&) const = default;
};

/// One real value per point of a ShiftedGrid. Universal carrier for grid
/// functions: solutions, loads, operator outputs.
class GridFunction {
public:
    GridFunction(ShiftedGrid grid, std::vector<double> values);
    static GridFunction zeros(ShiftedGrid grid);

    const ShiftedGrid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }

    double operator[](std::size_t k) const { return values_[k]; }
    double& operator[](std::size_t k) { return values_[k]; }

    const std::vector<double>& values() const { return values_; }
    double sup_norm() const;

private:
    ShiftedGrid grid_;
    std::vector<double> values_;
};

}  // namespace dfbvp
