#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace dfbvp {

/// Dense row-major matrix. Everything in this project is at most
/// (b+4) x (b+4), so no blocking or sparsity is attempted.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
std::vector<double> matvec(const Matrix& a, const std::vector<double>& x);

/// Solves a x = rhs by Gaussian elimination with partial pivoting.
/// Throws std::runtime_error on a (numerically) singular system.
std::vector<double> solve_dense(Matrix a, std::vector<double> rhs);

/// Full complex spectrum of a square real matrix, sorted by (real, imag).
std::vector<std::complex<double>> eigenvalues(const Matrix& a);

}  // namespace dfbvp
