#include "dfbvp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

namespace dfbvp {

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: dimension mismatch");
    }
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

std::vector<double> matvec(const Matrix& a, const std::vector<double>& x) {
    if (a.cols() != x.size()) {
        throw std::invalid_argument("matvec: dimension mismatch");
    }
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            acc += a(i, j) * x[j];
        }
        y[i] = acc;
    }
    return y;
}

std::vector<double> solve_dense(Matrix a, std::vector<double> rhs) {
    const std::size_t n = a.rows();
    if (a.cols() != n || rhs.size() != n) {
        throw std::invalid_argument("solve_dense: system must be square");
    }
    for (std::size_t col = 0; col < n; ++col) {
        // partial pivoting
        std::size_t pivot = col;
        double best = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(a(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best == 0.0) {
            throw std::runtime_error("solve_dense: singular system");
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(col, j), a(pivot, j));
            }
            std::swap(rhs[col], rhs[pivot]);
        }
        const double inv = 1.0 / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a(r, col) * inv;
            if (factor == 0.0) continue;
            a(r, col) = 0.0;
            for (std::size_t j = col + 1; j < n; ++j) {
                a(r, j) -= factor * a(col, j);
            }
            rhs[r] -= factor * rhs[col];
        }
    }
    // back substitution
    std::vector<double> x(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double acc = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            acc -= a(i, j) * x[j];
        }
        x[i] = acc / a(i, i);
    }
    return x;
}

std::vector<std::complex<double>> eigenvalues(const Matrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) {
        throw std::invalid_argument("eigenvalues: matrix must be square");
    }
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
        }
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigenvalues: dense eigensolver did not converge");
    }
    std::vector<std::complex<double>> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return out;
}

}  // namespace dfbvp
