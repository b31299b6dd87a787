#include "dfbvp/fracops.hpp"

#include <cmath>
#include <stdexcept>

#include "dfbvp/specfun.hpp"

namespace dfbvp {

namespace {

int ceil_order(double alpha) {
    if (!(alpha > 0.0) || alpha > 2.0) {
        throw std::domain_error("frac_diff: order must lie in (0, 2]");
    }
    return alpha > 1.0 ? 2 : 1;
}

long long binomial(int n, int j) {
    long long c = 1;
    for (int i = 0; i < j; ++i) {
        c = c * (n - i) / (i + 1);
    }
    return c;
}

}  // namespace

GridFunction forward_diff(const GridFunction& f, int n) {
    if (n < 1) {
        throw std::domain_error("forward_diff: order must be a positive integer");
    }
    if (f.size() < static_cast<std::size_t>(n) + 1) {
        throw std::length_error("forward_diff: grid too short for requested order");
    }
    const std::size_t out_len = f.size() - static_cast<std::size_t>(n);
    GridFunction g = GridFunction::zeros(ShiftedGrid(f.grid().offset, out_len));
    for (std::size_t i = 0; i < out_len; ++i) {
        double acc = 0.0;
        for (int j = 0; j <= n; ++j) {
            const double sign = ((n - j) % 2 == 0) ? 1.0 : -1.0;
            acc += sign * static_cast<double>(binomial(n, j)) * f[i + static_cast<std::size_t>(j)];
        }
        g[i] = acc;
    }
    return g;
}

std::vector<double> frac_sum_weights(double nu, std::size_t count) {
    if (!(nu > 0.0)) {
        throw std::domain_error("frac_sum: order must be positive");
    }
    std::vector<double> w(count);
    const double lg_nu = ln_gamma(nu);
    for (std::size_t j = 0; j < count; ++j) {
        // (nu+j-1)^[nu-1] / Gamma(nu) = Gamma(nu+j) / (Gamma(j+1) Gamma(nu))
        w[j] = std::exp(ln_gamma(nu + static_cast<double>(j)) -
                        ln_gamma(static_cast<double>(j) + 1.0) - lg_nu);
    }
    return w;
}

GridFunction frac_sum(const GridFunction& f, double nu) {
    if (!(nu > 0.0)) {
        throw std::domain_error("frac_sum: order must be positive");
    }
    const std::size_t len = f.size();
    const std::vector<double> w = frac_sum_weights(nu, len);
    GridFunction g = GridFunction::zeros(ShiftedGrid(f.grid().offset + nu, len));
    for (std::size_t m = 0; m < len; ++m) {
        double acc = 0.0;
        for (std::size_t k = 0; k <= m; ++k) {
            acc += w[m - k] * f[k];
        }
        g[m] = acc;
    }
    return g;
}

GridFunction frac_diff(const GridFunction& f, double alpha) {
    const int n = ceil_order(alpha);
    if (f.size() < static_cast<std::size_t>(n) + 1) {
        throw std::length_error("frac_diff: grid too short for requested order");
    }
    const double nu = static_cast<double>(n) - alpha;
    if (nu == 0.0) {
        return forward_diff(f, n);  // order-0 sum is the identity
    }
    return forward_diff(frac_sum(f, nu), n);
}

Matrix forward_diff_matrix(int n, std::size_t length) {
    if (n < 1) {
        throw std::domain_error("forward_diff_matrix: order must be positive");
    }
    if (length < static_cast<std::size_t>(n) + 1) {
        throw std::length_error("forward_diff_matrix: grid too short");
    }
    Matrix d(length - static_cast<std::size_t>(n), length);
    for (std::size_t i = 0; i < d.rows(); ++i) {
        for (int j = 0; j <= n; ++j) {
            const double sign = ((n - j) % 2 == 0) ? 1.0 : -1.0;
            d(i, i + static_cast<std::size_t>(j)) = sign * static_cast<double>(binomial(n, j));
        }
    }
    return d;
}

Matrix frac_sum_matrix(double nu, std::size_t length) {
    Matrix s(length, length);
    if (nu == 0.0) {
        for (std::size_t i = 0; i < length; ++i) s(i, i) = 1.0;
        return s;
    }
    const std::vector<double> w = frac_sum_weights(nu, length);
    for (std::size_t m = 0; m < length; ++m) {
        for (std::size_t k = 0; k <= m; ++k) {
            s(m, k) = w[m - k];
        }
    }
    return s;
}

Matrix frac_diff_matrix(double alpha, std::size_t length) {
    const int n = ceil_order(alpha);
    return matmul(forward_diff_matrix(n, length),
                  frac_sum_matrix(static_cast<double>(n) - alpha, length));
}

}  // namespace dfbvp
