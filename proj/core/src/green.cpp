#include "dfbvp/green.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dfbvp/specfun.hpp"

namespace dfbvp {

namespace {

void require_b(int b) {
    if (b < 2) {
        throw std::domain_error("b must be >= 2");
    }
}

double kernel(double alpha, int b, int k, int s) {
    const double t = alpha - 1.0 + static_cast<double>(k);
    const double regular = falling_power(t, alpha - 1.0) *
                           falling_power(alpha + b - s, alpha - 1.0) /
                           falling_power(alpha + b + 1.0, alpha - 1.0);
    double g = regular;
    if (s <= k - 1) {
        g -= falling_power(t - s - 1.0, alpha - 1.0);
    }
    return g / std::exp(ln_gamma(alpha));
}

}  // namespace

FracOrder::FracOrder(double value) : value_(value) {
    if (!(value > 1.0) || !(value <= 2.0)) {
        throw std::domain_error("alpha must be in (1,2]");
    }
}

ConeWindow cone_window(FracOrder alpha, int b) {
    require_b(b);
    const double a = alpha.value();
    ConeWindow w;
    w.lower = (b + a) / 4.0;
    w.upper = 3.0 * (b + a) / 4.0;
    w.row_offset = a - 1.0;
    w.b = b;
    const int k_lo = static_cast<int>(std::ceil(w.lower - w.row_offset - 1e-9));
    const int k_hi = static_cast<int>(std::floor(w.upper - w.row_offset + 1e-9));
    for (int k = std::max(k_lo, 0); k <= std::min(k_hi, b + 1); ++k) {
        w.grid_indices.push_back(k);
    }
    if (w.grid_indices.empty()) {
        throw std::runtime_error("cone window contains no grid point");
    }
    return w;
}

double green_value_extended(FracOrder alpha, int b, int k, int s) {
    require_b(b);
    if (k < -1 || k > b + 2 || s < 0 || s > b + 1) {
        throw std::out_of_range("green_value: index out of range");
    }
    return kernel(alpha.value(), b, k, s);
}

double green_value(FracOrder alpha, int b, int k, int s) {
    require_b(b);
    if (k < 0 || k > b + 1 || s < 0 || s > b + 1) {
        throw std::out_of_range("green_value: index out of range");
    }
    return kernel(alpha.value(), b, k, s);
}

GreenTable::GreenTable(FracOrder alpha, int b, std::vector<double> values)
    : alpha_(alpha), b_(b), values_(std::move(values)) {
    require_b(b_);
    const std::size_t n = dim();
    if (values_.size() != n * n) {
        throw std::length_error("GreenTable: wrong table size");
    }
    // Structural checks; a failure here is a library bug, not bad input.
    for (std::size_t s = 0; s < n; ++s) {
        const double diag = values_[s * n + s];
        for (std::size_t k = 0; k < n; ++k) {
            const double v = values_[k * n + s];
            if (!(v > 0.0)) {
                throw std::logic_error("GreenTable: nonpositive entry at row " +
                                       std::to_string(k) + ", column " + std::to_string(s));
            }
            if (v > diag) {
                throw std::logic_error("GreenTable: column " + std::to_string(s) +
                                       " does not peak on the diagonal");
            }
        }
        if (s >= 1 && diag > max_value_) {
            max_value_ = diag;
            argmax_s_ = static_cast<int>(s);
        }
    }
}

double GreenTable::value(int k, int s) const {
    if (k < 0 || k > b_ + 1 || s < 0 || s > b_ + 1) {
        throw std::out_of_range("GreenTable::value: index out of range");
    }
    const std::size_t n = dim();
    return values_[static_cast<std::size_t>(k) * n + static_cast<std::size_t>(s)];
}

GreenTable green_table(FracOrder alpha, int b) {
    require_b(b);
    const std::size_t n = static_cast<std::size_t>(b) + 2;
    std::vector<double> values(n * n);
    for (int k = 0; k <= b + 1; ++k) {
        for (int s = 0; s <= b + 1; ++s) {
            values[static_cast<std::size_t>(k) * n + static_cast<std::size_t>(s)] =
                kernel(alpha.value(), b, k, s);
        }
    }
    return GreenTable(alpha, b, std::move(values));
}

double green_max_closed_form(FracOrder alpha, int b) {
    require_b(b);
    const double a = alpha.value();
    const double bd = static_cast<double>(b);
    if (b % 2 == 0) {
        const double lg = 2.0 * ln_gamma(bd / 2.0 + a) + ln_gamma(bd + 3.0) -
                          ln_gamma(a) - ln_gamma(bd + a + 2.0) -
                          2.0 * ln_gamma(bd / 2.0 + 2.0);
        return 0.25 * (bd + 2.0 * a) * (bd + 2.0) * std::exp(lg);
    }
    const double lg = ln_gamma(bd + 3.0) + 2.0 * ln_gamma((bd + 1.0) / 2.0 + a) -
                      ln_gamma(a) - ln_gamma(bd + a + 2.0) -
                      2.0 * ln_gamma((bd + 3.0) / 2.0);
    return std::exp(lg);
}

double lambda_constant(FracOrder alpha, int b) {
    require_b(b);
    const ConeWindow w = cone_window(alpha, b);
    const GreenTable g = green_table(alpha, b);
    double lambda = 1.0;
    for (int s = 1; s <= b + 1; ++s) {
        double window_min = g.value(w.grid_indices.front(), s);
        for (int k : w.grid_indices) {
            window_min = std::min(window_min, g.value(k, s));
        }
        lambda = std::min(lambda, window_min / g.value(s, s));
    }
    if (!(lambda > 0.0) || !(lambda < 1.0)) {
        throw std::logic_error("lambda_constant: value outside (0,1)");
    }
    return lambda;
}

}  // namespace dfbvp
