#pragma once

#include <cmath>
#include <random>
#include <vector>

namespace testsupport {

inline bool close_rel(double a, double b, double tol) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return true;
    return std::abs(a - b) <= tol * scale;
}

inline bool close_abs(double a, double b, double tol) {
    return std::abs(a - b) <= tol;
}

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n,
                                         double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
}

}  // namespace testsupport
