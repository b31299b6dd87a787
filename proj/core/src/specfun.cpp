#include "dfbvp/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace dfbvp {

namespace {
constexpr double kPoleTol = 1e-12;
}

double ln_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("ln_gamma: argument must be positive");
    }
    return std::lgamma(x);
}

double falling_power(double x, double y) {
    if (!(x + 1.0 > 0.0)) {
        throw std::domain_error("falling_power: x+1 must be positive");
    }
    const double d = x - y + 1.0;
    const double nearest = std::round(d);
    if (std::abs(d - nearest) < kPoleTol && nearest <= 0.0) {
        return 0.0;  // denominator pole, finite numerator
    }
    if (d > 0.0) {
        return std::exp(ln_gamma(x + 1.0) - ln_gamma(d));
    }
    // Negative non-integer d: std::lgamma returns log|Gamma(d)|; Gamma
    // alternates sign on the intervals (-k-1, -k).
    const int k = static_cast<int>(std::floor(-d));
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;
    return sign * std::exp(ln_gamma(x + 1.0) - std::lgamma(d));
}

}  // namespace dfbvp
