#pragma once

// Log-gamma machinery and the discrete power (falling factorial) function
//
//     x^[y] = Gamma(x+1) / Gamma(x-y+1)
//
// evaluated in the log domain so that ratios like Gamma(b+alpha+2)/Gamma(...)
// never overflow. A denominator pole (Gamma at a nonpositive integer) with a
// finite numerator yields exactly 0; this is what makes the kernel
// (t-s-1)^[alpha-1] vanish outside its support.

namespace dfbvp {

/// log Gamma(x) for x > 0. Throws std::domain_error for x <= 0.
double ln_gamma(double x);

/// Falling-factorial power x^[y]. Requires x+1 > 0 (throws std::domain_error
/// otherwise). Returns 0 when x-y+1 is a nonpositive integer within 1e-12.
double falling_power(double x, double y);

}  // namespace dfbvp
