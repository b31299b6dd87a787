#pragma once

// Discrete fractional operators on shifted integer grids.
//
// The fractional sum of order nu > 0 maps a function on N_a to one on
// N_{a+nu}:
//
//     (sum_nu f)(a+nu+m) = 1/Gamma(nu) * sum_{k=0}^{m} (nu+m-k-1)^[nu-1] f(a+k)
//
// and the fractional difference of order alpha in (0,2] is the n-th forward
// difference of the (n-alpha)-order sum, n = ceil(alpha). The order-0 sum is
// the identity, so integer alpha degenerates to the plain n-th difference.
// Both operators are finite weighted sums with precomputable weights and are
// also exposed as explicit lower-triangular coefficient matrices.

#include "dfbvp/grid.hpp"
#include "dfbvp/linalg.hpp"

namespace dfbvp {

/// n-th forward difference. Keeps the grid offset, loses n points.
GridFunction forward_diff(const GridFunction& f, int n);

/// Fractional sum of order nu > 0 (order 0 is the identity).
GridFunction frac_sum(const GridFunction& f, double nu);

/// Fractional difference of order alpha in (0,2].
GridFunction frac_diff(const GridFunction& f, double alpha);

/// Convolution weights w_j = (nu+j-1)^[nu-1] / Gamma(nu), j = 0..count-1.
/// w_0 = 1 and every weight is positive for nu > 0.
std::vector<double> frac_sum_weights(double nu, std::size_t count);

/// (length-n) x length band matrix of the n-th forward difference.
Matrix forward_diff_matrix(int n, std::size_t length);

/// length x length lower-triangular Toeplitz matrix of the order-nu sum.
Matrix frac_sum_matrix(double nu, std::size_t length);

/// (length-n) x length matrix of the order-alpha difference,
/// forward_diff_matrix(n) * frac_sum_matrix(n-alpha).
Matrix frac_diff_matrix(double alpha, std::size_t length);

}  // namespace dfbvp
