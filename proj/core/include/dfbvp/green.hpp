#pragma once

// Green's function for the two-point discrete fractional boundary value
// problem of order alpha in (1,2] on the grid t = alpha-1+k, k = 0..b+1,
// with zero boundary values at t = alpha-2 and t = alpha+b+1:
//
//   G(t,s) = 1/Gamma(alpha) * [ t^[alpha-1] (alpha+b-s)^[alpha-1]
//                               / (alpha+b+1)^[alpha-1]
//                               - (t-s-1)^[alpha-1]   if s <= k-1 ]
//
// The subtracted term only appears for s <= k-1 (integer branch test; with
// t = alpha-1+k the condition s < t-alpha+1 is exactly s <= k-1). At s = k
// the subtracted term vanishes by the pole convention, so either branch
// assignment at the boundary agrees.

#include <cstddef>
#include <vector>

namespace dfbvp {

/// Fractional order restricted to (1, 2].
class FracOrder {
public:
    explicit FracOrder(double value);
    double value() const { return value_; }

private:
    double value_;
};

/// Rows of the central window [(b+alpha)/4, 3(b+alpha)/4] on the grid
/// t = alpha-1+k. The closed intersection (ceil left, floor right in index
/// space) is taken, which can only shrink the window and therefore keeps
/// every min-over-window inequality valid.
struct ConeWindow {
    double lower = 0.0;
    double upper = 0.0;
    double row_offset = 0.0;        ///< alpha-1; row k sits at row_offset+k
    int b = 0;
    std::vector<int> grid_indices;  ///< k with lower <= alpha-1+k <= upper
};

ConeWindow cone_window(FracOrder alpha, int b);

/// G(alpha-1+k, s) for k, s in 0..b+1. Throws std::out_of_range otherwise.
double green_value(FracOrder alpha, int b, int k, int s);

/// Same kernel with k allowed in -1..b+2; the two extra rows are the
/// boundary points where G vanishes.
double green_value_extended(FracOrder alpha, int b, int k, int s);

/// Dense (b+2) x (b+2) table of Green values. Construction checks the
/// structural facts the rest of the library relies on: every entry is
/// positive and each column peaks exactly on the diagonal row k = s.
class GreenTable {
public:
    GreenTable(FracOrder alpha, int b, std::vector<double> values);

    double alpha() const { return alpha_.value(); }
    FracOrder order() const { return alpha_; }
    int b() const { return b_; }
    std::size_t dim() const { return static_cast<std::size_t>(b_) + 2; }

    double value(int k, int s) const;
    double row_point(int k) const { return alpha_.value() - 1.0 + k; }

    /// Largest diagonal entry and the s where it is attained.
    double max_value() const { return max_value_; }
    int argmax_s() const { return argmax_s_; }

private:
    FracOrder alpha_;
    int b_;
    std::vector<double> values_;
    double max_value_ = 0.0;
    int argmax_s_ = 0;
};

GreenTable green_table(FracOrder alpha, int b);

/// Closed form of the maximal diagonal value max_s G(s+alpha-1, s); an
/// even/odd-b pair of gamma-function ratios.
double green_max_closed_form(FracOrder alpha, int b);

/// The cone constant: the worst ratio over columns s = 1..b+1 of the window
/// minimum of G(.,s) to the column maximum G(s+alpha-1,s). Always in (0,1).
double lambda_constant(FracOrder alpha, int b);

}  // namespace dfbvp
