#pragma once

// The nonlinear boundary value problem
//
//     Delta^alpha y(t) + q(t+alpha-1) f(y(t+alpha-1)) = 0,   t = 0..b+1,
//     y(alpha-2) = y(alpha+b+1) = 0,
//
// its Green-kernel summation operator T, a Picard fixed-point driver, and an
// independent oracle that inverts the same problem as one dense linear
// system assembled from the explicit fractional-difference matrices.

#include <optional>

#include "dfbvp/expr.hpp"
#include "dfbvp/fracops.hpp"
#include "dfbvp/green.hpp"
#include "dfbvp/grid.hpp"
#include "dfbvp/linalg.hpp"

namespace dfbvp {

struct ProblemSpec {
    FracOrder alpha;
    int b;
    Expr q;  ///< coefficient, expression in t
    Expr f;  ///< nonlinearity, expression in y
    std::optional<double> r1;
    std::optional<double> r2;

    ProblemSpec(FracOrder alpha_, int b_, Expr q_, Expr f_,
                std::optional<double> r1_ = std::nullopt,
                std::optional<double> r2_ = std::nullopt);
};

struct PicardOptions {
    double tol = 1e-12;
    long max_iter = 100000;
    double damping = 1.0;  ///< y <- (1-damping) y + damping T y
};

struct Solution {
    GridFunction y;          ///< on N_{alpha-2}, length b+4, zero at both ends
    double eta;              ///< max of y over the interior rows
    double sup_norm;         ///< sup |y|
    double residual_sup;     ///< sup over t of |Delta^alpha y + q f(y)|
    long iterations;
    bool converged;
    bool iterates_monotone;  ///< every iterate dominated the previous one
};

/// Full solution grid N_{alpha-2} (length b+4).
ShiftedGrid full_grid(FracOrder alpha, int b);
/// Load/equation grid N_{alpha-1} (length b+2).
ShiftedGrid load_grid(FracOrder alpha, int b);

/// T with the Green table and the q samples precomputed once.
class SummationOperator {
public:
    explicit SummationOperator(const ProblemSpec& p);

    /// Ty on the full grid; exactly zero at both boundary points.
    GridFunction apply(const GridFunction& y) const;

    const GreenTable& table() const { return table_; }
    const std::vector<double>& q_values() const { return q_values_; }

private:
    GreenTable table_;
    Expr f_;
    std::vector<double> q_values_;
};

GridFunction apply_T(const ProblemSpec& p, const GridFunction& y);

Solution solve_picard(const ProblemSpec& p, const PicardOptions& opts = {},
                      const std::optional<GridFunction>& y0 = std::nullopt);

/// Direct oracle: solves Delta^alpha y(t) = -h(t+alpha-1), zero boundary
/// values, as a dense (b+4) x (b+4) system with partial pivoting. h lives on
/// the load grid (length b+2).
GridFunction solve_linear_direct(FracOrder alpha, int b, const GridFunction& h);

/// sup_t |Delta^alpha y(t) + q(t+alpha-1) f(y(t+alpha-1))| over t = 0..b+1.
double residual(const ProblemSpec& p, const GridFunction& y);

/// Cone membership: min of y over the window rows >= lambda * sup of y over
/// the interior rows. y may live on the full or on the load grid.
bool cone_check(const GridFunction& y, double lambda, const ConeWindow& window);

/// Rows t = 0..b+1 of Delta^alpha acting on values on the full grid;
/// a (b+2) x (b+4) matrix.
Matrix fractional_operator_matrix(FracOrder alpha, int b);

/// The (b+2) x (b+2) interior operator: -Delta^alpha with the two zero
/// boundary unknowns eliminated. Its spectrum is the spectrum of the
/// discrete eigenvalue problem with f(y) = y.
Matrix interior_operator_matrix(FracOrder alpha, int b);

}  // namespace dfbvp
