#include "dfbvp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dfbvp {

namespace {

void check_full_grid(const ProblemSpec& p, const GridFunction& y) {
    const ShiftedGrid want = full_grid(p.alpha, p.b);
    if (!(y.grid() == want)) {
        throw std::invalid_argument("grid function must live on N_{alpha-2} with length b+4");
    }
    const double scale = 1.0 + y.sup_norm();
    if (std::abs(y[0]) > 1e-12 * scale || std::abs(y[y.size() - 1]) > 1e-12 * scale) {
        throw std::invalid_argument("grid function must vanish at both boundary points");
    }
}

}  // namespace

ProblemSpec::ProblemSpec(FracOrder alpha_, int b_, Expr q_, Expr f_,
                         std::optional<double> r1_, std::optional<double> r2_)
    : alpha(alpha_), b(b_), q(std::move(q_)), f(std::move(f_)), r1(r1_), r2(r2_) {
    if (b < 2) {
        throw std::domain_error("b must be >= 2");
    }
    if (r1 || r2) {
        if (!(r1 && r2)) {
            throw std::invalid_argument("r1 and r2 must be given together");
        }
        if (!(*r1 > 0.0) || !(*r2 > *r1)) {
            throw std::invalid_argument("constants must satisfy 0 < r1 < r2");
        }
    }
}

ShiftedGrid full_grid(FracOrder alpha, int b) {
    return ShiftedGrid(alpha.value() - 2.0, static_cast<std::size_t>(b) + 4);
}

ShiftedGrid load_grid(FracOrder alpha, int b) {
    return ShiftedGrid(alpha.value() - 1.0, static_cast<std::size_t>(b) + 2);
}

SummationOperator::SummationOperator(const ProblemSpec& p)
    : table_(green_table(p.alpha, p.b)), f_(p.f) {
    const ShiftedGrid lg = load_grid(p.alpha, p.b);
    q_values_.resize(lg.length);
    for (std::size_t s = 0; s < lg.length; ++s) {
        q_values_[s] = p.q.eval(lg.point(s));
    }
}

GridFunction SummationOperator::apply(const GridFunction& y) const {
    const int b = table_.b();
    GridFunction out = GridFunction::zeros(y.grid());
    // f(y) at the interior points y(s+alpha-1) = y[s+1]
    std::vector<double> fy(static_cast<std::size_t>(b) + 2);
    for (int s = 0; s <= b + 1; ++s) {
        fy[static_cast<std::size_t>(s)] = f_.eval(y[static_cast<std::size_t>(s) + 1]);
    }
    for (int k = 0; k <= b + 1; ++k) {
        double acc = 0.0;
        for (int s = 0; s <= b + 1; ++s) {
            acc += table_.value(k, s) * q_values_[static_cast<std::size_t>(s)] *
                   fy[static_cast<std::size_t>(s)];
        }
        out[static_cast<std::size_t>(k) + 1] = acc;
    }
    return out;
}

GridFunction apply_T(const ProblemSpec& p, const GridFunction& y) {
    check_full_grid(p, y);
    return SummationOperator(p).apply(y);
}

Solution solve_picard(const ProblemSpec& p, const PicardOptions& opts,
                      const std::optional<GridFunction>& y0) {
    if (!(opts.tol > 0.0)) {
        throw std::invalid_argument("solve_picard: tol must be positive");
    }
    if (opts.max_iter < 1) {
        throw std::invalid_argument("solve_picard: max_iter must be >= 1");
    }
    if (!(opts.damping > 0.0) || opts.damping > 1.0) {
        throw std::invalid_argument("solve_picard: damping must lie in (0,1]");
    }
    const SummationOperator op(p);
    GridFunction y = y0 ? *y0 : GridFunction::zeros(full_grid(p.alpha, p.b));
    check_full_grid(p, y);

    bool converged = false;
    bool monotone = true;
    long iterations = 0;
    while (iterations < opts.max_iter) {
        ++iterations;
        const GridFunction ty = op.apply(y);
        double delta = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            double next = ty[i];
            if (opts.damping != 1.0) {
                next = (1.0 - opts.damping) * y[i] + opts.damping * ty[i];
            }
            if (!std::isfinite(next)) {
                throw std::runtime_error("solve_picard: iterate overflowed");
            }
            delta = std::max(delta, std::abs(next - y[i]));
            if (next < y[i] - 1e-15 * (1.0 + std::abs(y[i]))) {
                monotone = false;
            }
            y[i] = next;
        }
        if (delta < opts.tol) {
            converged = true;
            break;
        }
    }

    double eta = 0.0;
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        eta = std::max(eta, y[i]);
    }
    return Solution{
        .y = y,
        .eta = eta,
        .sup_norm = y.sup_norm(),
        .residual_sup = residual(p, y),
        .iterations = iterations,
        .converged = converged,
        .iterates_monotone = monotone,
    };
}

Matrix fractional_operator_matrix(FracOrder alpha, int b) {
    return frac_diff_matrix(alpha.value(), static_cast<std::size_t>(b) + 4);
}

Matrix interior_operator_matrix(FracOrder alpha, int b) {
    const Matrix d = fractional_operator_matrix(alpha, b);
    Matrix a(d.rows(), d.rows());
    for (std::size_t i = 0; i < d.rows(); ++i) {
        for (std::size_t j = 0; j < d.rows(); ++j) {
            a(i, j) = -d(i, j + 1);
        }
    }
    return a;
}

GridFunction solve_linear_direct(FracOrder alpha, int b, const GridFunction& h) {
    if (!(h.grid() == load_grid(alpha, b))) {
        throw std::invalid_argument("load must live on N_{alpha-1} with length b+2");
    }
    const std::size_t n = static_cast<std::size_t>(b) + 4;
    const Matrix d = fractional_operator_matrix(alpha, b);

    Matrix system(n, n);
    std::vector<double> rhs(n, 0.0);
    system(0, 0) = 1.0;              // y(alpha-2) = 0
    system(n - 1, n - 1) = 1.0;      // y(alpha+b+1) = 0
    for (std::size_t t = 0; t + 2 < n; ++t) {
        for (std::size_t j = 0; j < n; ++j) {
            system(t + 1, j) = d(t, j);
        }
        rhs[t + 1] = -h[t];
    }
    std::vector<double> y = solve_dense(std::move(system), std::move(rhs));
    return GridFunction(full_grid(alpha, b), std::move(y));
}

double residual(const ProblemSpec& p, const GridFunction& y) {
    const ShiftedGrid want = full_grid(p.alpha, p.b);
    if (!(y.grid() == want)) {
        throw std::invalid_argument("residual: grid function must live on the full grid");
    }
    const GridFunction dy = frac_diff(y, p.alpha.value());
    const ShiftedGrid lg = load_grid(p.alpha, p.b);
    double sup = 0.0;
    for (int t = 0; t <= p.b + 1; ++t) {
        const double point = lg.point(static_cast<std::size_t>(t));
        const double term = dy[static_cast<std::size_t>(t)] +
                            p.q.eval(point) * p.f.eval(y[static_cast<std::size_t>(t) + 1]);
        sup = std::max(sup, std::abs(term));
    }
    return sup;
}

bool cone_check(const GridFunction& y, double lambda, const ConeWindow& window) {
    if (window.grid_indices.empty()) {
        throw std::runtime_error("cone_check: empty window");
    }
    // Locate row k = 0 (point row_offset) on y's grid.
    const double shift = window.row_offset - y.grid().offset;
    const long j0 = std::lround(shift);
    if (std::abs(shift - static_cast<double>(j0)) > 1e-9) {
        throw std::invalid_argument("cone_check: window rows do not lie on the grid");
    }
    const long last_interior = j0 + window.b + 1;
    if (j0 < 0 || last_interior >= static_cast<long>(y.size())) {
        throw std::invalid_argument("cone_check: grid does not cover the interior rows");
    }
    double sup = 0.0;
    for (long j = j0; j <= last_interior; ++j) {
        const double v = y[static_cast<std::size_t>(j)];
        if (v < -1e-12 * (1.0 + y.sup_norm())) {
            throw std::invalid_argument("cone_check: function is negative on the interior");
        }
        sup = std::max(sup, std::abs(v));
    }
    double window_min = y[static_cast<std::size_t>(j0 + window.grid_indices.front())];
    for (int k : window.grid_indices) {
        window_min = std::min(window_min, y[static_cast<std::size_t>(j0 + k)]);
    }
    return window_min >= lambda * sup;
}

}  // namespace dfbvp
