#pragma once

// Existence calibration constants gamma and gamma*, the (H1)/(H2) hypothesis
// checks, Lyapunov-type inequality certificates in two forms, and the
// eigenvalue exclusion radius they imply for the f(y) = y problem.
//
// Each of gamma and gamma* is implemented twice. The "exact" variants follow
// the defining sums (true diagonal Green values; gamma* restricted to the
// central s-window). The "paper" variants follow the published worked
// examples, which substitute the closed-form maximum for every diagonal
// value and sum over the full range s = 0..b+1. Both are first-class;
// neither is declared canonical.

#include <optional>
#include <vector>

#include "dfbvp/expr.hpp"
#include "dfbvp/green.hpp"
#include "dfbvp/solver.hpp"

namespace dfbvp {

enum class BranchParity { even, odd };
enum class TheoremId { th3_4, th3_6 };
enum class FormulaVariant { exact, paper };

struct Certificate {
    double lhs = 0.0;  ///< sum over s of |q(s+alpha-1)|
    double rhs = 0.0;
    BranchParity branch = BranchParity::even;
    TheoremId theorem = TheoremId::th3_4;
    FormulaVariant variant = FormulaVariant::exact;
    bool satisfied = false;  ///< lhs > rhs
};

struct ExistenceConstants {
    double gamma_exact = 0.0;
    double gamma_paper = 0.0;
    double gamma_star_exact = 0.0;
    double gamma_star_paper = 0.0;
    double lambda_used = 0.0;
    ConeWindow window;
    std::vector<int> star_window_s;  ///< s-range of the windowed gamma* sum
    double max_green = 0.0;
};

struct HypothesisReport {
    bool sampled = false;    ///< true when min/max came from interval sampling
    double h1_bound = 0.0;   ///< gamma* r1
    double h1_witness = 0.0; ///< min of f over [0, r1]
    bool h1_ok = false;
    double h2_bound = 0.0;   ///< gamma r2
    double h2_witness = 0.0; ///< max of f over [0, r2]
    bool h2_ok = false;
};

/// Integer s with (b+alpha)/4 <= s <= 3(b+alpha)/4, clipped to 0..b+1.
std::vector<int> star_window(FracOrder alpha, int b);

/// ( sum_{s=0}^{b+1} G(s+alpha-1,s) q(s+alpha-1) )^{-1}. Rejects negative q
/// samples; throws when the sum vanishes (trivial q).
double gamma_exact(FracOrder alpha, int b, const Expr& q);

/// ( max_green * sum_{s=0}^{b+1} q(s+alpha-1) )^{-1}.
double gamma_paper(FracOrder alpha, int b, const Expr& q);

/// ( lambda * sum over the s-window of G(s+alpha-1,s) q(s+alpha-1) )^{-1}.
double gamma_star_exact(FracOrder alpha, int b, const Expr& q, double lambda);

/// ( lambda * max_green * sum_{s=0}^{b+1} q(s+alpha-1) )^{-1}.
double gamma_star_paper(FracOrder alpha, int b, const Expr& q, double lambda);

/// All four constants plus the window data. `lambda` defaults to the
/// enumerated lambda_constant(alpha, b).
ExistenceConstants existence_constants(FracOrder alpha, int b, const Expr& q,
                                       std::optional<double> lambda = std::nullopt);

/// (H1): f >= gamma* r1 on [0, r1]; (H2): f <= gamma r2 on [0, r2].
/// For nondecreasing f the endpoints decide both; otherwise each interval is
/// sampled at 1001 equispaced points and the result is a heuristic.
HypothesisReport check_h1_h2(const Expr& f, double r1, double r2, double gamma,
                             double gamma_star, bool f_nondecreasing);

/// The even/odd gamma-ratio constant of the necessary inequalities
/// (the reciprocal of green_max_closed_form, evaluated from its own
/// formula rather than by inverting the maximum).
double lyapunov_constant(FracOrder alpha, int b);

/// Necessary-condition RHS with solution amplitude eta:
/// lyapunov_constant * eta / f(eta). Requires eta > 0 and f(eta) > 0.
double lyapunov_rhs_eta(FracOrder alpha, int b, double eta, const Expr& f);

/// Two-constants RHS: (r1 / (gamma r2)) * lyapunov_constant.
double lyapunov_rhs_two_constants(FracOrder alpha, int b, double r1, double r2,
                                  double gamma);

/// sum_{s=0}^{b+1} |q(s+alpha-1)|.
double lyapunov_lhs(FracOrder alpha, int b, const Expr& q);

/// Certificate for the eta-form inequality.
Certificate certify_eta(const ProblemSpec& p, double eta,
                        FormulaVariant variant = FormulaVariant::exact);

/// Certificate for the two-constants inequality. The paper variant
/// multiplies the RHS by Gamma(b+3), matching the published example chain;
/// the exact variant evaluates the formula as stated.
Certificate certify_two_constants(const ProblemSpec& p, double r1, double r2,
                                  double gamma,
                                  FormulaVariant variant = FormulaVariant::exact);

/// Every eigenvalue mu of the interior f(y)=y problem satisfies
/// |mu| > lyapunov_constant / (b+2); returns that radius.
double eigen_exclusion(FracOrder alpha, int b);

}  // namespace dfbvp
