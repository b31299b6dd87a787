#include "dfbvp/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dfbvp/specfun.hpp"

namespace dfbvp {

namespace {

double q_sample(const Expr& q, double point) {
    const double v = q.eval(point);
    if (v < 0.0) {
        throw std::domain_error("q must be nonnegative at the evaluated grid points");
    }
    return v;
}

double reciprocal_of(double sum, const char* what) {
    if (!(sum > 0.0)) {
        throw std::domain_error(std::string(what) + ": weighted sum of q vanishes (trivial q)");
    }
    return 1.0 / sum;
}

}  // namespace

std::vector<int> star_window(FracOrder alpha, int b) {
    const double a = alpha.value();
    const int lo = std::max(0, static_cast<int>(std::ceil((b + a) / 4.0 - 1e-9)));
    const int hi = std::min(b + 1, static_cast<int>(std::floor(3.0 * (b + a) / 4.0 + 1e-9)));
    std::vector<int> out;
    for (int s = lo; s <= hi; ++s) out.push_back(s);
    if (out.empty()) {
        throw std::runtime_error("star window contains no integer s");
    }
    return out;
}

double gamma_exact(FracOrder alpha, int b, const Expr& q) {
    const GreenTable g = green_table(alpha, b);
    const ShiftedGrid lg = load_grid(alpha, b);
    double sum = 0.0;
    for (int s = 0; s <= b + 1; ++s) {
        sum += g.value(s, s) * q_sample(q, lg.point(static_cast<std::size_t>(s)));
    }
    return reciprocal_of(sum, "gamma_exact");
}

double gamma_paper(FracOrder alpha, int b, const Expr& q) {
    const ShiftedGrid lg = load_grid(alpha, b);
    double sum = 0.0;
    for (int s = 0; s <= b + 1; ++s) {
        sum += q_sample(q, lg.point(static_cast<std::size_t>(s)));
    }
    return reciprocal_of(green_max_closed_form(alpha, b) * sum, "gamma_paper");
}

double gamma_star_exact(FracOrder alpha, int b, const Expr& q, double lambda) {
    if (!(lambda > 0.0)) {
        throw std::domain_error("gamma_star_exact: lambda must be positive");
    }
    const GreenTable g = green_table(alpha, b);
    const ShiftedGrid lg = load_grid(alpha, b);
    double sum = 0.0;
    for (int s : star_window(alpha, b)) {
        sum += lambda * g.value(s, s) * q_sample(q, lg.point(static_cast<std::size_t>(s)));
    }
    return reciprocal_of(sum, "gamma_star_exact");
}

double gamma_star_paper(FracOrder alpha, int b, const Expr& q, double lambda) {
    if (!(lambda > 0.0)) {
        throw std::domain_error("gamma_star_paper: lambda must be positive");
    }
    const ShiftedGrid lg = load_grid(alpha, b);
    double sum = 0.0;
    for (int s = 0; s <= b + 1; ++s) {
        sum += q_sample(q, lg.point(static_cast<std::size_t>(s)));
    }
    return reciprocal_of(lambda * green_max_closed_form(alpha, b) * sum, "gamma_star_paper");
}

ExistenceConstants existence_constants(FracOrder alpha, int b, const Expr& q,
                                       std::optional<double> lambda) {
    ExistenceConstants c;
    c.lambda_used = lambda ? *lambda : lambda_constant(alpha, b);
    c.window = cone_window(alpha, b);
    c.star_window_s = star_window(alpha, b);
    c.max_green = green_max_closed_form(alpha, b);
    c.gamma_exact = gamma_exact(alpha, b, q);
    c.gamma_paper = gamma_paper(alpha, b, q);
    c.gamma_star_exact = gamma_star_exact(alpha, b, q, c.lambda_used);
    c.gamma_star_paper = gamma_star_paper(alpha, b, q, c.lambda_used);
    return c;
}

HypothesisReport check_h1_h2(const Expr& f, double r1, double r2, double gamma,
                             double gamma_star, bool f_nondecreasing) {
    if (!(r1 > 0.0) || !(r2 > r1)) {
        throw std::invalid_argument("check_h1_h2: need 0 < r1 < r2");
    }
    HypothesisReport rep;
    rep.h1_bound = gamma_star * r1;
    rep.h2_bound = gamma * r2;
    if (f_nondecreasing) {
        rep.sampled = false;
        rep.h1_witness = f.eval(0.0);   // min over [0, r1]
        rep.h2_witness = f.eval(r2);    // max over [0, r2]
    } else {
        rep.sampled = true;
        constexpr int kSamples = 1001;
        double fmin = f.eval(0.0);
        double fmax = fmin;
        for (int i = 1; i < kSamples; ++i) {
            const double x1 = r1 * static_cast<double>(i) / (kSamples - 1);
            fmin = std::min(fmin, f.eval(x1));
        }
        for (int i = 1; i < kSamples; ++i) {
            const double x2 = r2 * static_cast<double>(i) / (kSamples - 1);
            fmax = std::max(fmax, f.eval(x2));
        }
        rep.h1_witness = fmin;
        rep.h2_witness = fmax;
    }
    rep.h1_ok = rep.h1_witness >= rep.h1_bound;
    rep.h2_ok = rep.h2_witness <= rep.h2_bound;
    return rep;
}

double lyapunov_constant(FracOrder alpha, int b) {
    const double a = alpha.value();
    const double bd = static_cast<double>(b);
    if (b % 2 == 0) {
        const double lg = ln_gamma(a) + ln_gamma(bd + a + 2.0) +
                          2.0 * ln_gamma(bd / 2.0 + 2.0) -
                          2.0 * ln_gamma(bd / 2.0 + a) - ln_gamma(bd + 3.0);
        return 4.0 * std::exp(lg) / ((bd + 2.0 * a) * (bd + 2.0));
    }
    const double lg = ln_gamma(a) + ln_gamma(bd + a + 2.0) +
                      2.0 * ln_gamma((bd + 3.0) / 2.0) -
                      ln_gamma(bd + 3.0) - 2.0 * ln_gamma((bd + 1.0) / 2.0 + a);
    return std::exp(lg);
}

double lyapunov_rhs_eta(FracOrder alpha, int b, double eta, const Expr& f) {
    if (!(eta > 0.0)) {
        throw std::domain_error("lyapunov_rhs_eta: eta must be positive");
    }
    const double feta = f.eval(eta);
    if (!(feta > 0.0)) {
        throw std::domain_error("lyapunov_rhs_eta: f(eta) must be positive");
    }
    return lyapunov_constant(alpha, b) * eta / feta;
}

double lyapunov_rhs_two_constants(FracOrder alpha, int b, double r1, double r2,
                                  double gamma) {
    if (!(r1 > 0.0) || !(r2 > r1)) {
        throw std::domain_error("lyapunov_rhs_two_constants: need 0 < r1 < r2");
    }
    if (!(gamma > 0.0)) {
        throw std::domain_error("lyapunov_rhs_two_constants: gamma must be positive");
    }
    return (r1 / (gamma * r2)) * lyapunov_constant(alpha, b);
}

double lyapunov_lhs(FracOrder alpha, int b, const Expr& q) {
    const ShiftedGrid lg = load_grid(alpha, b);
    double sum = 0.0;
    for (int s = 0; s <= b + 1; ++s) {
        sum += std::abs(q.eval(lg.point(static_cast<std::size_t>(s))));
    }
    return sum;
}

Certificate certify_eta(const ProblemSpec& p, double eta, FormulaVariant variant) {
    Certificate cert;
    cert.theorem = TheoremId::th3_4;
    cert.variant = variant;
    cert.branch = (p.b % 2 == 0) ? BranchParity::even : BranchParity::odd;
    cert.lhs = lyapunov_lhs(p.alpha, p.b, p.q);
    cert.rhs = lyapunov_rhs_eta(p.alpha, p.b, eta, p.f);
    cert.satisfied = cert.lhs > cert.rhs;
    return cert;
}

Certificate certify_two_constants(const ProblemSpec& p, double r1, double r2,
                                  double gamma, FormulaVariant variant) {
    Certificate cert;
    cert.theorem = TheoremId::th3_6;
    cert.variant = variant;
    cert.branch = (p.b % 2 == 0) ? BranchParity::even : BranchParity::odd;
    cert.lhs = lyapunov_lhs(p.alpha, p.b, p.q);
    cert.rhs = lyapunov_rhs_two_constants(p.alpha, p.b, r1, r2, gamma);
    if (variant == FormulaVariant::paper) {
        // The published example chain carries an extra Gamma(b+3) relative to
        // the formula as stated; reproduce it under the paper variant.
        cert.rhs *= std::exp(ln_gamma(static_cast<double>(p.b) + 3.0));
    }
    cert.satisfied = cert.lhs > cert.rhs;
    return cert;
}

double eigen_exclusion(FracOrder alpha, int b) {
    return lyapunov_constant(alpha, b) / (static_cast<double>(b) + 2.0);
}

}  // namespace dfbvp
