#include "output.hpp"

#include <charconv>

#include "dfbvp/fracops.hpp"

namespace dfbvp_cli {

std::string format_real(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string fnv1a_hex(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, h, 16);
    std::string hex(static_cast<std::size_t>(16 - (ptr - buf)), '0');
    hex.append(buf, ptr);
    return hex;
}

std::string green_table_csv(const dfbvp::GreenTable& table) {
    const int b = table.b();
    std::string out = "t\\s";
    for (int s = 0; s <= b + 1; ++s) {
        out += ',';
        out += std::to_string(s);
    }
    out += '\n';
    for (int k = 0; k <= b + 1; ++k) {
        out += format_real(table.row_point(k));
        for (int s = 0; s <= b + 1; ++s) {
            out += ',';
            out += format_real(table.value(k, s));
        }
        out += '\n';
    }
    return out;
}

ordered_json green_table_json(const dfbvp::GreenTable& table, double lambda,
                              const dfbvp::ConeWindow& window) {
    const int b = table.b();
    ordered_json j;
    j["alpha"] = table.alpha();
    j["b"] = b;
    ordered_json rows = ordered_json::array();
    ordered_json values = ordered_json::array();
    for (int k = 0; k <= b + 1; ++k) {
        rows.push_back(table.row_point(k));
        ordered_json row = ordered_json::array();
        for (int s = 0; s <= b + 1; ++s) {
            row.push_back(table.value(k, s));
        }
        values.push_back(std::move(row));
    }
    j["t"] = std::move(rows);
    j["values"] = std::move(values);
    j["max"] = table.max_value();
    j["max_location"] = {{"t", table.row_point(table.argmax_s())},
                         {"s", table.argmax_s()}};
    j["lambda"] = lambda;
    j["window"] = {{"lower", window.lower},
                   {"upper", window.upper},
                   {"rows_k", window.grid_indices}};
    return j;
}

std::string solution_csv(const dfbvp::ProblemSpec& p, const dfbvp::Solution& sol) {
    const dfbvp::GridFunction dy = dfbvp::frac_diff(sol.y, p.alpha.value());
    const dfbvp::ShiftedGrid lg = dfbvp::load_grid(p.alpha, p.b);
    std::string out = "k,t,y,residual_term\n";
    for (std::size_t k = 0; k < sol.y.size(); ++k) {
        out += std::to_string(k);
        out += ',';
        out += format_real(sol.y.grid().point(k));
        out += ',';
        out += format_real(sol.y[k]);
        out += ',';
        if (k >= 1 && k + 1 < sol.y.size()) {
            const std::size_t t = k - 1;
            const double term =
                dy[t] + p.q.eval(lg.point(t)) * p.f.eval(sol.y[k]);
            out += format_real(term);
        }
        out += '\n';
    }
    return out;
}

ordered_json solution_json(const dfbvp::ProblemSpec& p, const dfbvp::Solution& sol,
                           bool cone_ok, double lambda) {
    const dfbvp::GridFunction dy = dfbvp::frac_diff(sol.y, p.alpha.value());
    const dfbvp::ShiftedGrid lg = dfbvp::load_grid(p.alpha, p.b);
    ordered_json j;
    j["alpha"] = p.alpha.value();
    j["b"] = p.b;
    j["q"] = p.q.print();
    j["f"] = p.f.print();
    j["eta"] = sol.eta;
    j["sup_norm"] = sol.sup_norm;
    j["residual_sup"] = sol.residual_sup;
    j["iterations"] = sol.iterations;
    j["converged"] = sol.converged;
    j["iterates_monotone"] = sol.iterates_monotone;
    j["cone_check"] = cone_ok;
    j["lambda"] = lambda;
    if (p.r1 && p.r2) {
        j["norm_bounds"] = {{"r1", *p.r1},
                            {"r2", *p.r2},
                            {"lower_holds", sol.sup_norm >= *p.r1},
                            {"upper_holds", sol.sup_norm <= *p.r2}};
    }
    ordered_json rows = ordered_json::array();
    for (std::size_t k = 0; k < sol.y.size(); ++k) {
        ordered_json row;
        row["k"] = k;
        row["t"] = sol.y.grid().point(k);
        row["y"] = sol.y[k];
        if (k >= 1 && k + 1 < sol.y.size()) {
            const std::size_t t = k - 1;
            row["residual_term"] = dy[t] + p.q.eval(lg.point(t)) * p.f.eval(sol.y[k]);
        } else {
            row["residual_term"] = nullptr;
        }
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

}  // namespace dfbvp_cli
