#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

#include "dfbvp/green.hpp"
#include "dfbvp/solver.hpp"

namespace dfbvp_cli {

using ordered_json = nlohmann::ordered_json;

/// Shortest round-trip decimal rendering of a double.
std::string format_real(double v);

/// FNV-1a 64-bit digest, hex encoded; used to fingerprint inputs in reports.
std::string fnv1a_hex(std::string_view data);

/// CSV with header row `t\s,0,...,b+1` and one row per grid line t.
std::string green_table_csv(const dfbvp::GreenTable& table);

ordered_json green_table_json(const dfbvp::GreenTable& table, double lambda,
                              const dfbvp::ConeWindow& window);

/// CSV columns: k,t,y,residual_term (residual_term empty on boundary rows).
std::string solution_csv(const dfbvp::ProblemSpec& p, const dfbvp::Solution& sol);

ordered_json solution_json(const dfbvp::ProblemSpec& p, const dfbvp::Solution& sol,
                           bool cone_ok, double lambda);

}  // namespace dfbvp_cli
