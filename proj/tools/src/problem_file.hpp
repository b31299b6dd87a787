#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "dfbvp/solver.hpp"

namespace dfbvp_cli {

/// On-disk problem description. Expressions are stored as source text so the
/// files stay diffable; everything optional mirrors the solver defaults.
struct ProblemFile {
    double alpha = 0.0;
    int b = 0;
    std::string q;
    std::string f;
    std::optional<double> r1;
    std::optional<double> r2;
    std::optional<double> tol;
    std::optional<long> max_iter;
    std::optional<double> damping;
};

ProblemFile problem_file_from_json(const nlohmann::json& j);
nlohmann::ordered_json problem_file_to_json(const ProblemFile& pf);
ProblemFile load_problem_file(const std::filesystem::path& path);

dfbvp::ProblemSpec to_problem_spec(const ProblemFile& pf);
dfbvp::PicardOptions to_picard_options(const ProblemFile& pf);

}  // namespace dfbvp_cli
