#include "problem_file.hpp"

#include <fstream>
#include <stdexcept>

namespace dfbvp_cli {

namespace {

template <typename T>
std::optional<T> get_optional(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    return j.at(key).get<T>();
}

}  // namespace

ProblemFile problem_file_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw std::invalid_argument("problem file: top-level JSON object expected");
    }
    for (const char* key : {"alpha", "b", "q", "f"}) {
        if (!j.contains(key)) {
            throw std::invalid_argument(std::string("problem file: missing field '") +
                                        key + "'");
        }
    }
    ProblemFile pf;
    pf.alpha = j.at("alpha").get<double>();
    pf.b = j.at("b").get<int>();
    pf.q = j.at("q").get<std::string>();
    pf.f = j.at("f").get<std::string>();
    pf.r1 = get_optional<double>(j, "r1");
    pf.r2 = get_optional<double>(j, "r2");
    pf.tol = get_optional<double>(j, "tol");
    pf.max_iter = get_optional<long>(j, "max_iter");
    pf.damping = get_optional<double>(j, "damping");
    return pf;
}

nlohmann::ordered_json problem_file_to_json(const ProblemFile& pf) {
    nlohmann::ordered_json j;
    j["alpha"] = pf.alpha;
    j["b"] = pf.b;
    j["q"] = pf.q;
    j["f"] = pf.f;
    if (pf.r1) j["r1"] = *pf.r1;
    if (pf.r2) j["r2"] = *pf.r2;
    if (pf.tol) j["tol"] = *pf.tol;
    if (pf.max_iter) j["max_iter"] = *pf.max_iter;
    if (pf.damping) j["damping"] = *pf.damping;
    return j;
}

ProblemFile load_problem_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open problem file: " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("problem file " + path.string() +
                                    " is not valid JSON: " + e.what());
    }
    return problem_file_from_json(j);
}

dfbvp::ProblemSpec to_problem_spec(const ProblemFile& pf) {
    return dfbvp::ProblemSpec(dfbvp::FracOrder(pf.alpha), pf.b,
                              dfbvp::Expr::parse(pf.q, "t"),
                              dfbvp::Expr::parse(pf.f, "y"), pf.r1, pf.r2);
}

dfbvp::PicardOptions to_picard_options(const ProblemFile& pf) {
    dfbvp::PicardOptions opts;
    if (pf.tol) opts.tol = *pf.tol;
    if (pf.max_iter) opts.max_iter = *pf.max_iter;
    if (pf.damping) opts.damping = *pf.damping;
    return opts;
}

}  // namespace dfbvp_cli
