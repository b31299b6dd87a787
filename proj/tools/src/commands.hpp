#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dfbvp_cli {

// Exit-code contract, kept stable for scripted sweeps:
//   0 success / certificate satisfied
//   1 computation failed
//   2 bad input
//   3 solver did not converge
//   4 certificate violated (a meaningful result, not an error)
inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitNoConvergence = 3;
inline constexpr int kExitViolated = 4;

/// One line of the reproduction harness: a reference value, the value this
/// build computes, and (when `checked`) a tolerance verdict.
struct ComparisonRow {
    std::string name;
    std::string reference;
    std::string computed;
    std::optional<double> abs_diff;
    std::optional<double> tolerance;
    bool checked = true;  ///< informational rows don't gate the exit code
    bool pass = true;
    std::string note;
};

/// Rows for the bundled worked example (1 or 2). Throws on other ids.
std::vector<ComparisonRow> reproduce_rows(int example);

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dfbvp_cli
