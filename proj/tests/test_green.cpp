#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "dfbvp/green.hpp"
#include "support.hpp"

using namespace dfbvp;
using testsupport::close_rel;

namespace {

const double kSweepAlpha[] = {1.1, 1.25, 1.5, 1.75, 2.0};

// Exact table for alpha = 3/2, b = 3; every entry is rational.
// (The half-integer gamma factors cancel throughout.)
const double kExactTable[5][5] = {
    {10.0 / 11, 80.0 / 99, 160.0 / 231, 128.0 / 231, 256.0 / 693},
    {4.0 / 11, 40.0 / 33, 80.0 / 77, 64.0 / 77, 128.0 / 231},
    {9.0 / 44, 17.0 / 33, 100.0 / 77, 80.0 / 77, 160.0 / 231},
    {5.0 / 44, 53.0 / 198, 17.0 / 33, 40.0 / 33, 80.0 / 99},
    {35.0 / 704, 5.0 / 44, 9.0 / 44, 4.0 / 11, 10.0 / 11},
};

// Classical kernel at alpha = 2: x^[1] = x, so the two branches collapse to
// a piecewise-linear expression in k and s.
double classical_green(int b, int k, int s) {
    const double base = (1.0 + k) * (2.0 + b - s) / (3.0 + b);
    return (k >= s + 1) ? base - static_cast<double>(k - s) : base;
}

}  // namespace

TEST_CASE("FracOrder validates its range") {
    CHECK_THROWS_AS(FracOrder(1.0), std::domain_error);
    CHECK_THROWS_AS(FracOrder(2.5), std::domain_error);
    CHECK(FracOrder(2.0).value() == 2.0);
    CHECK(FracOrder(1.0000001).value() > 1.0);
}

TEST_CASE("corner value at alpha=1.5, b=3 is 10/11") {
    CHECK(close_rel(green_value(FracOrder(1.5), 3, 0, 0), 10.0 / 11.0, 1e-12));
}

TEST_CASE("full table at alpha=1.5, b=3 matches the exact fractions") {
    const GreenTable g = green_table(FracOrder(1.5), 3);
    for (int k = 0; k <= 4; ++k) {
        for (int s = 0; s <= 4; ++s) {
            CHECK(close_rel(g.value(k, s), kExactTable[k][s], 1e-12));
        }
    }
    CHECK(close_rel(g.max_value(), 100.0 / 77.0, 1e-12));
    CHECK(g.argmax_s() == 2);
}

TEST_CASE("boundary rows vanish") {
    for (double a : kSweepAlpha) {
        for (int b : {2, 3, 5, 8}) {
            for (int s = 0; s <= b + 1; ++s) {
                // t = alpha-2: the leading falling power is an exact pole zero
                CHECK(green_value_extended(FracOrder(a), b, -1, s) == 0.0);
                // t = alpha+b+1: the two branch terms coincide and cancel
                CHECK(std::abs(green_value_extended(FracOrder(a), b, b + 2, s)) < 1e-12);
            }
        }
    }
}

TEST_CASE("alpha=2 reduces to the classical second-difference kernel") {
    for (int b : {2, 3, 6}) {
        const GreenTable g = green_table(FracOrder(2.0), b);
        for (int k = 0; k <= b + 1; ++k) {
            for (int s = 0; s <= b + 1; ++s) {
                CHECK(close_rel(g.value(k, s), classical_green(b, k, s), 1e-12));
            }
        }
    }
}

TEST_CASE("index range errors") {
    CHECK_THROWS_AS(green_value(FracOrder(1.5), 3, -1, 0), std::out_of_range);
    CHECK_THROWS_AS(green_value(FracOrder(1.5), 3, 0, 5), std::out_of_range);
    CHECK_THROWS_AS(green_value_extended(FracOrder(1.5), 3, 6, 0), std::out_of_range);
    CHECK_THROWS_AS(green_value(FracOrder(1.5), 1, 0, 0), std::domain_error);
}

TEST_CASE("positivity and unique diagonal column maxima across the sweep") {
    for (double a : kSweepAlpha) {
        for (int b = 2; b <= 8; ++b) {
            const GreenTable g = green_table(FracOrder(a), b);  // ctor checks too
            for (int s = 0; s <= b + 1; ++s) {
                const double diag = g.value(s, s);
                for (int k = 0; k <= b + 1; ++k) {
                    CHECK(g.value(k, s) > 0.0);
                    if (k != s) {
                        // strict, with a hard margin
                        CHECK(diag - g.value(k, s) >= 1e-12 * diag);
                    }
                }
            }
        }
    }
}

TEST_CASE("closed-form maximum equals diagonal enumeration") {
    CHECK(close_rel(green_max_closed_form(FracOrder(1.5), 3), 100.0 / 77.0, 1e-12));
    CHECK(close_rel(green_max_closed_form(FracOrder(1.5), 2), 8.0 / 7.0, 1e-12));
    for (double a : kSweepAlpha) {
        for (int b = 2; b <= 8; ++b) {
            const GreenTable g = green_table(FracOrder(a), b);
            double enumerated = 0.0;
            for (int s = 1; s <= b + 1; ++s) {
                enumerated = std::max(enumerated, g.value(s, s));
            }
            CHECK(close_rel(green_max_closed_form(FracOrder(a), b), enumerated, 1e-10));
        }
    }
}

TEST_CASE("cone window rows for alpha=1.5, b=3 are t = 1.5 and 2.5") {
    const ConeWindow w = cone_window(FracOrder(1.5), 3);
    CHECK(w.lower == doctest::Approx(1.125));
    CHECK(w.upper == doctest::Approx(3.375));
    REQUIRE(w.grid_indices.size() == 2);
    CHECK(w.grid_indices[0] == 1);
    CHECK(w.grid_indices[1] == 2);
    CHECK(w.row_offset + w.grid_indices[0] == doctest::Approx(1.5));
    CHECK(w.row_offset + w.grid_indices[1] == doctest::Approx(2.5));
}

TEST_CASE("cone window is never empty on the sweep") {
    for (double a : kSweepAlpha) {
        for (int b = 2; b <= 8; ++b) {
            CHECK(!cone_window(FracOrder(a), b).grid_indices.empty());
        }
    }
}

TEST_CASE("lambda for alpha=1.5, b=3 is 17/40 by enumeration") {
    const double lambda = lambda_constant(FracOrder(1.5), 3);
    CHECK(close_rel(lambda, 0.425, 1e-12));
    // The externally quoted 0.03779 is a much smaller constant; both are
    // valid lower bounds, ours is the tight one. Keep the gap visible here.
    CHECK(lambda > 0.03779);
}

TEST_CASE("lambda lies in (0,1) and its bound holds with tiny slack") {
    for (double a : kSweepAlpha) {
        for (int b = 2; b <= 8; ++b) {
            const double lambda = lambda_constant(FracOrder(a), b);
            CHECK(lambda > 0.0);
            CHECK(lambda < 1.0);
            const GreenTable g = green_table(FracOrder(a), b);
            const ConeWindow w = cone_window(FracOrder(a), b);
            for (int s = 1; s <= b + 1; ++s) {
                for (int k : w.grid_indices) {
                    CHECK(g.value(k, s) >= lambda * g.value(s, s) - 1e-12);
                }
            }
        }
    }
}
