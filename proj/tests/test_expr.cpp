#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <random>
#include <string>

#include "dfbvp/expr.hpp"
#include "support.hpp"

using dfbvp::EvalError;
using dfbvp::Expr;
using dfbvp::ParseError;
using testsupport::close_rel;

TEST_CASE("literal, variable and the worked expressions") {
    CHECK(Expr::parse("t", "t").eval(3.25) == 3.25);
    CHECK(close_rel(Expr::parse("(2*t+1)/2", "t").eval(0.5), 1.0, 1e-15));
    CHECK(close_rel(Expr::parse("ln(2+y)/gamma(6)", "y").eval(0.0),
                    0.0057762265046662109118, 1e-13));
    CHECK(close_rel(Expr::parse("1/(y+20)", "y").eval(0.0), 0.05, 1e-15));
    CHECK(close_rel(Expr::parse("gamma(6)", "y").eval(0.0), 120.0, 1e-13));
}

TEST_CASE("precedence and associativity") {
    CHECK(Expr::parse("2^3^2", "t").eval(0.0) == 512.0);       // right-assoc
    CHECK(Expr::parse("-y^2", "y").eval(2.0) == -4.0);         // ^ above unary -
    CHECK(Expr::parse("2+3*4", "t").eval(0.0) == 14.0);
    CHECK(Expr::parse("2*3+4", "t").eval(0.0) == 10.0);
    CHECK(Expr::parse("2-3-4", "t").eval(0.0) == -5.0);        // left-assoc
    CHECK(Expr::parse("16/4/2", "t").eval(0.0) == 2.0);
    CHECK(Expr::parse("2^-1", "t").eval(0.0) == 0.5);          // signed exponent
    CHECK(Expr::parse("(2+3)*4", "t").eval(0.0) == 20.0);
    CHECK(Expr::parse("--4", "t").eval(0.0) == 4.0);
    CHECK(Expr::parse("2e2+1.5e-1", "t").eval(0.0) == 200.0 + 0.15);
}

TEST_CASE("syntax errors carry byte offsets") {
    auto offset_of = [](const char* src, const char* var) -> std::size_t {
        try {
            (void)Expr::parse(src, var);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return static_cast<std::size_t>(-1);
    };
    CHECK(offset_of("2+*3", "t") == 2);
    CHECK(offset_of("2+", "t") == 2);
    CHECK(offset_of("(1+2", "t") == 4);
    CHECK(offset_of("1 + $", "t") == 4);
    CHECK(offset_of("gamma(1,2)", "t") == 7);   // comma: not part of the grammar
    CHECK(offset_of("foo(3)", "t") == 0);       // unknown identifier
    CHECK(offset_of("ln 3", "t") == 3);         // function without '('
    CHECK(offset_of("2 3", "t") == 2);          // trailing input
}

TEST_CASE("wrong-variable and unknown-identifier errors are distinct") {
    try {
        (void)Expr::parse("y+1", "t");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("not allowed here") != std::string::npos);
        CHECK(e.offset() == 0);
    }
    try {
        (void)Expr::parse("bogus", "t");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("unknown identifier") != std::string::npos);
    }
    CHECK_THROWS_AS((void)Expr::parse("", "t"), ParseError);
}

TEST_CASE("evaluation errors") {
    CHECK_THROWS_AS(Expr::parse("ln(t)", "t").eval(-1.0), EvalError);
    CHECK_THROWS_AS(Expr::parse("ln(t)", "t").eval(0.0), EvalError);
    CHECK_THROWS_AS(Expr::parse("sqrt(t)", "t").eval(-4.0), EvalError);
    CHECK_THROWS_AS(Expr::parse("gamma(t)", "t").eval(0.0), EvalError);
    CHECK_THROWS_AS(Expr::parse("1/t", "t").eval(0.0), EvalError);
    CHECK_THROWS_AS(Expr::parse("exp(t)", "t").eval(1e9), EvalError);  // overflow
    CHECK(Expr::parse("abs(t)", "t").eval(-3.0) == 3.0);
}

TEST_CASE("evaluation is deterministic") {
    const Expr e = Expr::parse("ln(2+y)/gamma(6) + y^2 - sqrt(y+1)", "y");
    const double first = e.eval(0.731);
    for (int i = 0; i < 32; ++i) {
        CHECK(e.eval(0.731) == first);
    }
}

TEST_CASE("print/parse round trip evaluates identically") {
    const char* sources[] = {
        "t",          "(2*t+1)/2",      "ln(2+t)/gamma(6)", "-t^2",
        "2^3^2",      "1/(t+20)",       "abs(t-3)*sqrt(t+4)",
        "exp(-t)*t",  "2e-3 + t/7.5",   "-(t+1)^-2",
    };
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> xs(0.1, 5.0);
    for (const char* src : sources) {
        const Expr e = Expr::parse(src, "t");
        const Expr round = Expr::parse(e.print(), "t");
        for (int i = 0; i < 16; ++i) {
            const double x = xs(rng);
            CHECK(e.eval(x) == round.eval(x));
        }
    }
}

TEST_CASE("fuzzing: parser is total, no crashes") {
    std::mt19937_64 rng(0xfeedbeef);
    const std::string alphabet = "0123456789.+-*/^()tyabceglmnpqrsx_ E";
    std::uniform_int_distribution<std::size_t> len_dist(1, 1024);
    std::uniform_int_distribution<std::size_t> char_dist(0, alphabet.size() - 1);
    int parsed = 0;
    for (int i = 0; i < 10000; ++i) {
        std::string src;
        const std::size_t n = len_dist(rng);
        src.reserve(n);
        for (std::size_t j = 0; j < n; ++j) src.push_back(alphabet[char_dist(rng)]);
        try {
            const Expr e = Expr::parse(src, "t");
            ++parsed;
            try {
                (void)e.eval(1.25);
            } catch (const EvalError&) {
            }
        } catch (const ParseError&) {
        }
    }
    // sanity: the fuzzer occasionally produces a valid expression
    CHECK(parsed > 0);
}
