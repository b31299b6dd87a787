#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dfbvp/expr.hpp"
#include "dfbvp/fracops.hpp"
#include "dfbvp/green.hpp"
#include "dfbvp/lyapunov.hpp"
#include "dfbvp/solver.hpp"

using namespace dfbvp;

namespace {

void BM_GreenTable(benchmark::State& state) {
    const FracOrder alpha(1.5);
    const int b = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(green_table(alpha, b));
    }
}
BENCHMARK(BM_GreenTable)->Arg(3)->Arg(8)->Arg(16);

void BM_LambdaConstant(benchmark::State& state) {
    const FracOrder alpha(1.5);
    const int b = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lambda_constant(alpha, b));
    }
}
BENCHMARK(BM_LambdaConstant)->Arg(3)->Arg(8);

void BM_FracDiffMatrix(benchmark::State& state) {
    const std::size_t len = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(frac_diff_matrix(1.5, len));
    }
}
BENCHMARK(BM_FracDiffMatrix)->Arg(7)->Arg(12)->Arg(24);

void BM_DirectSolve(benchmark::State& state) {
    const FracOrder alpha(1.5);
    const int b = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    GridFunction h = GridFunction::zeros(load_grid(alpha, b));
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = dist(rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_linear_direct(alpha, b, h));
    }
}
BENCHMARK(BM_DirectSolve)->Arg(3)->Arg(8)->Arg(16);

void BM_PicardSolve(benchmark::State& state) {
    const ProblemSpec p(FracOrder(1.5), static_cast<int>(state.range(0)),
                        Expr::parse("t", "t"), Expr::parse("1/(y+20)", "y"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_picard(p));
    }
}
BENCHMARK(BM_PicardSolve)->Arg(3)->Arg(8);

void BM_ExprParse(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(Expr::parse("ln(2+y)/gamma(6) + y^2 - sqrt(y+4)", "y"));
    }
}
BENCHMARK(BM_ExprParse);

void BM_ExprEval(benchmark::State& state) {
    const Expr e = Expr::parse("ln(2+y)/gamma(6) + y^2 - sqrt(y+4)", "y");
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(e.eval(x));
        x += 1e-6;
    }
}
BENCHMARK(BM_ExprEval);

void BM_EigenExclusionVerify(benchmark::State& state) {
    const FracOrder alpha(1.5);
    const int b = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigenvalues(interior_operator_matrix(alpha, b)));
    }
}
BENCHMARK(BM_EigenExclusionVerify)->Arg(3)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
