// Serial vs OpenMP timings for the two data-parallel kernels: collocation
// row assembly and the error-grid scan. Run with --benchmark_filter=... to
// narrow; OMP_NUM_THREADS controls the parallel lane.

#include "fracollo/collocation.hpp"
#include "fracollo/examples.hpp"

#include <benchmark/benchmark.h>

#include <memory>

using namespace fracollo;

namespace {

const BvpProblem& benchmark_problem()
{
    static const BvpProblem problem = load_example_problem(2, 1.75);
    return problem;
}

void bench_assemble(benchmark::State& state, ExecPolicy policy)
{
    const int inverse_h = static_cast<int>(state.range(0));
    const UniformBasis basis = make_basis(6, 1.0 / inverse_h, 1);
    const double delta = 0.5 / inverse_h;
    const BvpProblem& problem = benchmark_problem();
    for (auto _ : state) {
        CollocationSystem sys = assemble(problem, basis, delta, policy);
        benchmark::DoNotOptimize(sys.matrix.entries().data());
        benchmark::ClobberMemory();
    }
    state.counters["rows"] = static_cast<double>(2 * inverse_h - 1 + 2);
    state.counters["cols"] = static_cast<double>(inverse_h + 6);
}

void bench_error_scan(benchmark::State& state, ExecPolicy policy)
{
    const int inverse_h = static_cast<int>(state.range(0));
    const UniformBasis basis = make_basis(6, 1.0 / inverse_h, 1);
    const double delta = 0.5 / inverse_h;
    const BvpProblem& problem = benchmark_problem();
    const SplineFunction spline = solve(problem, basis, delta);
    for (auto _ : state) {
        const double err =
            error_inf_norm(spline, *problem.exact_solution, delta, 64, policy);
        benchmark::DoNotOptimize(err);
    }
}

} // namespace

BENCHMARK_CAPTURE(bench_assemble, serial, ExecPolicy::serial)
    ->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_assemble, parallel, ExecPolicy::parallel)
    ->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_error_scan, serial, ExecPolicy::serial)
    ->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_error_scan, parallel, ExecPolicy::parallel)
    ->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
