// Serial reference vs OpenMP for the data-parallel workloads: a figure
// sweep and a grid of independent relaxation runs.

#include <benchmark/benchmark.h>

#include "colldecay/dynamics.hpp"
#include "colldecay/parallel.hpp"
#include "colldecay/runs.hpp"
#include "colldecay/states.hpp"

using namespace colldecay;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::openmp; }

void BM_SweepFig5(benchmark::State& state) {
    SweepRequest req;
    req.target = SweepTarget::fig5;
    req.r = {0.0, 1.0, 40};
    req.n_mean = {0.0, 3.0, 40};
    for (auto _ : state) benchmark::DoNotOptimize(compute_sweep(req, mode(state)));
    state.SetLabel(mode(state) == Execution::serial ? "serial" : "openmp x" + std::to_string(max_threads()));
}

void BM_RelaxationGrid(benchmark::State& state) {
    struct Point {
        double r, n;
    };
    std::vector<Point> points;
    for (double r : {0.0, 0.25, 0.5, 0.75})
        for (double n : {0.0, 0.5, 1.0, 2.0}) points.push_back({r, n});
    for (auto _ : state) {
        auto out = map_indexed(
            points.size(),
            [&](std::size_t i) {
                return relax_to_stationary(CollectiveModel::qubits(1.0, points[i].n),
                                           werner_qubit(points[i].r, WernerCase::singlet))
                    .t_converged;
            },
            mode(state));
        benchmark::DoNotOptimize(out);
    }
    state.SetLabel(mode(state) == Execution::serial ? "serial" : "openmp x" + std::to_string(max_threads()));
}

}  // namespace

BENCHMARK(BM_SweepFig5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RelaxationGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
