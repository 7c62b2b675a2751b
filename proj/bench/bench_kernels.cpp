// Serial reference against the OpenMP path for the enumeration kernels.
// The second benchmark argument selects the path: 0 serial, 1 parallel.

#include "latmin/gon.hpp"
#include "latmin/parallel.hpp"
#include "latmin/polytope.hpp"
#include "latmin/suite.hpp"

#include <benchmark/benchmark.h>

using namespace latmin;

namespace {

Execution exec_of(const benchmark::State& state)
{
    return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

// Cross-polytope |x_1| + ... + |x_d| <= r as 2^d halfspaces.
IntHalfspaces cross_system(int d, long r)
{
    IntHalfspaces sys;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        IntVec n(d);
        for (int i = 0; i < d; ++i)
            n[i] = (mask & (1u << i)) ? -1 : 1;
        sys.normals.push_back(n);
        sys.bounds.emplace_back(r);
    }
    return sys;
}

void BM_ScanBox(benchmark::State& state)
{
    const int d = 4;
    const long r = state.range(0);
    const IntVec lo(d, Int(-r)), hi(d, Int(r));
    const IntHalfspaces sys = cross_system(d, r);
    const Execution exec = exec_of(state);
    std::size_t found = 0;
    for (auto _ : state) {
        auto pts = scan_box(lo, hi, sys, exec);
        found = pts.size();
        benchmark::DoNotOptimize(pts);
    }
    state.counters["points"] = static_cast<double>(found);
    state.counters["box"] = static_cast<double>(box_size(lo, hi).get_si());
}
BENCHMARK(BM_ScanBox)->ArgsProduct({{6, 10, 14}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_LatticePoints(benchmark::State& state)
{
    SuiteConfig cfg;
    cfg.dim = 3;
    cfg.seed = 5;
    cfg.coord_bound = state.range(0);
    const Polytope p = generate_polytope(cfg, 0);
    const Execution exec = exec_of(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(lattice_points(p, LatticeMode::All, exec));
}
BENCHMARK(BM_LatticePoints)->ArgsProduct({{10, 20}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_SuccessiveMinima(benchmark::State& state)
{
    SuiteConfig cfg;
    cfg.dim = static_cast<int>(state.range(0));
    cfg.seed = 9;
    cfg.coord_bound = 6;
    const SymmetricBody k = generate_symmetric(cfg, 3);
    const Execution exec = exec_of(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(successive_minima(k, exec));
}
BENCHMARK(BM_SuccessiveMinima)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_RunSuite(benchmark::State& state)
{
    SuiteConfig cfg;
    cfg.suite = SuiteKind::Minkowski;
    cfg.dim = 3;
    cfg.seed = 11;
    cfg.count = static_cast<std::size_t>(state.range(0));
    const Execution exec = exec_of(state);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_suite(cfg, exec));
}
BENCHMARK(BM_RunSuite)->ArgsProduct({{64}, {0, 1}})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
