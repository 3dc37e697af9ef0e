#include <benchmark/benchmark.h>

#include "cutcx/cutcomplex.hpp"
#include "cutcx/ordering.hpp"
#include "cutcx/reference.hpp"
#include "cutcx/shelling.hpp"

using namespace cutcx;

namespace {

std::vector<Facet> class_order(int n, int p)
{
    const ComplexParams params = make_params(n, p);
    return sort_facets(enumerate_facets(cycle_power(n, p), 3), params, omega_order(params));
}

void BM_enumerate_parallel(benchmark::State& state)
{
    const Graph g = cycle_power(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_facets(g, 3));
}

void BM_enumerate_reference(benchmark::State& state)
{
    const Graph g = cycle_power(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(reference::enumerate_facets(g, 3));
}

void BM_face_counts_parallel(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto facets = enumerate_facets(cycle_power(n, 2), 3);
    for (auto _ : state) benchmark::DoNotOptimize(face_counts(facets, n));
}

void BM_face_counts_reference(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto facets = enumerate_facets(cycle_power(n, 2), 3);
    for (auto _ : state) benchmark::DoNotOptimize(reference::face_counts(facets, n));
}

void BM_drop_sets_parallel(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto ordered = class_order(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(drop_sets(ordered, n));
}

void BM_drop_sets_reference(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const auto ordered = class_order(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(reference::drop_sets(ordered, n));
}

}  // namespace

BENCHMARK(BM_enumerate_parallel)->Arg(20)->Arg(40)->Arg(64);
BENCHMARK(BM_enumerate_reference)->Arg(20)->Arg(40)->Arg(64);
BENCHMARK(BM_face_counts_parallel)->Arg(12)->Arg(16);
BENCHMARK(BM_face_counts_reference)->Arg(12)->Arg(16);
BENCHMARK(BM_drop_sets_parallel)->Arg(20)->Arg(40)->Arg(64);
BENCHMARK(BM_drop_sets_reference)->Arg(20)->Arg(40)->Arg(64);

BENCHMARK_MAIN();
