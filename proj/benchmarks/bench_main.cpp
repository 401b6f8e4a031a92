#include <benchmark/benchmark.h>

#include "percograph/components.hpp"
#include "percograph/degree_sequence.hpp"
#include "percograph/graph.hpp"
#include "percograph/percolation.hpp"
#include "percograph/rng.hpp"

namespace {

using namespace percograph;

void BM_switch_chain(benchmark::State& state) {
    const DegreeSequence seq = DegreeSequence::regular(static_cast<int>(state.range(0)), 10);
    SimpleGraph g = havel_hakimi(seq);
    RandomStream rng = derive_stream(12345);
    for (auto _ : state) {
        long long accepted = 0;
        for (int i = 0; i < 10000; ++i) accepted += switch_step(g, rng) ? 1 : 0;
        benchmark::DoNotOptimize(accepted);
    }
    state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_switch_chain)->Arg(1000)->Arg(10000);

void BM_percolate_components(benchmark::State& state) {
    const DegreeSequence seq = DegreeSequence::regular(static_cast<int>(state.range(0)), 10);
    RandomStream host_rng = derive_stream(777);
    SimpleGraph g = sample_uniform(seq, host_rng);
    RandomStream rng = derive_stream(778);
    for (auto _ : state) {
        const EdgeColoring coloring = percolate(g, 0.12, rng);
        const ComponentStats stats = component_stats(coloring);
        benchmark::DoNotOptimize(stats.l1);
    }
}
BENCHMARK(BM_percolate_components)->Arg(1000)->Arg(10000);

} // namespace

BENCHMARK_MAIN();
