#include <benchmark/benchmark.h>

#include <jfish/enumerate.hpp>
#include <jfish/families.hpp>
#include <jfish/finders.hpp>
#include <jfish/graph_io.hpp>
#include <jfish/hopping.hpp>
#include <jfish/lemmas.hpp>
#include <jfish/stream_rng.hpp>

namespace {

using namespace jfish;

// A reproducible mid-density instance in the theorem range.
Graph sample_graph(int n, int p1000, uint64_t stream) {
    StreamRng rng(7, stream);
    return sample_gnp(n, p1000, rng);
}

void BM_ParseGraph6(benchmark::State& state) {
    std::string code = encode_graph6(gen_H(4));
    for (auto _ : state)
        benchmark::DoNotOptimize(parse_graph6(code));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ParseGraph6);

void BM_EncodeGraph6(benchmark::State& state) {
    Graph g = gen_H(4);
    for (auto _ : state)
        benchmark::DoNotOptimize(encode_graph6(g));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_EncodeGraph6);

void BM_LongestCycle(benchmark::State& state) {
    Graph g = sample_graph(static_cast<int>(state.range(0)), 450, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(longest_cycle(g));
}
BENCHMARK(BM_LongestCycle)->Arg(10)->Arg(13)->Arg(15);

void BM_JellyfishHit(benchmark::State& state) {
    Graph g = sample_graph(14, 550, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_spanning_jellyfish(g));
}
BENCHMARK(BM_JellyfishHit);

// The expensive direction: proving no spanning jellyfish exists in the
// sharpness family by exhausting the search.
void BM_JellyfishRefute(benchmark::State& state) {
    Graph g = gen_H(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(find_spanning_jellyfish(g));
}
BENCHMARK(BM_JellyfishRefute)->Arg(3)->Arg(4);

void BM_OctopusRefute(benchmark::State& state) {
    Graph g = gen_F(4, 3, 3, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_spanning_octopus(g));
}
BENCHMARK(BM_OctopusRefute);

void BM_ComputeXy(benchmark::State& state) {
    Graph g = sample_graph(static_cast<int>(state.range(0)), 350, 3);
    MarkedCycle mc = l_maximal_cycle(g, VertexSet{});
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_xy(g, mc.cycle.vertices));
}
BENCHMARK(BM_ComputeXy)->Arg(10)->Arg(14);

void BM_CycleSpacingSweep(benchmark::State& state) {
    for (auto _ : state) {
        SpacingSweep s = sweep_cycle_spacing(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(s.configs);
    }
}
BENCHMARK(BM_CycleSpacingSweep)->Arg(10)->Arg(14);

void BM_SampleGnp(benchmark::State& state) {
    uint64_t stream = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_graph(15, 450, stream++));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SampleGnp);

} // namespace

BENCHMARK_MAIN();
