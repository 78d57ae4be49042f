#include <benchmark/benchmark.h>

#include <locdom/generators.hpp>
#include <locdom/graph_io.hpp>
#include <locdom/order.hpp>

using namespace locdom;

namespace {

void BM_Graph6RoundTrip(benchmark::State& state) {
    Graph g = complement(generate(GraphFamily::cycle(static_cast<int>(state.range(0)))));
    for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(emit_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(10)->Arg(30)->Arg(64);

void BM_Dilworth(benchmark::State& state) {
    Graph g = generate(GraphFamily::ladder(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(dilworth_number(g));
}
BENCHMARK(BM_Dilworth)->Arg(8)->Arg(32);

}  // namespace
