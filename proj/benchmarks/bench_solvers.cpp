#include <benchmark/benchmark.h>

#include <locdom/constructions.hpp>
#include <locdom/generators.hpp>
#include <locdom/harness.hpp>
#include <locdom/solvers.hpp>
#include <locdom/trees.hpp>

using namespace locdom;

namespace {

void solve(benchmark::State& state, const Graph& g, CodeKind kind, bool pruning) {
    SolverOptions o;
    o.theorem_pruning = pruning;
    o.max_vertices = 64;
    int value = 0;
    for (auto _ : state) {
        auto r = minimum_code(g, kind, o);
        value = r.value;
        benchmark::DoNotOptimize(r);
    }
    state.counters["value"] = value;
}

void BM_LadderSLD(benchmark::State& state) {
    solve(state, generate(GraphFamily::ladder(static_cast<int>(state.range(0)))), CodeKind::sld, true);
}
BENCHMARK(BM_LadderSLD)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_LadderSLDNoPruning(benchmark::State& state) {
    solve(state, generate(GraphFamily::ladder(static_cast<int>(state.range(0)))), CodeKind::sld, false);
}
BENCHMARK(BM_LadderSLDNoPruning)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_CycleDLD(benchmark::State& state) {
    solve(state, generate(GraphFamily::cycle(static_cast<int>(state.range(0)))), CodeKind::dld, true);
}
BENCHMARK(BM_CycleDLD)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_SpernerSLD(benchmark::State& state) {
    solve(state, sperner_extremal(static_cast<int>(state.range(0))).graph, CodeKind::sld, true);
}
BENCHMARK(BM_SpernerSLD)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveVsBnb(benchmark::State& state) {
    Graph g = generate(GraphFamily::ladder(6));
    SolverOptions o;
    o.method = state.range(0) ? Method::exhaustive : Method::branch_and_bound;
    for (auto _ : state) benchmark::DoNotOptimize(minimum_code(g, CodeKind::dld, o));
}
BENCHMARK(BM_ExhaustiveVsBnb)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TreeLinear(benchmark::State& state) {
    Graph t = generate(GraphFamily::path(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tree_gamma_dld(t));
        benchmark::DoNotOptimize(tree_gamma_sld(t));
    }
}
BENCHMARK(BM_TreeLinear)->RangeMultiplier(2)->Range(8, 64);

void BM_Sweep(benchmark::State& state) {
    const std::string source = "all:" + std::to_string(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sweep(source));
}
BENCHMARK(BM_Sweep)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
