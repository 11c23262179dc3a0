#include <benchmark/benchmark.h>

#include <cmath>

#include "lcllab/depsim.hpp"
#include "lcllab/detectors.hpp"
#include "lcllab/ghz.hpp"
#include "lcllab/promise.hpp"

using namespace lcllab;

namespace {

BipartiteInstance random_instance(int whites, int max_white_degree, uint64_t seed) {
    KeyedRng rng(seed, 0xb1);
    std::vector<int> wdeg(whites);
    int total = 0;
    for (int w = 0; w < whites; ++w) {
        wdeg[w] = 1 + static_cast<int>(rng.uniform(max_white_degree));
        total += wdeg[w];
    }
    while (total % 3 != 0) {
        int w = static_cast<int>(rng.uniform(whites));
        if (wdeg[w] < max_white_degree) {
            ++wdeg[w];
            ++total;
        }
    }
    std::vector<int> stubs;
    for (int w = 0; w < whites; ++w)
        for (int i = 0; i < wdeg[w]; ++i) stubs.push_back(w);
    for (size_t i = stubs.size(); i > 1; --i)
        std::swap(stubs[i - 1], stubs[rng.uniform(i)]);
    BipartiteInstance b = BipartiteInstance::make(whites, total / 3);
    for (size_t i = 0; i < stubs.size(); ++i)
        b.add_edge(stubs[i], static_cast<int>(i / 3));
    return b;
}

Lift sized_lift(int whites) {
    BipartiteInstance b = random_instance(whites, 8, whites);
    int n = b.num_whites + b.num_blacks;
    int h = static_cast<int>(std::ceil(std::log2(std::max(2, n))));
    return lift(b, h);
}

void BM_BuildTreeGadget(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(build_tree_gadget(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildTreeGadget)->Arg(5)->Arg(10)->Arg(15);

void BM_CheckProper(benchmark::State& state) {
    Lift lifted = sized_lift(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(check_proper(lifted.graph));
    state.SetComplexityN(lifted.graph.num_nodes());
}
BENCHMARK(BM_CheckProper)->Arg(4)->Arg(16)->Arg(64)->Complexity();

void BM_SolveBadTree(benchmark::State& state) {
    LabeledGraph g = build_tree_gadget(static_cast<int>(state.range(0)));
    std::vector<bool> marks(g.num_nodes(), false);
    marks[g.num_nodes() / 2] = true;
    for (auto _ : state) benchmark::DoNotOptimize(solve_badtree(g, marks));
}
BENCHMARK(BM_SolveBadTree)->Arg(4)->Arg(8)->Arg(12);

void BM_SolveBadGraph(benchmark::State& state) {
    Lift lifted = sized_lift(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve_badgraph(lifted.graph));
    state.SetComplexityN(lifted.graph.num_nodes());
}
BENCHMARK(BM_SolveBadGraph)->Arg(4)->Arg(16)->Arg(64)->Complexity();

void BM_GhzGame(benchmark::State& state) {
    KeyedRng rng(1);
    int in = 0;
    for (auto _ : state) {
        GhzTriple tr;
        in = (in + 1) & 7;
        int out = 0;
        for (int q = 0; q < 3; ++q) out = out * 2 + tr.measure(q, (in >> q) & 1, rng);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(BM_GhzGame);

void BM_QuantumIterGhz(benchmark::State& state) {
    BipartiteInstance b = random_instance(static_cast<int>(state.range(0)), 8, 3);
    uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(quantum_solve_iterghz(b, ++seed));
}
BENCHMARK(BM_QuantumIterGhz)->Arg(16)->Arg(64)->Arg(256);

void BM_SolvePi(benchmark::State& state) {
    Lift lifted = sized_lift(static_cast<int>(state.range(0)));
    uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(solve_pi(lifted.graph, ++seed));
    state.SetComplexityN(lifted.graph.num_nodes());
}
BENCHMARK(BM_SolvePi)->Arg(4)->Arg(16)->Arg(64)->Complexity();

void BM_Cluster(benchmark::State& state) {
    Lift lifted = sized_lift(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(cluster(lifted.graph, 3, 0.4));
}
BENCHMARK(BM_Cluster)->Arg(4)->Arg(16);

} // namespace

BENCHMARK_MAIN();
