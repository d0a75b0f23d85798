#include <benchmark/benchmark.h>

#include "vcr/fpt.hpp"
#include "vcr/generators.hpp"
#include "vcr/polysolve.hpp"
#include "vcr/reductions.hpp"

namespace {

using namespace vcr;

ReconfigInstance make_instance(GraphFamily family, int n, std::uint64_t seed, int extra_cap) {
    GenSpec spec;
    spec.family = family;
    spec.n = n;
    if (family == GraphFamily::bounded_degree) spec.degree_bound = 3;
    spec.seed = seed;
    Graph g = gen_graph(spec);
    auto [s, t] = gen_cover_pair(g, seed ^ 0x5bd1e995);
    int k = std::max(s.size(), t.size()) + extra_cap;
    return ReconfigInstance(g, s, t, k);
}

void BM_solve_tree(benchmark::State& state) {
    auto inst = make_instance(GraphFamily::tree, static_cast<int>(state.range(0)), 42, 1);
    for (auto _ : state) benchmark::DoNotOptimize(solve_tree(inst));
}
BENCHMARK(BM_solve_tree)->Arg(16)->Arg(64)->Arg(256);

void BM_solve_cactus(benchmark::State& state) {
    auto inst = make_instance(GraphFamily::cactus, static_cast<int>(state.range(0)), 43, 2);
    for (auto _ : state) benchmark::DoNotOptimize(solve_cactus(inst));
}
BENCHMARK(BM_solve_cactus)->Arg(16)->Arg(64)->Arg(256);

void BM_oracle_bfs(benchmark::State& state) {
    auto inst = make_instance(GraphFamily::bounded_degree, static_cast<int>(state.range(0)), 44, 2);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::bfs_shortest(inst));
}
BENCHMARK(BM_oracle_bfs)->Arg(10)->Arg(14)->Arg(18);

void BM_convert_to_nice(benchmark::State& state) {
    GenSpec spec;
    spec.family = GraphFamily::bounded_degree;
    spec.n = static_cast<int>(state.range(0));
    spec.degree_bound = 4;
    spec.seed = 45;
    Graph g = gen_graph(spec);
    auto [s, t_unused] = gen_cover_pair(g, 46);
    EditSequence walk = oracle::random_walk_harvest(g, s, s.size() + 2, 12, 47);
    VertexCover t(g, trace(g, s, walk).final_set);
    for (auto _ : state) benchmark::DoNotOptimize(convert_to_nice(g, s, t, walk));
}
BENCHMARK(BM_convert_to_nice)->Arg(10)->Arg(14)->Arg(20);

void BM_solve_fpt(benchmark::State& state) {
    // Target a cover a short walk away so the annotated-instance machinery
    // actually enumerates.
    GenSpec spec;
    spec.family = GraphFamily::bounded_degree;
    spec.n = 10;
    spec.degree_bound = 3;
    spec.seed = 48;
    Graph g = gen_graph(spec);
    auto [s, t_unused] = gen_cover_pair(g, 49);
    int k = s.size() + 1;
    EditSequence walk = oracle::random_walk_harvest(g, s, k, 4, 51);
    VertexCover t(g, trace(g, s, walk).final_set);
    ReconfigInstance inst(g, s, t, k, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Budget budget{500'000'000, 0};
        benchmark::DoNotOptimize(solve_fpt(inst, budget));
    }
}
BENCHMARK(BM_solve_fpt)->Arg(4)->Arg(6);

void BM_build_wk(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        NecklaceGadget w = build_wk(k);
        benchmark::DoNotOptimize(wk_witness_sequence(w));
    }
}
BENCHMARK(BM_build_wk)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
