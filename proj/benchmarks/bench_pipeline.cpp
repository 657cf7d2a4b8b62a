#include <benchmark/benchmark.h>

#include "planiv/corpus.hpp"
#include "planiv/generator.hpp"
#include "planiv/inner_decomposition.hpp"
#include "planiv/planarity.hpp"
#include "planiv/rep_builder.hpp"
#include "planiv/rep_verify.hpp"
#include "planiv/triangle_split.hpp"

namespace {

using namespace planiv;

void BM_PlanarEmbed(benchmark::State& state) {
    Graph g = gen_triangulation({11, static_cast<int>(state.range(0)), 0}).graph();
    for (auto _ : state) {
        auto emb = planar_embed(g);
        benchmark::DoNotOptimize(emb);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PlanarEmbed)->Arg(30)->Arg(60)->Arg(120)->Arg(240)->Complexity();

void BM_BuildStacked(benchmark::State& state) {
    Graph g = gen_triangulation({7, static_cast<int>(state.range(0)), 0}).graph();
    for (auto _ : state) {
        auto rep = build(g);
        benchmark::DoNotOptimize(rep);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildStacked)->Arg(30)->Arg(60)->Arg(120)->Complexity();

void BM_BuildFlipped(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = gen_triangulation({13, n, 3 * n}).graph();
    for (auto _ : state) {
        auto rep = build(g);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_BuildFlipped)->Arg(20)->Arg(40)->Arg(60);

void BM_DecomposeIcosahedron(benchmark::State& state) {
    Graph g = corpus::icosahedron();
    Triangulation t = triangulation_from_graph(g);
    auto walk = faces(t.embedding)[t.embedding.outer_face];
    std::array<int, 3> outer{walk[0], walk[1], walk[2]};
    std::sort(outer.begin(), outer.end());
    for (auto _ : state) {
        auto d = decompose_inner(t, outer);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_DecomposeIcosahedron);

void BM_VerifySweep(benchmark::State& state) {
    Graph g = gen_triangulation({5, static_cast<int>(state.range(0)), 0}).graph();
    Representation rep = build(g);
    Triangulation t = triangulation_from_graph(g);
    for (auto _ : state) {
        auto report = check_invariants(rep, t);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_VerifySweep)->Arg(60)->Arg(120);

}  // namespace

BENCHMARK_MAIN();
