#include <benchmark/benchmark.h>

#include "oramsey/constructions.hpp"
#include "oramsey/embed.hpp"
#include "oramsey/exact.hpp"
#include "oramsey/random.hpp"
#include "oramsey/skeleton.hpp"

using namespace oramsey;

namespace {

OrderedGraph monotone_path(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
    return OrderedGraph(n, std::move(edges));
}

void BM_FindEmbedding(benchmark::State& state) {
    Rng rng(1);
    const auto host = random_ordered_graph(rng, static_cast<std::size_t>(state.range(0)), 0.3);
    const auto pattern = OrderedGraph::complete(5);
    for (auto _ : state) benchmark::DoNotOptimize(find_ordered_embedding(host, pattern));
}
BENCHMARK(BM_FindEmbedding)->Arg(20)->Arg(40)->Arg(80);

void BM_CountEmbeddings(benchmark::State& state) {
    Rng rng(2);
    const auto host = random_ordered_graph(rng, static_cast<std::size_t>(state.range(0)), 0.5);
    const auto pattern = monotone_path(4);
    for (auto _ : state) benchmark::DoNotOptimize(count_embeddings(host, pattern, 1'000'000'000));
}
BENCHMARK(BM_CountEmbeddings)->Arg(20)->Arg(40);

void BM_Greedy(benchmark::State& state) {
    Rng rng(3);
    const std::size_t size = static_cast<std::size_t>(state.range(0));
    const auto pattern = monotone_path(6);
    SlotSystem slots;
    for (std::size_t i = 0; i < 6; ++i) slots.slots.push_back(VertexSet::range(i * size, (i + 1) * size));
    const auto host = random_ordered_graph(rng, 6 * size, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(greedy_embed_or_sparse_pair(host, pattern, slots, Rational(1, 3)));
}
BENCHMARK(BM_Greedy)->Arg(50)->Arg(200);

void BM_CliqueTuples(benchmark::State& state) {
    Rng rng(4);
    const auto host = random_ordered_graph(rng, static_cast<std::size_t>(state.range(0)), 0.7);
    for (auto _ : state) {
        CliqueTupleIndex index(host.vertex_count(), 1);
        benchmark::DoNotOptimize(enumerate_clique_tuples(host, 1, 1'000'000, index));
    }
}
BENCHMARK(BM_CliqueTuples)->Arg(20)->Arg(30);

void BM_ExactK3(benchmark::State& state) {
    const auto k3 = OrderedGraph::complete(3);
    for (auto _ : state) benchmark::DoNotOptimize(exact_ordered_ramsey(k3, k3, 7));
}
BENCHMARK(BM_ExactK3)->Unit(benchmark::kMillisecond);

void BM_ContainsSubdivision(benchmark::State& state) {
    Rng rng(5);
    const auto t = random_tournament(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(contains_subdivision(t, 4));
}
BENCHMARK(BM_ContainsSubdivision)->Arg(12)->Arg(20);

}  // namespace
BENCHMARK_MAIN();
