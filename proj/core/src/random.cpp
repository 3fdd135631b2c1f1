#include "oramsey/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace oramsey {

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % n;
}

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

bool coin(Rng& rng) { return (rng() >> 63) != 0; }

std::vector<Vertex> sample_subset(Rng& rng, std::size_t n, std::size_t k) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    k = std::min(k, n);
    for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[i + uniform_below(rng, n - i)]);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
}

OrderedGraph random_ordered_graph(Rng& rng, std::size_t n, double p) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            if (uniform01(rng) < p) edges.push_back({u, v});
    return OrderedGraph(n, std::move(edges));
}

ColoredCompleteGraph random_coloring(Rng& rng, std::size_t n, double p_red) {
    return ColoredCompleteGraph::from_function(
        n, [&](Vertex, Vertex) { return uniform01(rng) < p_red ? Color::Red : Color::Blue; });
}

Tournament random_tournament(Rng& rng, std::size_t n) {
    return Tournament::from_function(n, [&](Vertex, Vertex) { return coin(rng); });
}

}  // namespace oramsey
