#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "oramsey/graph.hpp"
#include "oramsey/rational.hpp"

namespace testing {

using oramsey::Edge;
using oramsey::OrderedGraph;
using oramsey::Vertex;

// Graph from 1-based edge pairs.
inline OrderedGraph graph(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<Edge> out;
    for (auto [u, v] : edges) out.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    return OrderedGraph(n, std::move(out));
}

inline OrderedGraph monotone_path(std::size_t n) {
    std::vector<Edge> out;
    for (Vertex v = 1; v < n; ++v) out.push_back({v - 1, v});
    return OrderedGraph(n, std::move(out));
}

// Calls f on every increasing k-tuple of [0, n) in lexicographic order until
// it returns true.
inline bool for_each_tuple(std::size_t n, std::size_t k, const std::function<bool(const std::vector<Vertex>&)>& f) {
    if (k > n) return false;
    std::vector<Vertex> t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = i;
    while (true) {
        if (f(t)) return true;
        std::size_t i = k;
        while (i > 0 && t[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++t[i - 1];
        for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
    }
}

// Every increasing tuple that maps pattern edges to host edges.
inline std::vector<std::vector<Vertex>> brute_embeddings(const OrderedGraph& host, const OrderedGraph& pattern) {
    std::vector<std::vector<Vertex>> out;
    for_each_tuple(host.vertex_count(), pattern.vertex_count(), [&](const std::vector<Vertex>& t) {
        for (const auto& e : pattern.edges())
            if (!host.adjacent(t[e.u], t[e.v])) return false;
        out.push_back(t);
        return false;
    });
    return out;
}

// Independent pair count over a vertex list.
inline std::size_t naive_edges_within(const OrderedGraph& g, const std::vector<Vertex>& a) {
    std::size_t e = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            for (const auto& edge : g.edges())
                if ((edge.u == a[i] && edge.v == a[j]) || (edge.u == a[j] && edge.v == a[i])) ++e;
    return e;
}

inline std::size_t naive_edges_between(const OrderedGraph& g, const std::vector<Vertex>& a,
                                       const std::vector<Vertex>& b) {
    std::size_t e = 0;
    for (auto x : a)
        for (auto y : b)
            for (const auto& edge : g.edges())
                if ((edge.u == x && edge.v == y) || (edge.u == y && edge.v == x)) ++e;
    return e;
}

}  // namespace testing
