#include "oramsey/graph_ops.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "oramsey/errors.hpp"

namespace oramsey {

std::size_t edges_within(const OrderedGraph& g, const VertexSet& a) {
    a.check_within(g.vertex_count(), "density_within");
    const Bitset mask = a.to_bitset(g.vertex_count());
    std::size_t twice = 0;
    for (auto v : a) twice += g.neighbors(v).intersect_count(mask);
    return twice / 2;
}

std::size_t edges_between(const OrderedGraph& g, const VertexSet& a, const VertexSet& b) {
    a.check_within(g.vertex_count(), "density_between");
    b.check_within(g.vertex_count(), "density_between");
    const Bitset mb = b.to_bitset(g.vertex_count());
    for (auto v : a)
        if (mb.test(v)) throw DomainError("density_between: sets overlap at vertex " + std::to_string(v + 1));
    std::size_t e = 0;
    for (auto v : a) e += g.neighbors(v).intersect_count(mb);
    return e;
}

Rational density_within(const OrderedGraph& g, const VertexSet& a) {
    const auto e = edges_within(g, a);
    const auto k = static_cast<std::int64_t>(a.size());
    if (k < 2) return Rational(0);
    return Rational(static_cast<std::int64_t>(e), k * (k - 1) / 2);
}

Rational density_between(const OrderedGraph& g, const VertexSet& a, const VertexSet& b) {
    if (a.empty() || b.empty()) throw DomainError("density_between: empty vertex set");
    const auto e = edges_between(g, a, b);
    return Rational(static_cast<std::int64_t>(e),
                    static_cast<std::int64_t>(a.size()) * static_cast<std::int64_t>(b.size()));
}

OrderedGraph color_class(const ColoredCompleteGraph& c, Color which) {
    std::vector<Edge> edges;
    const auto n = c.vertex_count();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (c.color(u, v) == which) edges.push_back({u, v});
    return OrderedGraph(n, std::move(edges));
}

IsolatedRemoval remove_isolated(const OrderedGraph& g) {
    IsolatedRemoval out;
    out.mapping.assign(g.vertex_count(), std::nullopt);
    Vertex next = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.neighbors(v).any()) out.mapping[v] = next++;
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges()) edges.push_back({*out.mapping[e.u], *out.mapping[e.v]});
    out.graph = OrderedGraph(next, std::move(edges));
    return out;
}

std::size_t degeneracy(const OrderedGraph& g) {
    const auto n = g.vertex_count();
    std::vector<std::size_t> deg(n);
    std::vector<bool> gone(n, false);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::size_t best = 0;
    for (std::size_t step = 0; step < n; ++step) {
        Vertex pick = n;
        for (Vertex v = 0; v < n; ++v)
            if (!gone[v] && (pick == n || deg[v] < deg[pick])) pick = v;
        best = std::max(best, deg[pick]);
        gone[pick] = true;
        g.neighbors(pick).for_each([&](std::size_t w) {
            if (!gone[w]) --deg[w];
        });
    }
    return best;
}

std::vector<Vertex> least_topological_order(const Digraph& d) {
    const auto n = d.vertex_count();
    std::vector<std::size_t> indeg(n);
    for (const auto& a : d.arcs()) ++indeg[a.to];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<Vertex> order;
    order.reserve(n);
    while (!ready.empty()) {
        const Vertex v = ready.top();
        ready.pop();
        order.push_back(v);
        for (auto w : d.out(v))
            if (--indeg[w] == 0) ready.push(w);
    }
    if (order.size() != n) {
        auto cycle = d.find_cycle();
        std::string msg = "digraph is not acyclic; cycle:";
        for (auto v : *cycle) msg += " " + std::to_string(v + 1);
        throw CycleError(msg, std::vector<std::size_t>(cycle->begin(), cycle->end()));
    }
    return order;
}

OrderedPair ordered_pair_from_digraph(const Digraph& d) {
    OrderedPair out;
    out.topological_order = least_topological_order(d);
    const auto n = d.vertex_count();
    std::vector<Vertex> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[out.topological_order[k]] = k;
    std::vector<Edge> plus, minus;
    for (const auto& a : d.arcs()) {
        plus.push_back({pos[a.from], pos[a.to]});
        minus.push_back({n - 1 - pos[a.from], n - 1 - pos[a.to]});
    }
    out.plus = OrderedGraph(n, std::move(plus));
    out.minus = OrderedGraph(n, std::move(minus));
    return out;
}

}  // namespace oramsey
