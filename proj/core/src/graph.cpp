#include "oramsey/graph.hpp"

#include <algorithm>

#include "oramsey/errors.hpp"

namespace oramsey {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw DomainError("vertex set contains a duplicate vertex");
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet VertexSet::range(Vertex lo, Vertex hi) {
    VertexSet s;
    for (Vertex v = lo; v < hi; ++v) s.members_.push_back(v);
    return s;
}

VertexSet VertexSet::from_bitset(const Bitset& bits) {
    VertexSet s;
    s.members_ = bits.to_vector();
    return s;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::check_within(std::size_t n, const char* what) const {
    if (!members_.empty() && members_.back() >= n)
        throw DomainError(std::string(what) + ": vertex " + std::to_string(members_.back() + 1) +
                          " outside host range 1.." + std::to_string(n));
}

Bitset VertexSet::to_bitset(std::size_t n) const {
    Bitset b(n);
    for (auto v : members_) b.set(v);
    return b;
}

bool precedes(const VertexSet& a, const VertexSet& b) {
    return a.empty() || b.empty() || a.back() < b.front();
}

OrderedGraph::OrderedGraph(std::size_t n) : n_(n), adj_(n, Bitset(n)) {}

OrderedGraph::OrderedGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adj_(n, Bitset(n)) {
    for (auto& e : edges_) {
        if (e.u == e.v) throw DomainError("loop at vertex " + std::to_string(e.u + 1));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.v >= n)
            throw DomainError("edge (" + std::to_string(e.u + 1) + ", " + std::to_string(e.v + 1) +
                              ") outside vertex range 1.." + std::to_string(n));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw DomainError("duplicate edge (" + std::to_string(dup->u + 1) + ", " +
                          std::to_string(dup->v + 1) + ")");
    for (const auto& e : edges_) {
        adj_[e.u].set(e.v);
        adj_[e.v].set(e.u);
    }
}

OrderedGraph OrderedGraph::complete(std::size_t n) {
    std::vector<Edge> edges;
    edges.reserve(n * (n ? n - 1 : 0) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    return OrderedGraph(n, std::move(edges));
}

std::size_t OrderedGraph::max_degree() const {
    std::size_t best = 0;
    for (const auto& row : adj_) best = std::max(best, row.count());
    return best;
}

OrderedGraph OrderedGraph::induced(const VertexSet& vs) const {
    vs.check_within(n_, "induced subgraph");
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (adj_[vs[a]].test(vs[b])) edges.push_back({a, b});
    return OrderedGraph(vs.size(), std::move(edges));
}

std::string to_string(Color c) { return c == Color::Red ? "red" : "blue"; }

std::optional<Color> parse_color(std::string_view s) {
    if (s == "red" || s == "Red" || s == "R") return Color::Red;
    if (s == "blue" || s == "Blue" || s == "B") return Color::Blue;
    return std::nullopt;
}

ColoredCompleteGraph::ColoredCompleteGraph(std::size_t n, Color fill) : n_(n), red_(n, Bitset(n)) {
    if (fill == Color::Red)
        for (Vertex v = 0; v < n; ++v) {
            red_[v].set_all();
            red_[v].reset(v);
        }
}

ColoredCompleteGraph ColoredCompleteGraph::from_red_graph(const OrderedGraph& red) {
    ColoredCompleteGraph g(red.vertex_count(), Color::Blue);
    for (Vertex v = 0; v < g.n_; ++v) g.red_[v] = red.neighbors(v);
    return g;
}

ColoredCompleteGraph ColoredCompleteGraph::restrict(const VertexSet& vs) const {
    vs.check_within(n_, "restricted colouring");
    return from_function(vs.size(), [&](Vertex i, Vertex j) { return color(vs[i], vs[j]); });
}

Tournament::Tournament(std::size_t n) : n_(n), out_(n, Bitset(n)), in_(n, Bitset(n)) {}

void Tournament::add_arc(Vertex from, Vertex to) {
    out_[from].set(to);
    in_[to].set(from);
}

Tournament Tournament::transitive(std::size_t n) {
    return from_function(n, [](Vertex, Vertex) { return true; });
}

Tournament Tournament::induced(const VertexSet& vs) const {
    vs.check_within(n_, "induced tournament");
    return from_function(vs.size(), [&](Vertex a, Vertex b) { return beats(vs[a], vs[b]); });
}

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)), out_(n), in_(n) {
    for (const auto& a : arcs_) {
        if (a.from >= n || a.to >= n)
            throw DomainError("arc (" + std::to_string(a.from + 1) + ", " + std::to_string(a.to + 1) +
                              ") outside vertex range 1.." + std::to_string(n));
        if (a.from == a.to) throw DomainError("loop at vertex " + std::to_string(a.from + 1));
    }
    auto sorted = arcs_;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
        throw DomainError("duplicate arc (" + std::to_string(dup->from + 1) + ", " +
                          std::to_string(dup->to + 1) + ")");
    for (const auto& a : arcs_) {
        out_[a.from].push_back(a.to);
        in_[a.to].push_back(a.from);
    }
}

std::optional<std::vector<Vertex>> Digraph::find_cycle() const {
    // Iterative DFS with white/grey/black colouring.
    enum : unsigned char { White, Grey, Black };
    std::vector<unsigned char> state(n_, White);
    std::vector<Vertex> parent(n_, n_);
    for (Vertex root = 0; root < n_; ++root) {
        if (state[root] != White) continue;
        std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
        state[root] = Grey;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < out_[v].size()) {
                const Vertex w = out_[v][next++];
                if (state[w] == Grey) {
                    std::vector<Vertex> cycle{w};
                    for (Vertex x = v; x != w; x = parent[x]) cycle.push_back(x);
                    std::reverse(cycle.begin() + 1, cycle.end());
                    return cycle;
                }
                if (state[w] == White) {
                    state[w] = Grey;
                    parent[w] = v;
                    stack.push_back({w, 0});
                }
            } else {
                state[v] = Black;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

OrderedGraph Digraph::underlying() const {
    std::vector<Edge> edges;
    edges.reserve(arcs_.size());
    for (const auto& a : arcs_) edges.push_back({std::min(a.from, a.to), std::max(a.from, a.to)});
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return OrderedGraph(n_, std::move(edges));
}

}  // namespace oramsey
