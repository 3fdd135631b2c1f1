#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oramsey/bitset.hpp"

namespace oramsey {

// Vertices are 0-based inside the library. Files, JSON and the CLI use
// 1-based indices; the conversion happens in io/certificate code only.
using Vertex = std::size_t;

struct Edge {
    Vertex u;
    Vertex v;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted set of distinct vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    // Sorts; throws DomainError on duplicates.
    VertexSet(std::vector<Vertex> members);
    VertexSet(std::initializer_list<Vertex> members);

    static VertexSet range(Vertex lo, Vertex hi);  // [lo, hi)
    static VertexSet from_bitset(const Bitset& bits);

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    Vertex operator[](std::size_t i) const { return members_[i]; }
    Vertex front() const { return members_.front(); }
    Vertex back() const { return members_.back(); }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    const std::vector<Vertex>& members() const noexcept { return members_; }

    bool contains(Vertex v) const;
    // Throws DomainError if any member is >= n.
    void check_within(std::size_t n, const char* what) const;
    Bitset to_bitset(std::size_t n) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

// True iff every element of a is below every element of b.
bool precedes(const VertexSet& a, const VertexSet& b);

class OrderedGraph {
public:
    OrderedGraph() = default;
    explicit OrderedGraph(std::size_t n);
    // Edges may come in any order with either endpoint first; they are
    // stored canonically (u < v, sorted). Throws DomainError on loops,
    // out-of-range endpoints or duplicates.
    OrderedGraph(std::size_t n, std::vector<Edge> edges);

    static OrderedGraph complete(std::size_t n);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
    const Bitset& neighbors(Vertex v) const { return adj_[v]; }
    std::span<const Bitset> adjacency() const noexcept { return adj_; }
    std::size_t degree(Vertex v) const { return adj_[v].count(); }
    std::size_t max_degree() const;

    // Subgraph induced on vs, relabelled 0..|vs|-1 in increasing order.
    OrderedGraph induced(const VertexSet& vs) const;

    friend bool operator==(const OrderedGraph& a, const OrderedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Bitset> adj_;
};

enum class Color { Red, Blue };

constexpr Color other(Color c) noexcept { return c == Color::Red ? Color::Blue : Color::Red; }
std::string to_string(Color c);            // "red" / "blue"
std::optional<Color> parse_color(std::string_view s);

// Red/Blue colouring of every pair of [N].
class ColoredCompleteGraph {
public:
    ColoredCompleteGraph() = default;
    ColoredCompleteGraph(std::size_t n, Color fill);

    template <typename F>  // F(Vertex i, Vertex j) -> Color, called with i < j
    static ColoredCompleteGraph from_function(std::size_t n, F&& f) {
        ColoredCompleteGraph g(n, Color::Blue);
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i)
                if (f(i, j) == Color::Red) {
                    g.red_[i].set(j);
                    g.red_[j].set(i);
                }
        return g;
    }
    static ColoredCompleteGraph from_red_graph(const OrderedGraph& red);

    std::size_t vertex_count() const noexcept { return n_; }
    Color color(Vertex i, Vertex j) const { return red_[i].test(j) ? Color::Red : Color::Blue; }
    // Rows of the red class; blue is the complement off the diagonal.
    const Bitset& red_row(Vertex v) const { return red_[v]; }

    ColoredCompleteGraph restrict(const VertexSet& vs) const;

    friend bool operator==(const ColoredCompleteGraph&, const ColoredCompleteGraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Bitset> red_;
};

class Tournament {
public:
    Tournament() = default;

    template <typename F>  // F(Vertex u, Vertex v) -> bool, u < v; true means u -> v
    static Tournament from_function(std::size_t n, F&& f) {
        Tournament t(n);
        for (Vertex v = 1; v < n; ++v)
            for (Vertex u = 0; u < v; ++u) {
                if (f(u, v)) t.add_arc(u, v);
                else t.add_arc(v, u);
            }
        return t;
    }
    // Transitive tournament where u -> v iff u < v.
    static Tournament transitive(std::size_t n);

    std::size_t vertex_count() const noexcept { return n_; }
    bool beats(Vertex u, Vertex v) const { return out_[u].test(v); }
    const Bitset& out_neighbors(Vertex v) const { return out_[v]; }
    const Bitset& in_neighbors(Vertex v) const { return in_[v]; }

    // Sub-tournament on vs, relabelled in increasing order.
    Tournament induced(const VertexSet& vs) const;

    friend bool operator==(const Tournament& a, const Tournament& b) {
        return a.n_ == b.n_ && a.out_ == b.out_;
    }

private:
    explicit Tournament(std::size_t n);
    void add_arc(Vertex from, Vertex to);

    std::size_t n_ = 0;
    std::vector<Bitset> out_;
    std::vector<Bitset> in_;
};

struct Arc {
    Vertex from;
    Vertex to;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

class Digraph {
public:
    Digraph() = default;
    // Arcs are kept in the given order. Throws DomainError on loops,
    // out-of-range endpoints or duplicate arcs.
    Digraph(std::size_t n, std::vector<Arc> arcs);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    const std::vector<Vertex>& out(Vertex v) const { return out_[v]; }
    const std::vector<Vertex>& in(Vertex v) const { return in_[v]; }

    // Some directed cycle, or nullopt when acyclic.
    std::optional<std::vector<Vertex>> find_cycle() const;
    bool is_acyclic() const { return !find_cycle().has_value(); }

    // Underlying simple graph with the given labels as the order.
    OrderedGraph underlying() const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
};

}  // namespace oramsey
