#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "oramsey/errors.hpp"
#include "oramsey/graph_ops.hpp"
#include "oramsey/random.hpp"

using namespace oramsey;
using testing::graph;

TEST_SUITE("core") {

TEST_CASE("bitset basics") {
    Bitset b(130);
    CHECK(b.none());
    b.set(0);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 3);
    CHECK(b.find_first() == 0);
    CHECK(b.find_next(1) == 64);
    CHECK(b.find_next(65) == 129);
    CHECK(b.find_next(130) == Bitset::npos);
    b.flip_all();
    CHECK(b.count() == 127);
    CHECK(!b.test(64));
    Bitset r(130);
    r.set_range(60, 70);
    CHECK(r.count() == 10);
    CHECK(r.intersect_count(b) == 9);
    r.subtract(b);
    CHECK(r.to_vector() == std::vector<std::size_t>{64});
}

TEST_CASE("ordered graph canonicalizes and validates") {
    OrderedGraph g(4, {{3, 1}, {0, 2}});
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 3}});
    CHECK(g.adjacent(3, 1));
    CHECK_THROWS_AS(OrderedGraph(3, {{0, 0}}), DomainError);
    CHECK_THROWS_AS(OrderedGraph(3, {{0, 3}}), DomainError);
    CHECK_THROWS_AS(OrderedGraph(3, {{0, 1}, {1, 0}}), DomainError);
}

TEST_CASE("vertex sets") {
    VertexSet s{4, 1, 2};
    CHECK(s.members() == std::vector<Vertex>{1, 2, 4});
    CHECK_THROWS_AS(VertexSet({1, 1}), DomainError);
    CHECK(precedes(VertexSet{0, 1}, VertexSet{2, 5}));
    CHECK_FALSE(precedes(VertexSet{0, 3}, VertexSet{2, 5}));
    CHECK_THROWS_AS(s.check_within(4, "s"), DomainError);
}

TEST_CASE("density_within examples") {
    CHECK(density_within(OrderedGraph::complete(4), VertexSet::range(0, 4)) == Rational(1));
    CHECK(density_within(graph(3, {{1, 2}}), VertexSet::range(0, 3)) == Rational(1, 3));
    CHECK(density_within(graph(3, {{1, 2}}), VertexSet{1}) == Rational(0));
    CHECK(density_within(graph(3, {{1, 2}}), VertexSet{}) == Rational(0));
    CHECK_THROWS_AS(density_within(graph(3, {{1, 2}}), VertexSet{0, 3}), DomainError);
}

TEST_CASE("density_between examples") {
    const auto g = graph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(density_between(g, VertexSet{0, 1}, VertexSet{2, 3}) == Rational(1));
    CHECK(density_between(OrderedGraph(4), VertexSet{0, 1}, VertexSet{2, 3}) == Rational(0));
    CHECK_THROWS_AS(density_between(g, VertexSet{0, 1}, VertexSet{1, 2}), DomainError);
    CHECK_THROWS_AS(density_between(g, VertexSet{}, VertexSet{1, 2}), DomainError);
}

TEST_CASE("densities agree with naive enumeration, exhaustive for n <= 6") {
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            std::vector<Edge> edges;
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if (mask >> k & 1) edges.push_back({pairs[k].first, pairs[k].second});
            OrderedGraph g(n, edges);
            const auto all = VertexSet::range(0, n);
            const auto e = testing::naive_edges_within(g, all.members());
            const Rational expect = n < 2 ? Rational(0) : Rational(static_cast<std::int64_t>(e),
                                                                   static_cast<std::int64_t>(n * (n - 1) / 2));
            REQUIRE(density_within(g, all) == expect);
            if (n >= 2) {
                const VertexSet a = VertexSet::range(0, n / 2);
                const VertexSet b = VertexSet::range(n / 2, n);
                const auto eb = testing::naive_edges_between(g, a.members(), b.members());
                REQUIRE(density_between(g, a, b) ==
                        Rational(static_cast<std::int64_t>(eb), static_cast<std::int64_t>(a.size() * b.size())));
            }
        }
    }
}

TEST_CASE("densities agree with naive enumeration, random for 7 <= n <= 12") {
    Rng rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 7 + uniform_below(rng, 6);
        const auto g = random_ordered_graph(rng, n, uniform01(rng));
        std::vector<Vertex> a, b;
        for (Vertex v = 0; v < n; ++v) {
            const auto r = uniform_below(rng, 3);
            if (r == 0) a.push_back(v);
            if (r == 1) b.push_back(v);
        }
        const auto e = testing::naive_edges_within(g, a);
        const Rational expect =
            a.size() < 2 ? Rational(0)
                         : Rational(static_cast<std::int64_t>(e), static_cast<std::int64_t>(a.size() * (a.size() - 1) / 2));
        REQUIRE(density_within(g, VertexSet(a)) == expect);
        if (!a.empty() && !b.empty()) {
            const auto eb = testing::naive_edges_between(g, a, b);
            REQUIRE(density_between(g, VertexSet(a), VertexSet(b)) ==
                    Rational(static_cast<std::int64_t>(eb), static_cast<std::int64_t>(a.size() * b.size())));
        }
    }
}

TEST_CASE("color classes partition all pairs") {
    const ColoredCompleteGraph red(6, Color::Red);
    CHECK(color_class(red, Color::Red) == OrderedGraph::complete(6));
    CHECK(color_class(red, Color::Blue).edge_count() == 0);
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + uniform_below(rng, 20);
        const auto c = random_coloring(rng, n, uniform01(rng));
        CHECK(color_class(c, Color::Red).edge_count() + color_class(c, Color::Blue).edge_count() == n * (n - 1) / 2);
    }
}

TEST_CASE("remove_isolated") {
    const auto p = testing::monotone_path(4);
    auto same = remove_isolated(p);
    CHECK(same.graph == p);
    for (Vertex v = 0; v < 4; ++v) CHECK(same.mapping[v] == std::optional<Vertex>(v));

    auto r = remove_isolated(graph(4, {{2, 4}}));
    CHECK(r.graph == graph(2, {{1, 2}}));
    CHECK(r.mapping[0] == std::nullopt);
    CHECK(r.mapping[1] == std::optional<Vertex>(0));
    CHECK(r.mapping[3] == std::optional<Vertex>(1));

    auto e = remove_isolated(OrderedGraph(5));
    CHECK(e.graph.vertex_count() == 0);
}

TEST_CASE("degeneracy") {
    CHECK(degeneracy(OrderedGraph(5)) == 0);
    for (std::size_t k = 1; k <= 7; ++k) CHECK(degeneracy(OrderedGraph::complete(k)) == k - 1);
    CHECK(degeneracy(testing::monotone_path(6)) == 1);
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = random_ordered_graph(rng, 2 + uniform_below(rng, 15), uniform01(rng));
        CHECK(degeneracy(g) <= g.max_degree());
    }
    // random forests: attach each vertex to an earlier one or leave it alone
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + uniform_below(rng, 20);
        std::vector<Edge> edges;
        for (Vertex v = 1; v < n; ++v)
            if (coin(rng)) edges.push_back({uniform_below(rng, v), v});
        CHECK(degeneracy(OrderedGraph(n, edges)) <= 1);
    }
}

TEST_CASE("ordered_pair_from_digraph") {
    auto one = ordered_pair_from_digraph(Digraph(2, {{0, 1}}));
    CHECK(one.plus == graph(2, {{1, 2}}));
    CHECK(one.minus == graph(2, {{1, 2}}));

    auto tri = ordered_pair_from_digraph(Digraph(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(tri.plus == OrderedGraph::complete(3));
    CHECK(tri.minus == OrderedGraph::complete(3));

    try {
        ordered_pair_from_digraph(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
        FAIL("expected a cycle error");
    } catch (const CycleError& e) {
        CHECK(e.cycle().size() == 3);
    }

    // least topological order picks the smallest available source
    const Digraph d(4, {{2, 0}, {3, 1}});
    CHECK(least_topological_order(d) == std::vector<Vertex>{2, 0, 3, 1});
    auto pr = ordered_pair_from_digraph(d);
    CHECK(pr.plus.vertex_count() == 4);
    CHECK(pr.plus.edge_count() == 2);
    CHECK(pr.plus == graph(4, {{1, 2}, {3, 4}}));
    CHECK(pr.minus == graph(4, {{1, 2}, {3, 4}}));
}

TEST_CASE("ordered pair relabelling is a bijection along the order") {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + uniform_below(rng, 10);
        std::vector<Arc> arcs;
        // arcs from lower to higher in a random hidden order keep it acyclic
        std::vector<Vertex> hidden(n);
        for (Vertex v = 0; v < n; ++v) hidden[v] = v;
        for (std::size_t k = n; k > 1; --k) std::swap(hidden[k - 1], hidden[uniform_below(rng, k)]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (coin(rng)) arcs.push_back({hidden[i], hidden[j]});
        const Digraph d(n, arcs);
        auto pr = ordered_pair_from_digraph(d);
        REQUIRE(pr.plus.vertex_count() == n);
        REQUIRE(pr.plus.edge_count() == arcs.size());
        REQUIRE(pr.minus.edge_count() == arcs.size());
        std::vector<Vertex> pos(n);
        for (std::size_t k = 0; k < n; ++k) pos[pr.topological_order[k]] = k;
        for (const auto& a : arcs) {
            REQUIRE(pos[a.from] < pos[a.to]);
            REQUIRE(pr.plus.adjacent(pos[a.from], pos[a.to]));
            REQUIRE(pr.minus.adjacent(n - 1 - pos[a.from], n - 1 - pos[a.to]));
        }
    }
}

TEST_CASE("tournament basics") {
    const auto t = Tournament::transitive(4);
    CHECK(t.beats(0, 3));
    CHECK_FALSE(t.beats(3, 0));
    const auto sub = t.induced(VertexSet{1, 3});
    CHECK(sub.vertex_count() == 2);
    CHECK(sub.beats(0, 1));
}

TEST_CASE("digraph cycles") {
    CHECK(Digraph(3, {{0, 1}, {1, 2}}).is_acyclic());
    const auto cyc = Digraph(3, {{0, 1}, {1, 2}, {2, 0}}).find_cycle();
    REQUIRE(cyc);
    CHECK(cyc->size() == 3);
    CHECK_THROWS_AS(Digraph(2, {{0, 1}, {0, 1}}), DomainError);
    CHECK_THROWS_AS(Digraph(2, {{1, 1}}), DomainError);
}

TEST_CASE("seeded generators are reproducible") {
    Rng a(42), b(42);
    CHECK(random_coloring(a, 15, 0.5) == random_coloring(b, 15, 0.5));
    CHECK(random_tournament(a, 9) == random_tournament(b, 9));
    const auto s = sample_subset(a, 20, 7);
    CHECK(s.size() == 7);
    CHECK(std::is_sorted(s.begin(), s.end()));
    CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
}

}
