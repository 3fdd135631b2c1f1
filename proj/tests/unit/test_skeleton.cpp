#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "helpers.hpp"
#include "oramsey/errors.hpp"
#include "oramsey/graph_ops.hpp"
#include "oramsey/random.hpp"
#include "oramsey/skeleton.hpp"

using namespace oramsey;

namespace {

Skeleton k11_skeleton() {
    return Skeleton{{3, 7}, {VertexSet{0, 1, 2}, VertexSet{4, 5, 6}, VertexSet{8, 9, 10}}, 2, 3};
}

bool is_clique(const OrderedGraph& g, const std::vector<Vertex>& t) {
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
            if (!g.adjacent(t[i], t[j])) return false;
    return true;
}

struct BruteBucket {
    std::uint64_t count = 0;
    std::vector<std::set<Vertex>> positions;
};

std::map<std::vector<Vertex>, BruteBucket> brute_buckets(const OrderedGraph& g, std::size_t a) {
    std::map<std::vector<Vertex>, BruteBucket> out;
    testing::for_each_tuple(g.vertex_count(), 4 * a + 1, [&](const std::vector<Vertex>& t) {
        if (!is_clique(g, t)) return false;
        std::vector<Vertex> key;
        for (std::size_t k = 1; k < t.size(); k += 2) key.push_back(t[k]);
        auto& b = out[key];
        b.positions.resize(2 * a + 1);
        ++b.count;
        for (std::size_t k = 0; k < t.size(); k += 2) b.positions[k / 2].insert(t[k]);
        return false;
    });
    return out;
}

OrderedGraph planted_clique(Rng& rng, std::size_t n, double p, Vertex lo, Vertex hi) {
    auto g = random_ordered_graph(rng, n, p);
    std::vector<Edge> edges = g.edges();
    for (Vertex u = lo; u < hi; ++u)
        for (Vertex v = u + 1; v < hi; ++v) edges.push_back({u, v});
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return OrderedGraph(n, std::move(edges));
}

bool pairwise(const OrderedGraph& g, const VertexSet& s, bool edge) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]) != edge) return false;
    return true;
}

}  // namespace

TEST_SUITE("skeleton") {

TEST_CASE("verify_skeleton examples") {
    const auto k11 = OrderedGraph::complete(11);
    const auto s = k11_skeleton();
    CHECK(verify_skeleton(k11, s));

    auto short_block = s;
    short_block.blocks[2] = VertexSet{8, 9};
    const auto r = verify_skeleton(k11, short_block);
    CHECK(!r);
    CHECK(r.condition == 'b');
    CHECK(r.block == std::optional<std::size_t>(2));

    std::vector<Edge> edges;
    for (Vertex u = 0; u < 11; ++u)
        for (Vertex v = u + 1; v < 11; ++v)
            if (!(u == 3 && v == 8)) edges.push_back({u, v});
    const auto missing = verify_skeleton(OrderedGraph(11, edges), s);
    CHECK(!missing);
    CHECK(missing.condition == 'c');
    CHECK(missing.pair == std::optional<std::pair<Vertex, Vertex>>({3, 8}));
    CHECK(missing.detail.find("(4, 9)") != std::string::npos);
}

TEST_CASE("verify_skeleton interleaving") {
    const auto k11 = OrderedGraph::complete(11);
    auto s = k11_skeleton();
    s.blocks[1] = VertexSet{4, 5, 8};
    const auto r = verify_skeleton(k11, s);
    CHECK(!r);
    CHECK(r.condition == 'a');

    auto wrong_count = k11_skeleton();
    wrong_count.blocks.pop_back();
    CHECK(verify_skeleton(k11, wrong_count).condition == 'a');
}

TEST_CASE("clique tuple index rejects non-cliques") {
    const auto g = testing::graph(5, {{1, 2}});
    CliqueTupleIndex idx(5, 1);
    const std::vector<Vertex> t{0, 1, 2, 3, 4};
    CHECK_THROWS_AS(idx.add(g, t), DomainError);
    const std::vector<Vertex> unsorted{0, 2, 1, 3, 4};
    CHECK_THROWS_AS(idx.add(OrderedGraph::complete(5), unsorted), DomainError);
    idx.add(OrderedGraph::complete(5), t);
    CHECK(idx.tuple_count() == 1);
}

TEST_CASE("tuple enumeration matches brute-force buckets") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 9 + uniform_below(rng, 5);
        const Vertex lo = static_cast<Vertex>(uniform_below(rng, n - 6));
        const auto g = planted_clique(rng, n, 0.5, lo, lo + 6);
        CliqueTupleIndex idx(n, 1);
        REQUIRE(enumerate_clique_tuples(g, 1, 1'000'000, idx) == EnumerationStatus::Complete);
        const auto brute = brute_buckets(g, 1);
        std::uint64_t total = 0;
        for (const auto& [k, b] : brute) total += b.count;
        CHECK(idx.tuple_count() == total);
        CHECK(idx.bucket_count() == brute.size());
        for (const auto* b : idx.buckets_by_count()) {
            const auto it = brute.find(b->key);
            REQUIRE(it != brute.end());
            CHECK(b->count == it->second.count);
            for (std::size_t p = 0; p < b->positions.size(); ++p)
                CHECK(b->positions[p].count() == it->second.positions[p].size());
        }
        // the largest bucket in the index is the brute-force maximum
        std::uint64_t best = 0;
        for (const auto& [k, b] : brute) best = std::max(best, b.count);
        CHECK(idx.buckets_by_count().front()->count == best);

        const auto res = find_skeleton_from_cliques(g, 5, 1, Rational(0), 1'000'000);
        REQUIRE(res.status == CliqueSkeletonResult::Status::Found);
        CHECK(verify_skeleton(g, *res.skeleton));
    }
}

TEST_CASE("tuple cap is reported") {
    CliqueTupleIndex idx(12, 1);
    CHECK(enumerate_clique_tuples(OrderedGraph::complete(12), 1, 100, idx) == EnumerationStatus::CapExceeded);
    const auto res = find_skeleton_from_cliques(OrderedGraph::complete(12), 5, 1, Rational(1), 100);
    CHECK(res.status == CliqueSkeletonResult::Status::CapExceeded);
    CHECK(res.tuples == 100);
    REQUIRE(res.skeleton);
    CHECK(verify_skeleton(OrderedGraph::complete(12), *res.skeleton));
    CHECK(res.selected_bucket_tuples * 12 * 12 >= res.tuples);
}

TEST_CASE("complete host meets the lemma bound") {
    for (std::size_t big_n : {9u, 13u, 20u}) {
        for (std::size_t a : {1u, 2u}) {
            const std::size_t n = 4 * a + 1;
            if (n > big_n) continue;
            const auto g = OrderedGraph::complete(big_n);
            const auto res = find_skeleton_from_cliques(g, n, a, Rational(1));
            REQUIRE(res.status == CliqueSkeletonResult::Status::Found);
            const auto& s = *res.skeleton;
            CHECK(verify_skeleton(g, s));
            CHECK(s.a == a);
            const long double need = static_cast<long double>(big_n) / std::pow(static_cast<long double>(n), 5);
            CHECK(static_cast<long double>(s.b) >= need);
            CHECK(s.b >= res.target_b);
        }
    }
}

TEST_CASE("empty host has no skeleton") {
    const auto res = find_skeleton_from_cliques(OrderedGraph(12), 5, 1, Rational(1, 2));
    CHECK(res.status == CliqueSkeletonResult::Status::NotFound);
    CHECK(res.tuples == 0);
}

TEST_CASE("find_skeleton_from_cliques parameter gates") {
    const auto g = OrderedGraph::complete(10);
    CHECK_THROWS_AS(find_skeleton_from_cliques(g, 4, 1, Rational(1)), ParameterError);
    CHECK_THROWS_AS(find_skeleton_from_cliques(g, 11, 1, Rational(1)), ParameterError);
    CHECK_THROWS_AS(find_skeleton_from_cliques(g, 5, 0, Rational(1)), ParameterError);
    CHECK_THROWS_AS(find_skeleton_from_cliques(g, 5, 1, Rational(3, 2)), ParameterError);
}

TEST_CASE("selected bucket obeys the pigeonhole bound") {
    Rng rng(77);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 10 + uniform_below(rng, 6);
        const auto g = planted_clique(rng, n, 0.6, 0, 7);
        const auto res = find_skeleton_from_cliques(g, 5, 1, Rational(0));
        REQUIRE(res.status == CliqueSkeletonResult::Status::Found);
        // |bucket| * N^{2a} >= |tuples|
        CHECK(res.selected_bucket_tuples * n * n >= res.tuples);
    }
}

TEST_CASE("expand_blocks") {
    const auto g = OrderedGraph::complete(7);
    const auto s = expand_blocks(g, {2, 4});
    CHECK(s.blocks == std::vector<VertexSet>{VertexSet{0, 1}, VertexSet{3}, VertexSet{5, 6}});
    CHECK(s.b == 1);
    CHECK(verify_skeleton(g, s));
}

TEST_CASE("es examples") {
    auto w = es_clique_or_independent(OrderedGraph(10), Rational(1, 10));
    CHECK(w.kind == EsWitness::Kind::Independent);
    CHECK(w.vertices.size() == 10);

    w = es_clique_or_independent(testing::graph(10, {{1, 2}}), Rational(1, 10));
    CHECK(w.kind == EsWitness::Kind::Independent);
    CHECK(w.vertices.size() >= 9);
    CHECK(static_cast<long double>(w.vertices.size()) >= w.bound);
    CHECK(std::ceil(es_bound(10, Rational(1, 10))) == 1);
}

TEST_CASE("es witnesses on sparse random graphs") {
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = random_ordered_graph(rng, 200, 0.05);
        const Rational eps(1, 10);
        if (density_within(g, VertexSet::range(0, 200)) > eps) continue;
        const auto w = es_clique_or_independent(g, eps);
        CHECK(pairwise(g, w.vertices, w.kind == EsWitness::Kind::Clique));
        CHECK(static_cast<long double>(w.vertices.size()) >= es_bound(200, eps));
    }
}

TEST_CASE("es preconditions") {
    CHECK_THROWS_AS(es_clique_or_independent(OrderedGraph(10), Rational(1, 2)), ParameterError);
    CHECK_THROWS_AS(es_clique_or_independent(OrderedGraph(5), Rational(1, 10)), ParameterError);
    CHECK_THROWS_AS(es_clique_or_independent(OrderedGraph::complete(10), Rational(1, 10)), ParameterError);
}

TEST_CASE("dense skeleton in an all-blue colouring") {
    const ColoredCompleteGraph all_blue(30, Color::Blue);
    DenseSkeletonOptions relaxed;
    relaxed.enforce_preconditions = false;
    auto r = find_skeleton_in_dense(all_blue, Color::Red, 1, Rational(1, 10), relaxed);
    REQUIRE(std::holds_alternative<DenseSkeleton>(r));
    auto& d = std::get<DenseSkeleton>(r);
    CHECK(d.color == Color::Blue);
    CHECK(verify_skeleton(color_class(all_blue, Color::Blue), d.skeleton));

    const ColoredCompleteGraph big(100, Color::Blue);
    r = find_skeleton_in_dense(big, Color::Red, 20, Rational(1, 2));
    REQUIRE(std::holds_alternative<DenseSkeleton>(r));
    CHECK(std::get<DenseSkeleton>(r).color == Color::Blue);
    CHECK(std::get<DenseSkeleton>(r).skeleton.a == 20);
    CHECK(verify_skeleton(color_class(big, Color::Blue), std::get<DenseSkeleton>(r).skeleton));
}

TEST_CASE("dense skeleton in a complete multipartite colouring") {
    // Blue is complete 3-partite on residues mod 3; Red is three disjoint cliques.
    const std::size_t n = 45;
    std::vector<Edge> red;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (u % 3 == v % 3) red.push_back({u, v});
    const auto coloring = ColoredCompleteGraph::from_red_graph(OrderedGraph(n, red));
    DenseSkeletonOptions relaxed;
    relaxed.enforce_preconditions = false;
    for (std::uint64_t seed : {0u, 1u, 2u}) {
        relaxed.seed = seed;
        const auto r = find_skeleton_in_dense(coloring, Color::Red, 1, Rational(2, 5), relaxed);
        REQUIRE(std::holds_alternative<DenseSkeleton>(r));
        const auto& d = std::get<DenseSkeleton>(r);
        CHECK(verify_skeleton(color_class(coloring, d.color), d.skeleton));
        CHECK(d.skeleton.b >= 1);
    }
}

TEST_CASE("dense skeleton gates") {
    const ColoredCompleteGraph all_blue(30, Color::Blue);
    CHECK_THROWS_AS(find_skeleton_in_dense(all_blue, Color::Red, 1, Rational(1, 10)), ParameterError);
    CHECK_THROWS_AS(find_skeleton_in_dense(all_blue, Color::Blue, 100, Rational(1, 10)), ParameterError);
    CHECK_THROWS_AS(find_skeleton_in_dense(all_blue, Color::Red, 1, Rational(1)), ParameterError);
}

TEST_CASE("dense skeleton search failure") {
    // Too few vertices for a 5-clique in either colour window.
    const ColoredCompleteGraph tiny(4, Color::Blue);
    DenseSkeletonOptions relaxed;
    relaxed.enforce_preconditions = false;
    const auto r = find_skeleton_in_dense(tiny, Color::Red, 1, Rational(1, 10), relaxed);
    CHECK(std::holds_alternative<SkeletonSearchFailure>(r));
}

}
