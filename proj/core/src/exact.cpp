#include "oramsey/exact.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "matcher.hpp"
#include "oramsey/errors.hpp"

namespace oramsey {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class EdgeSearch {
public:
    EdgeSearch(const OrderedGraph& h1, const OrderedGraph& h2, std::size_t n)
        : n_(n), patterns_{&h1, &h2}, adj_{std::vector<Bitset>(n, Bitset(n)), std::vector<Bitset>(n, Bitset(n))} {
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i) edges_.push_back({i, j});
        for (Vertex v = 0; v < n; ++v) {
            single_.emplace_back(n);
            single_.back().set(v);
        }
        for (int c = 0; c < 2; ++c) matchers_[c].emplace(adj_[c], *patterns_[c]);
    }

    std::size_t edge_count() const { return edges_.size(); }

    // Colours edge k; returns false (and leaves it uncoloured) if that
    // completes a monochromatic copy.
    bool assign(std::size_t k, int c) {
        const auto [i, j] = edges_[k];
        adj_[c][i].set(j);
        adj_[c][j].set(i);
        if (closes_copy(c, i, j)) {
            unassign(k, c);
            return false;
        }
        return true;
    }

    void unassign(std::size_t k, int c) {
        const auto [i, j] = edges_[k];
        adj_[c][i].reset(j);
        adj_[c][j].reset(i);
    }

    // Completes the colouring from edge k on. abort() is polled per node.
    template <typename Abort>
    bool dfs(std::size_t k, Abort& abort) {
        ++nodes_;
        if (k == edges_.size()) return true;
        if ((nodes_ & 1023) == 0 && abort()) return false;
        for (int c = 0; c < 2; ++c) {
            if (!assign(k, c)) continue;
            if (dfs(k + 1, abort)) return true;
            unassign(k, c);
        }
        return false;
    }

    ColoredCompleteGraph coloring() const {
        return ColoredCompleteGraph::from_function(n_, [&](Vertex i, Vertex j) {
            return adj_[0][i].test(j) ? Color::Red : Color::Blue;
        });
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool closes_copy(int c, Vertex i, Vertex j) {
        auto& m = *matchers_[c];
        for (const auto& e : patterns_[c]->edges()) {
            m.restrict_slot(e.u, &single_[i]);
            m.restrict_slot(e.v, &single_[j]);
            const bool hit = m.run([](std::span<const Vertex>) { return true; });
            m.restrict_slot(e.u, nullptr);
            m.restrict_slot(e.v, nullptr);
            if (hit) return true;
        }
        return false;
    }

    std::size_t n_;
    std::array<const OrderedGraph*, 2> patterns_;
    std::array<std::vector<Bitset>, 2> adj_;
    std::vector<Edge> edges_;
    std::vector<Bitset> single_;
    std::array<std::optional<detail::OrderedMatcher>, 2> matchers_;
    std::uint64_t nodes_ = 0;
};

bool trivially_contained(const OrderedGraph& h, std::size_t n) {
    return h.edge_count() == 0 && h.vertex_count() <= n;
}

}  // namespace

std::optional<ColoredCompleteGraph> avoiding_coloring(const OrderedGraph& h1, const OrderedGraph& h2, std::size_t n,
                                                      unsigned threads, std::uint64_t* nodes) {
    if (trivially_contained(h1, n) || trivially_contained(h2, n)) return std::nullopt;
    threads = std::max(1u, threads);

    if (threads == 1) {
        EdgeSearch s(h1, h2, n);
        auto never = [] { return false; };
        const bool ok = s.dfs(0, never);
        if (nodes) *nodes += s.nodes();
        if (!ok) return std::nullopt;
        return s.coloring();
    }

    // Branches fix the colours of the first `depth` edges; branch b lists
    // them most significant bit first with Red = 0, so branch order is the
    // sequential search order.
    const std::size_t total_edges = n < 2 ? 0 : n * (n - 1) / 2;
    std::size_t depth = 0;
    while (depth < total_edges && depth < 16 && (std::size_t{1} << depth) < 8 * threads) ++depth;
    const std::size_t branches = std::size_t{1} << depth;

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{kNone};
    std::atomic<std::uint64_t> node_total{0};
    std::mutex result_mutex;
    std::optional<ColoredCompleteGraph> result;

    auto worker = [&] {
        while (true) {
            const std::size_t b = next.fetch_add(1);
            if (b >= branches || b > best.load()) break;
            EdgeSearch s(h1, h2, n);
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const int c = static_cast<int>((b >> (depth - 1 - k)) & 1u);
                ok = s.assign(k, c);
            }
            if (ok) {
                auto abort = [&] { return best.load() < b; };
                ok = s.dfs(depth, abort);
            }
            node_total += s.nodes();
            if (!ok) continue;
            std::lock_guard lock(result_mutex);
            if (b < best.load()) {
                best = b;
                result = s.coloring();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (nodes) *nodes += node_total.load();
    return result;
}

std::optional<ExactRamsey> exact_ordered_ramsey(const OrderedGraph& h1, const OrderedGraph& h2, std::size_t max_n,
                                                unsigned threads) {
    if (h1.vertex_count() == 0 || h2.vertex_count() == 0) throw ParameterError("patterns must have a vertex");
    ExactRamsey out;
    ColoredCompleteGraph previous(0, Color::Red);
    for (std::size_t n = 1; n <= max_n; ++n) {
        auto avoid = avoiding_coloring(h1, h2, n, threads, &out.nodes);
        if (!avoid) {
            out.n_star = n;
            out.witness = std::move(previous);
            return out;
        }
        previous = std::move(*avoid);
    }
    return std::nullopt;
}

}  // namespace oramsey
