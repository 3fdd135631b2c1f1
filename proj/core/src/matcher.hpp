#pragma once

#include <span>
#include <vector>

#include "oramsey/bitset.hpp"
#include "oramsey/graph.hpp"

namespace oramsey::detail {

// Backtracking search for order-preserving embeddings of a pattern into a
// host given by adjacency rows. Pattern vertices are placed in order; the
// candidates for vertex i are the host vertices above the image of i-1,
// leaving room for the rest, inside the optional slot mask, and adjacent to
// the images of all earlier pattern neighbours. Candidates are tried in
// increasing order, so the first embedding found is the lexicographically
// least one.
class OrderedMatcher {
public:
    OrderedMatcher(std::span<const Bitset> host_adj, const OrderedGraph& pattern)
        : adj_(host_adj),
          host_n_(host_adj.size()),
          pattern_n_(pattern.vertex_count()),
          back_(pattern_n_),
          slots_(pattern_n_, nullptr),
          map_(pattern_n_),
          scratch_(pattern_n_, Bitset(host_n_)) {
        for (const auto& e : pattern.edges()) back_[e.v].push_back(e.u);
    }

    void restrict_slot(std::size_t pattern_vertex, const Bitset* mask) { slots_[pattern_vertex] = mask; }

    // Calls on_found(span of images) for each embedding in lexicographic order
    // until it returns true. Returns whether the search was stopped.
    template <typename F>
    bool run(F&& on_found) {
        if (pattern_n_ > host_n_) return false;
        return extend(0, on_found);
    }

private:
    template <typename F>
    bool extend(std::size_t i, F& on_found) {
        if (i == pattern_n_) return on_found(std::span<const Vertex>(map_));
        const std::size_t lower = i == 0 ? 0 : map_[i - 1] + 1;
        const std::size_t upper = host_n_ - (pattern_n_ - i);  // inclusive
        if (lower > upper) return false;
        Bitset& cand = scratch_[i];
        cand.reset_all();
        cand.set_range(lower, upper + 1);
        if (slots_[i]) cand &= *slots_[i];
        for (auto j : back_[i]) cand &= adj_[map_[j]];
        for (auto v = cand.find_next(lower); v != Bitset::npos; v = cand.find_next(v + 1)) {
            map_[i] = v;
            if (extend(i + 1, on_found)) return true;
        }
        return false;
    }

    std::span<const Bitset> adj_;
    std::size_t host_n_;
    std::size_t pattern_n_;
    std::vector<std::vector<Vertex>> back_;
    std::vector<const Bitset*> slots_;
    std::vector<Vertex> map_;
    std::vector<Bitset> scratch_;
};

}  // namespace oramsey::detail
