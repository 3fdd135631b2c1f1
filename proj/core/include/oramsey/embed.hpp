#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "oramsey/graph.hpp"
#include "oramsey/rational.hpp"
#include "oramsey/skeleton.hpp"

namespace oramsey {

// Order-preserving map from pattern vertices to host vertices.
struct Embedding {
    std::vector<Vertex> map;
    friend bool operator==(const Embedding&, const Embedding&) = default;
};

// One slot per pattern vertex; slots nonempty and V_1 < V_2 < ... < V_n.
struct SlotSystem {
    std::vector<VertexSet> slots;
};

// Throws DomainError unless slots is a valid slot system for a pattern on
// pattern_n vertices inside a host on host_n vertices.
void validate_slots(const SlotSystem& slots, std::size_t pattern_n, std::size_t host_n);

struct SparsePair {
    VertexSet a;
    VertexSet b;
    Rational c;
    Rational density;  // d(A, B) in the host the pair was extracted from
};

using EmbedOrPair = std::variant<Embedding, SparsePair>;

// nullopt when emb is an order-preserving embedding of pattern into host
// (respecting slots when given), otherwise a description of the first
// violation.
std::optional<std::string> check_embedding(const OrderedGraph& host, const OrderedGraph& pattern,
                                           const Embedding& emb, const SlotSystem* slots = nullptr);

// Exhaustive backtracking; returns the lexicographically least embedding.
std::optional<Embedding> find_ordered_embedding(const OrderedGraph& host, const OrderedGraph& pattern,
                                                const std::optional<SlotSystem>& slots = std::nullopt);

// Number of embeddings, stopping at cap.
std::uint64_t count_embeddings(const OrderedGraph& host, const OrderedGraph& pattern, std::uint64_t cap);

struct GreedyOptions {
    // Assert |U_i| >= c^{|N_t(v_i)|} |V_i| after every step.
    bool check_invariants = false;
};

// Greedy candidate-set embedding into the slots. On failure returns a pair
// A < B with |A|, |B| >= (c^D / D) N and d(A, B) <= c, where D is the
// pattern's maximum degree and N the smallest slot.
EmbedOrPair greedy_embed_or_sparse_pair(const OrderedGraph& host, const OrderedGraph& pattern,
                                        const SlotSystem& slots, const Rational& c,
                                        const GreedyOptions& options = {});

// size >= (c^delta / delta) * n, computed exactly.
bool meets_greedy_bound(std::size_t size, const Rational& c, std::size_t delta, std::size_t n);

// 2 m^2 c^{-2m/a}
long double skeleton_required_b(const Rational& c, std::size_t a, std::size_t m);
// c^{2m/a} b / (2 m^2)
long double skeleton_pair_bound(const Rational& c, std::size_t a, std::size_t b, std::size_t m);

struct SkeletonEmbedOptions {
    // Reject skeletons with b < 2 m^2 c^{-2m/a}. Callers working below the
    // asymptotic regime switch this off and re-check outputs themselves.
    bool enforce_b_bound = true;
};

// Places the a highest-degree pattern vertices on the spine and greedily
// embeds the rest into equal contiguous parts of the blocks. Returns a full
// embedding of pattern or a sparse pair from the greedy step.
EmbedOrPair skeleton_embed_or_sparse_pair(const OrderedGraph& host, const Skeleton& skeleton,
                                          const OrderedGraph& pattern, const Rational& c,
                                          const SkeletonEmbedOptions& options = {});

}  // namespace oramsey
