#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "oramsey/graph.hpp"

namespace oramsey {

// (1,2)-subdivision of the transitive tournament on n base vertices: base
// vertices 0..n-1, then one vertex per triple i < j < k in lexicographic
// order with arcs i -> t, t -> j, t -> k.
struct Subdivision {
    std::size_t n = 0;
    Digraph digraph;
    std::vector<Vertex> base;
    std::map<std::array<Vertex, 3>, Vertex> triple_index;
};

Subdivision build_subdivision_S(std::size_t n);

// Vertex count n + C(n, 3).
std::uint64_t subdivision_vertex_count(std::size_t n);

// k vertices inducing a transitive subtournament, listed so that each beats
// all later ones. Deterministic backtracking; the least vertex sequence in
// dominance order wins.
std::optional<std::vector<Vertex>> find_transitive_subtournament(const Tournament& t, std::size_t k);

// Uniformly random tournament on m vertices with no transitive
// subtournament on k vertices. Throws GenerationFailure after max_tries.
Tournament random_tournament_avoiding(std::size_t m, std::size_t k, std::uint64_t seed, std::size_t max_tries = 1000);

struct BlowupTournament {
    Tournament outer;
    Tournament inner;
    Tournament tournament;
    std::vector<VertexSet> blocks;  // block l holds l*s .. l*s + s - 1
};

BlowupTournament blowup(const Tournament& outer, const Tournament& inner);

// 3-cycle 0 -> 1 -> 2 -> 0 with every vertex beating 3.
Tournament base_lower_bound_tournament();

struct LowerBoundParams {
    std::size_t m = 0;        // outer size, floor(n/10) and at least 1
    std::size_t k = 0;        // forbidden transitive size, ceil(4 log n)
    std::size_t n_prime = 0;  // inner parameter, floor(n/(40 log n)) and at least 3
};

// Parameters of one level for n > 20.
LowerBoundParams lower_bound_params(std::size_t n);

struct LowerBoundConstruction {
    Tournament tournament;
    std::optional<BlowupTournament> top;  // absent in the base case
    std::optional<LowerBoundParams> params;
};

// For n <= 20 the base tournament; otherwise the blow-up of a random outer
// tournament avoiding a transitive k-set by the construction for n', with
// seed + 1 for the inner level.
LowerBoundConstruction lower_bound_construction(std::size_t n, std::uint64_t seed, std::size_t max_tries = 1000);
Tournament iterated_lower_bound_tournament(std::size_t n, std::uint64_t seed, std::size_t max_tries = 1000);

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct SubdivisionSearch {
    enum class Status { Found, None, BudgetExhausted } status = Status::None;
    std::vector<Vertex> injection;  // subdivision vertex -> tournament vertex
    std::uint64_t nodes = 0;
};

// Arc-preserving injection of S_n into t. Base vertices are placed first by
// backtracking; triple vertices are then matched to their candidate sets.
SubdivisionSearch contains_subdivision(const Tournament& t, std::size_t n, std::uint64_t budget = kDefaultNodeBudget);

// nullopt when inj is an arc-preserving injection of s into t.
std::optional<std::string> check_subdivision_copy(const Tournament& t, const Subdivision& s,
                                                  const std::vector<Vertex>& inj);

struct BucketReport {
    std::vector<std::size_t> bucket_sizes;  // base vertices per block
    std::size_t n_prime = 0;
    long double log_bound = 0;             // 4 log n
    bool buckets_below_n_prime = false;    // every |B_l| < n'
    bool few_large_buckets = false;        // #{l : |B_l| >= 2} < 4 log n
    bool sum_inequality = false;           // m + 4 log n * n' < n
};

// Throws DomainError unless inj is a copy of S_n in t.tournament.
BucketReport verify_bucket_claims(const BlowupTournament& t, const std::vector<Vertex>& inj, std::size_t n,
                                  std::size_t n_prime);

}  // namespace oramsey
