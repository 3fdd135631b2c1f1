#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "oramsey/graph.hpp"
#include "oramsey/rational.hpp"

namespace oramsey {

// A spine clique v_1 < ... < v_a interleaved with blocks
// V_0 < {v_1} < V_1 < ... < {v_a} < V_a, every spine vertex adjacent to
// every block vertex, and |V_i| >= b.
struct Skeleton {
    std::vector<Vertex> spine;
    std::vector<VertexSet> blocks;
    std::size_t a = 0;
    std::size_t b = 0;

    std::size_t min_block_size() const;
    friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

struct SkeletonCheck {
    bool ok = true;
    char condition = 0;  // 'a' (interleaving), 'b' (block sizes), 'c' (adjacency)
    std::string detail;
    std::optional<std::size_t> block;              // offending block for 'a'/'b'
    std::optional<std::pair<Vertex, Vertex>> pair;  // missing edge for 'c'

    explicit operator bool() const noexcept { return ok; }
};

// Checks the three skeleton conditions in order and reports the first
// violation with a witness.
SkeletonCheck verify_skeleton(const OrderedGraph& host, const Skeleton& s);

// Groups increasing (4a+1)-clique tuples (v_0, ..., v_4a) by their odd
// positions (v_1, v_3, ..., v_{4a-1}) and records, per bucket, which vertices
// occur at each even position.
class CliqueTupleIndex {
public:
    struct Bucket {
        std::vector<Vertex> key;          // odd-position vertices
        std::uint64_t count = 0;          // tuples in the bucket
        std::vector<Bitset> positions;    // even position 2k -> vertex set
    };

    CliqueTupleIndex(std::size_t host_n, std::size_t a);

    std::size_t a() const noexcept { return a_; }
    std::size_t tuple_length() const noexcept { return 4 * a_ + 1; }
    std::uint64_t tuple_count() const noexcept { return tuples_; }
    std::size_t bucket_count() const noexcept { return buckets_.size(); }

    // Tuple must be strictly increasing, of length 4a+1, and a clique in host.
    void add(const OrderedGraph& host, std::span<const Vertex> tuple);
    // Same, with the clique check skipped (caller guarantees it).
    void add_unchecked(std::span<const Vertex> tuple);

    // Buckets ordered by count (descending), ties by key (ascending).
    std::vector<const Bucket*> buckets_by_count() const;

private:
    std::size_t host_n_;
    std::size_t a_;
    std::uint64_t tuples_ = 0;
    std::map<std::vector<Vertex>, Bucket> buckets_;
    std::vector<Vertex> key_scratch_;
};

enum class EnumerationStatus { Complete, CapExceeded };

// Lists every increasing (4a+1)-clique of host into index, in lexicographic
// order. Stops with CapExceeded as soon as more than cap tuples exist.
EnumerationStatus enumerate_clique_tuples(const OrderedGraph& host, std::size_t a,
                                          std::uint64_t cap, CliqueTupleIndex& index);

struct IndexSkeleton {
    Skeleton skeleton;
    std::uint64_t bucket_tuples = 0;  // tuples in the bucket it came from
};

// Skeleton from the best bucket whose even-position sets include a+1 of
// size >= min_b. Picks the a+1 largest sets of that bucket.
std::optional<IndexSkeleton> extract_skeleton(const CliqueTupleIndex& index, std::size_t min_b);

// Keeps the spine and replaces each block with every vertex strictly between
// its neighbouring spine vertices that is adjacent to the whole spine.
Skeleton expand_blocks(const OrderedGraph& host, const std::vector<Vertex>& spine);

inline constexpr std::uint64_t kDefaultTupleCap = 10'000'000;

struct CliqueSkeletonResult {
    enum class Status { Found, NotFound, CapExceeded } status = Status::NotFound;
    std::optional<Skeleton> skeleton;
    std::uint64_t tuples = 0;
    std::size_t buckets = 0;
    std::uint64_t selected_bucket_tuples = 0;
    std::size_t target_b = 0;  // max(1, ceil(d N / n^5))
};

// Supersaturation route: enumerate clique tuples, pigeonhole on the odd
// positions and assemble a skeleton. Requires N >= n >= 4a+1, a >= 1.
// On CapExceeded the skeleton, if any, comes from the first `cap` tuples in
// lexicographic order.
CliqueSkeletonResult find_skeleton_from_cliques(const OrderedGraph& host, std::size_t n,
                                                std::size_t a, const Rational& d,
                                                std::uint64_t tuple_cap = kDefaultTupleCap);

struct EsWitness {
    enum class Kind { Clique, Independent } kind;
    VertexSet vertices;
    long double bound = 0;  // log n / (100 eps log(1/eps))
};

long double es_bound(std::size_t n, const Rational& eps);

// Clique or independent set of size >= log n / (100 eps log(1/eps)) in a
// graph of density <= eps. Requires 0 < eps < 1/2 and n >= 1/eps.
EsWitness es_clique_or_independent(const OrderedGraph& g, const Rational& eps);

struct DenseSkeletonOptions {
    std::size_t samples = 64;
    std::uint64_t seed = 0;
    std::optional<std::size_t> window;  // default: lemma window capped at N
    bool enforce_preconditions = true;   // a >= 10/c and sparse density <= c
};

struct DenseSkeleton {
    Color color;
    Skeleton skeleton;
    long double lemma_b = 0;  // exp(-6000 a c log(1/c)) N
    bool lemma_bound_met = false;
    std::size_t windows = 0;         // windows examined
    std::size_t color_windows = 0;   // windows contributing a clique in `color`
};

struct SkeletonSearchFailure {
    std::string reason;
};

using DenseSkeletonResult = std::variant<DenseSkeleton, SkeletonSearchFailure>;

DenseSkeletonResult find_skeleton_in_dense(const ColoredCompleteGraph& coloring, Color sparse_color,
                                           std::size_t a, const Rational& c,
                                           const DenseSkeletonOptions& options = {});

}  // namespace oramsey
