#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "oramsey/embed.hpp"
#include "oramsey/graph.hpp"
#include "oramsey/rational.hpp"
#include "oramsey/skeleton.hpp"

namespace oramsey {

struct MonoCopy {
    Color color;
    OrderedGraph pattern;
    Embedding embedding;  // into the colour class of the full colouring
};

struct SparseSet {
    Color color;
    VertexSet w;
    Rational density;  // density of w in the colour class
};

struct Exhausted {
    std::vector<std::string> trace;
};

using Certificate = std::variant<MonoCopy, SparseSet, Exhausted>;

// Re-checks a certificate against the colouring: embeddings against their
// colour class, sparse sets by recomputing the density. nullopt when sound.
std::optional<std::string> check_certificate(const ColoredCompleteGraph& coloring, const Certificate& cert);

struct RecursionParams {
    Rational c;
    std::size_t k1 = 1;  // skeleton size in Red
    std::size_t k2 = 1;  // skeleton size in Blue
    long double alpha = 0.5L;
    std::size_t h1 = 0;
    std::size_t h2 = 0;
    std::optional<std::size_t> window;  // clique window, default min(|X|, 4^{k1+k2})
    std::uint64_t tuple_cap = kDefaultTupleCap;
    std::size_t samples = 64;  // sampled cliques when the tuple cap is hit
    std::uint64_t seed = 0;
};

// Throws ParameterError unless 0 < c < 1/8, k1, k2 >= 1 and 0 < alpha < 1.
void validate(const RecursionParams& p);

// Either a copy of H_i in colour i met on the way, or a colour i and W within
// X with |W| >= alpha^{h1+h2} |X| and colour-i density <= 2^{-h_i} + c/2.
// Red patterns are h1, Blue patterns h2. Exhausted when some node fails and
// the size law does not allow a singleton.
Certificate binary_tree_sparse(const ColoredCompleteGraph& coloring, const VertexSet& x, const OrderedGraph& h1,
                               const OrderedGraph& h2, const RecursionParams& p);

// h = ceil(log2(2/c)); c must lie in (0, 1/8).
std::size_t halving_budget(const Rational& c);

struct SparseSetOptions {
    std::optional<std::size_t> k1;
    std::optional<std::size_t> k2;
    std::optional<long double> alpha;
    std::optional<std::size_t> window;
    std::uint64_t tuple_cap = kDefaultTupleCap;
    std::size_t samples = 64;
    std::uint64_t seed = 0;
};

// Parameters used by recursive_sparse_set for a colouring on n vertices.
RecursionParams sparse_set_params(std::size_t n, const OrderedGraph& h1, const OrderedGraph& h2, const Rational& c,
                                  const SparseSetOptions& options = {});

// A colour class of density <= c on some W, or a monochromatic copy.
Certificate recursive_sparse_set(const ColoredCompleteGraph& coloring, const OrderedGraph& h1, const OrderedGraph& h2,
                                 const Rational& c, const SparseSetOptions& options = {});

struct PatternSplit {
    VertexSet left;   // longest prefix with at most m/2 edges
    VertexSet right;  // the rest
};

// Requires at least one edge.
PatternSplit split_pattern(const OrderedGraph& h);

inline constexpr std::size_t kDefaultExhaustiveThreshold = 9;

struct PipelineParams {
    Rational c1;
    std::size_t a = 1;
    Rational c2;
    std::size_t spacing = 1;
    std::size_t exhaustive_threshold = kDefaultExhaustiveThreshold;
    std::uint64_t tuple_cap = kDefaultTupleCap;
    std::size_t samples = 64;
    std::uint64_t seed = 0;
};

struct PipelineOverrides {
    std::optional<Rational> c1;
    std::optional<std::size_t> a;
    std::optional<Rational> c2;
    std::optional<std::size_t> spacing;
    std::optional<std::size_t> exhaustive_threshold;
    std::optional<std::uint64_t> tuple_cap;
    std::optional<std::size_t> samples;
    std::optional<std::uint64_t> seed;
};

// c1 = min(m2 / (m1 log^2 m1), 1/10), a = max(10 m1 log^2 m1 / sqrt(m2), 10/c1),
// c2 = 1/(6 m1), spacing = 3 m1, with m1 >= m2 the edge counts and log m1
// clamped below at 1. Overrides replace individual values.
PipelineParams default_pipeline_params(const OrderedGraph& h1, const OrderedGraph& h2,
                                       const PipelineOverrides& overrides = {});

// Throws ParameterError unless 0 < c1 < 1/8, 0 < c2 < 1, a >= 1, spacing >= 1.
void validate(const PipelineParams& p);

// Red copy of h1 or Blue copy of h2. Patterns must have edges and no
// isolated vertices. Returns MonoCopy or Exhausted; never SparseSet.
Certificate find_mono_copy(const ColoredCompleteGraph& coloring, const OrderedGraph& h1, const OrderedGraph& h2,
                           const PipelineParams& params);

}  // namespace oramsey
