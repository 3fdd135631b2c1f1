#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "oramsey/graph.hpp"

namespace oramsey {

struct ExactRamsey {
    std::size_t n_star = 0;
    ColoredCompleteGraph witness;  // on n_star - 1 vertices, no Red h1 and no Blue h2
    std::uint64_t nodes = 0;       // search nodes over all N tried
};

// Colex-first colouring of K_n with no Red h1 and no Blue h2, or nullopt.
// Edges are coloured in colex order, Red before Blue; a branch is cut as soon
// as the last coloured edge completes a monochromatic copy. threads > 1
// splits the top of the tree; the result equals the sequential one.
std::optional<ColoredCompleteGraph> avoiding_coloring(const OrderedGraph& h1, const OrderedGraph& h2, std::size_t n,
                                                      unsigned threads = 1, std::uint64_t* nodes = nullptr);

// Least N <= max_n such that every colouring of K_N holds a Red h1 or a Blue
// h2, with a witness on N - 1 vertices. nullopt when N exceeds max_n.
std::optional<ExactRamsey> exact_ordered_ramsey(const OrderedGraph& h1, const OrderedGraph& h2, std::size_t max_n,
                                                unsigned threads = 1);

}  // namespace oramsey
