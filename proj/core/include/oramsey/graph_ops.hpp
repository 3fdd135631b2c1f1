#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "oramsey/graph.hpp"
#include "oramsey/rational.hpp"

namespace oramsey {

// e(A) / C(|A|, 2); zero when |A| < 2.
Rational density_within(const OrderedGraph& g, const VertexSet& a);

// e(A, B) / (|A| |B|). A and B must be nonempty and disjoint.
Rational density_between(const OrderedGraph& g, const VertexSet& a, const VertexSet& b);

std::size_t edges_within(const OrderedGraph& g, const VertexSet& a);
std::size_t edges_between(const OrderedGraph& g, const VertexSet& a, const VertexSet& b);

OrderedGraph color_class(const ColoredCompleteGraph& c, Color which);

struct IsolatedRemoval {
    OrderedGraph graph;
    // old vertex -> new vertex, nullopt for removed vertices
    std::vector<std::optional<Vertex>> mapping;
};

IsolatedRemoval remove_isolated(const OrderedGraph& g);

// Max over the min-degree elimination order of the degree at removal time.
std::size_t degeneracy(const OrderedGraph& g);

struct OrderedPair {
    OrderedGraph plus;   // labelled along the topological order
    OrderedGraph minus;  // labelled along its reverse
    std::vector<Vertex> topological_order;
};

// Lexicographically least topological sort (smallest available source first).
// Throws CycleError carrying a witness cycle when d is not acyclic.
std::vector<Vertex> least_topological_order(const Digraph& d);

OrderedPair ordered_pair_from_digraph(const Digraph& d);

}  // namespace oramsey
