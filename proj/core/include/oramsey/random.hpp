#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "oramsey/graph.hpp"

namespace oramsey {

// The one generator used across the project. Only raw 64-bit draws are
// consumed, so streams are identical on every platform.
using Rng = std::mt19937_64;

// Uniform integer in [0, n), by rejection. n must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);
// Uniform double in [0, 1) with 53 random bits.
double uniform01(Rng& rng);
bool coin(Rng& rng);

// k distinct values of [0, n), sorted.
std::vector<Vertex> sample_subset(Rng& rng, std::size_t n, std::size_t k);

OrderedGraph random_ordered_graph(Rng& rng, std::size_t n, double p);
ColoredCompleteGraph random_coloring(Rng& rng, std::size_t n, double p_red);
Tournament random_tournament(Rng& rng, std::size_t n);

}  // namespace oramsey
