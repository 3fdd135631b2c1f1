#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "oramsey/graph.hpp"

namespace oramsey::io {

// Ordered graph ".og": "n m", then m lines "i j" (1-based, i < j).
OrderedGraph parse_ordered_graph(std::string_view text);
std::string format_ordered_graph(const OrderedGraph& g);

// Colouring ".okc": "N", then N-1 lines (none for N <= 1); line k holds N-k characters from
// {R, B} for the pairs (k, k+1) .. (k, N).
ColoredCompleteGraph parse_coloring(std::string_view text);
std::string format_coloring(const ColoredCompleteGraph& c);

// Digraph ".dg": "n m", then m lines "u v" meaning u -> v.
Digraph parse_digraph(std::string_view text);
std::string format_digraph(const Digraph& d);

// Tournament ".trn": "N", then one line per pair (i, j), i < j, in colex
// order ((1,2), (1,3), (2,3), (1,4), ...) holding '>' for i -> j or '<'.
Tournament parse_tournament(std::string_view text);
std::string format_tournament(const Tournament& t);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace oramsey::io
