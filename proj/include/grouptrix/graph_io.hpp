#pragma once

#include <iosfwd>
#include <string>

#include "grouptrix/graph.hpp"

namespace grouptrix {

/// "n m" then one "u v" line per edge, 0-based, u < v, lexicographic.
void write_edge_list(const Graph& g, std::ostream& os);
Graph read_edge_list(std::istream& is);

/// Undirected DOT; vertices carry their labels when the graph has them.
void write_dot(const Graph& g, std::ostream& os, const std::string& name = "G");

void write_digraph_edge_list(const Digraph& d, std::ostream& os);

}  // namespace grouptrix
