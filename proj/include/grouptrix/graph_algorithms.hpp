#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "grouptrix/graph.hpp"

namespace grouptrix {

Graph complement(const Graph& g);
/// Vertices renumbered in the order given by s.
Graph induced(const Graph& g, const std::vector<std::size_t>& s);
/// Edges of a not in b.
Graph difference(const Graph& a, const Graph& b);
Graph graph_union(const Graph& a, const Graph& b);
/// Vertex (v, w) is numbered v * b.n() + w. Guard: a.n() * b.n() <= 10^5.
Graph strong_product(const Graph& a, const Graph& b);

struct Metrics {
  std::vector<std::vector<std::size_t>> components;  // sorted members, ordered by smallest member
  std::vector<std::size_t> diameters;                // per component; empty when not computed
  bool connected = false;
};

Metrics metrics(const Graph& g, bool with_diameters = true);
/// Eccentricity-based diameter of the component containing v.
std::size_t component_diameter(const Graph& g, const std::vector<std::size_t>& component);

/// Inclusion-maximal cliques, each sorted, in lexicographic order.
/// Throws SizeGuardError past cap results.
std::vector<std::vector<std::size_t>> max_cliques(const Graph& g, std::size_t cap = 1000000);

std::size_t clique_number(const Graph& g);
std::size_t independence_number(const Graph& g);
/// Exact; n <= 64.
std::size_t chromatic_number(const Graph& g);
/// Exact; n <= 64.
std::size_t clique_cover_number(const Graph& g);

struct CliqueParams {
  std::size_t omega = 0, alpha = 0;
  std::optional<std::size_t> chi, theta;
};

CliqueParams clique_params(const Graph& g);

enum class GraphClass { Cograph, Chordal, Split, Threshold };

struct ClassResult {
  bool member = true;
  std::vector<std::size_t> witness;  // vertices of a forbidden induced subgraph, in path/cycle order
  std::string witness_kind;          // "P4", "C4", "2K2", "C5", "C<k>"
};

ClassResult class_test(const Graph& g, GraphClass kind);

/// Induced path a-b-c-d, if any.
std::optional<std::array<std::size_t, 4>> find_induced_p4(const Graph& g);

/// n <= 64.
bool isomorphic(const Graph& a, const Graph& b);

/// k = 1: no isolated vertex; k = 2: every pair of distinct vertices has a common neighbour.
bool has_spread(const Graph& g, int k);

/// d is transitive and g's edges are exactly the pairs joined by an arc.
bool comparability_check(const Digraph& d, const Graph& g);

bool is_transitive(const Digraph& d);

/// A transitive orientation of g (n <= 8), found by exhaustive search with propagation.
std::optional<Digraph> transitive_orientation(const Graph& g);

}  // namespace grouptrix
