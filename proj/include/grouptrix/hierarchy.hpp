#pragma once

// Graphs defined on a finite group, and the structural checks that relate them.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grouptrix/constructions.hpp"
#include "grouptrix/graph.hpp"
#include "grouptrix/group.hpp"
#include "grouptrix/group_algorithms.hpp"

namespace grouptrix {

enum class GraphKind { Pow, EPow, DCom, Com, Gen, NGen, Nilp, Sol, Engel, Dep, Complete, Null };

std::string to_string(GraphKind k);
/// Case-insensitive; throws SpecError on unknown names.
GraphKind parse_graph_kind(const std::string& s);

/// Largest order allowed for pair-sweep kinds (GEN, NGEN, NILP, SOL, ENGEL):
/// GROUPTRIX_MAX_ORDER when set, else 10^4.
std::uint64_t pair_sweep_limit();

/// Worker count for pair sweeps (default 1). Results do not depend on it.
void set_sweep_jobs(unsigned jobs);
unsigned sweep_jobs();

/// Arc x -> y when y is a power of x, y != x.
Digraph directed_power(const Group& g);

struct BuiltGraph {
  Graph graph;
  Group group;                // vertex group: the input group, or H/Z for DCOM
  std::vector<Elem> vertices; // group element of each vertex
};

/// Graph on all elements (DEP: on G minus the identity). DCOM needs a cover,
/// or uses the built-in one for labels that have it.
BuiltGraph build(const Group& g, GraphKind kind, const std::optional<Cover>& cover = std::nullopt);
Graph build_graph(const Group& g, GraphKind kind, const std::optional<Cover>& cover = std::nullopt);

/// One vertex per cyclic subgroup (its smallest generator). Equal to the
/// induced subgraph of build() on those vertices, which is what merging each
/// cyclic class into one vertex produces.
BuiltGraph build_class_graph(const Group& g, GraphKind kind, const std::optional<Cover>& cover = std::nullopt);

/// Symmetric adjacency between cyclic classes for a predicate that is
/// invariant under <x> = <x'> and under conjugation. Row i is class i;
/// the diagonal holds pred(rep, rep).
std::vector<Bitset> class_adjacency(const Group& g, const std::function<bool(Elem, Elem)>& pred);

/// Arc x -> y iff [y, _k x] = 1 for some k (k = 1 only when level1).
Digraph engel_digraph(const Group& g, bool level1 = false);

struct GKGraph {
  std::vector<std::uint64_t> primes;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;

  bool is_null() const { return edges.empty(); }
  bool connected() const;
  bool has_edge(std::uint64_t p, std::uint64_t q) const;
  std::string format() const;
};

GKGraph gk_graph(const Group& g);

bool is_generalized_quaternion(const Group& g);
/// Commuting elements of order p with different cyclic subgroups.
std::optional<std::pair<Elem, Elem>> cp_cp_witness(const Group& g);
/// Commuting elements of distinct prime orders.
std::optional<std::pair<Elem, Elem>> cp_cq_witness(const Group& g);

struct CentreReport {
  GraphKind kind = GraphKind::Com;
  std::vector<Elem> members;  // elements of the vertex group joined to all other vertices
  bool is_subgroup = false;
  std::optional<std::vector<Elem>> expected;  // from the structural description, when one applies
  std::optional<bool> agrees;
};

CentreReport graph_centre(const Group& g, GraphKind kind, const std::optional<Cover>& cover = std::nullopt);

struct HierarchyFact {
  std::string key;
  std::string value;
};

struct HierarchyReport {
  std::vector<HierarchyFact> facts;
  bool consistent = true;  // every asserted inclusion and equivalence held
};

HierarchyReport hierarchy_report(const Group& g, const std::optional<Cover>& cover = std::nullopt);

struct ComMinusPowReport {
  bool gk_connected = false;
  std::vector<Elem> isolated;        // isolated vertices of (Com - Pow) on G minus {1}
  std::size_t components_without_isolated = 0;
  bool theorem_conclusion = false;   // has an isolated vertex or is connected
};

ComMinusPowReport com_minus_pow_connectivity(const Group& g);

struct EpowBounds {
  std::size_t omega = 0;          // clique number of EPow
  std::uint64_t max_order = 0;
  std::uint64_t chi_bound = 0;    // sum of phi(n) over element orders n
  std::uint64_t lcm_bound = 0;    // lcm(1..m), m the largest prime-power element order
};

/// Throws Error when omega differs from the largest element order or exceeds lcm_bound.
EpowBounds epow_bounds(const Group& g);

}  // namespace grouptrix
