#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "grouptrix/graph.hpp"
#include "grouptrix/group.hpp"

namespace grouptrix {

enum class FamilyKind { Cyclic, MaximalCyclic, MaximalAbelian, All };

std::string to_string(FamilyKind k);
FamilyKind parse_family_kind(const std::string& s);

struct SubgroupFamily {
  Group owner;
  FamilyKind kind = FamilyKind::Cyclic;
  std::vector<SubgroupHandle> members;  // nontrivial, distinct, ordered by (size, members)
};

/// All: every nontrivial proper subgroup, |G| <= 400, at most 10^5 of them.
SubgroupFamily enumerate_subgroups(const Group& g, FamilyKind kind);

/// Members joined when they share a non-identity element.
Graph intersection_graph(const SubgroupFamily& fam);

/// "H<i>: {a, b, ...}" per member.
std::string format_family(const SubgroupFamily& fam);

struct DualPair {
  SubgroupFamily family;
  std::vector<Elem> elements;  // non-identity elements, element-side vertex order; E<x> labels use these
  Graph bipartite;             // elements first, then family members
  Graph element_half;          // x ~ y when some member contains both
  Graph subgroup_half;         // the intersection graph of the family
};

/// Requires G non-cyclic and the family to cover every non-identity element.
DualPair dual_pair(const Group& g, const SubgroupFamily& fam);

struct DualPairReport {
  bool ok = true;
  std::size_t element_components = 0;
  std::size_t subgroup_components = 0;
  std::vector<std::pair<std::size_t, std::size_t>> diameters;  // (element side, subgroup side) per component
  std::string failure;
};

/// Components correspond under membership; matched diameters differ by at most 1.
DualPairReport dual_pair_verify(const DualPair& dp);

/// Bipartite edge list with side markers: "E<i> S<j>" per incidence.
std::string format_dual_pair(const DualPair& dp);

}  // namespace grouptrix
