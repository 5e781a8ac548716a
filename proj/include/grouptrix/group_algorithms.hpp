#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grouptrix/group.hpp"

namespace grouptrix {

/// Subgroup generated by seeds, or nullopt (TOP) as soon as the partial
/// closure exceeds cap elements. cap defaults to |G|/2.
std::optional<SubgroupHandle> generated_closure(const Group& g, const std::vector<Elem>& seeds,
                                                std::optional<std::size_t> cap = std::nullopt);

/// Subgroup generated by seeds, without early exit.
SubgroupHandle subgroup_generated(const Group& g, const std::vector<Elem>& seeds);

/// Size of <seeds>, without early exit.
std::size_t generated_order(const Group& g, const std::vector<Elem>& seeds);

/// <x,y> = G
bool generates_whole(const Group& g, Elem x, Elem y);

SubgroupHandle center(const Group& g);
SubgroupHandle centralizer(const Group& g, Elem x);

/// A small generating set of H (greedy by element order).
std::vector<Elem> subgroup_generators(const SubgroupHandle& h);

enum class SeriesKind { Derived, LowerCentral, UpperCentral };

/// Terms of the series until it stabilises; the first term is H itself
/// (derived, lower central) or {1} (upper central).
std::vector<SubgroupHandle> series(const SubgroupHandle& h, SeriesKind kind);

enum class SubgroupProperty { Abelian, Cyclic, Nilpotent, Solvable };

bool subgroup_is(const SubgroupHandle& h, SubgroupProperty p);

/// Property of <gens>; avoids building a handle for the caller.
bool generated_is(const Group& g, const std::vector<Elem>& gens, SubgroupProperty p);

struct EngelResult {
  bool related = false;
  std::optional<std::uint32_t> k;
};

/// Whether [x, _k y] = 1 for some k >= 1, with [x,y] = x^-1 y^-1 x y.
EngelResult engel_related(const Group& g, Elem x, Elem y);

bool is_normal(const SubgroupHandle& n);

/// Smallest normal subgroup of <hgens> containing seeds, with seeds assumed in <hgens>.
SubgroupHandle normal_closure(const Group& g, const std::vector<Elem>& hgens, const std::vector<Elem>& seeds);

struct QuotientMap {
  Group group;                 // cosets, identity coset at index 0
  std::vector<Elem> coset_of;  // element of the original group -> coset index
  std::vector<Elem> rep;       // coset index -> smallest representative
};

/// Throws NotNormalError when n is not normal.
QuotientMap quotient_map(const Group& g, const SubgroupHandle& n);
Group quotient(const Group& g, const SubgroupHandle& n);

/// Indices grouped by <x> = <y>; one vector per cyclic subgroup.
std::vector<std::vector<Elem>> cyclic_classes(const Group& g);

}  // namespace grouptrix
