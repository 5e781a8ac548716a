#include "grouptrix/subgroups.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

#include "grouptrix/errors.hpp"
#include "grouptrix/graph_algorithms.hpp"
#include "grouptrix/group_algorithms.hpp"
#include "grouptrix/hierarchy.hpp"

namespace grouptrix {

namespace {

constexpr std::size_t kAllOrderLimit = 400;
constexpr std::size_t kAllCap = 100000;

void sort_family(std::vector<SubgroupHandle>& v) {
  std::sort(v.begin(), v.end(), [](const SubgroupHandle& a, const SubgroupHandle& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
}

std::vector<SubgroupHandle> cyclic_family(const Group& g) {
  std::vector<SubgroupHandle> out;
  for (auto& c : g.cyclic_classes())
    if (c.subgroup.size() > 1) out.emplace_back(g, c.subgroup, false);
  return out;
}

Elem generator_of(const Group& g, const SubgroupHandle& c) {
  for (Elem x : c.members())
    if (g.element_order(x) == c.size()) return x;
  throw Error("subgroup is not cyclic");
}

}  // namespace

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::Cyclic: return "cyclic";
    case FamilyKind::MaximalCyclic: return "maximal_cyclic";
    case FamilyKind::MaximalAbelian: return "maximal_abelian";
    case FamilyKind::All: return "all";
  }
  return "?";
}

FamilyKind parse_family_kind(const std::string& s) {
  for (FamilyKind k : {FamilyKind::Cyclic, FamilyKind::MaximalCyclic, FamilyKind::MaximalAbelian, FamilyKind::All})
    if (s == to_string(k)) return k;
  throw SpecError("unknown subgroup family '" + s + "'");
}

SubgroupFamily enumerate_subgroups(const Group& g, FamilyKind kind) {
  SubgroupFamily fam{g, kind, {}};
  switch (kind) {
    case FamilyKind::Cyclic:
      fam.members = cyclic_family(g);
      break;
    case FamilyKind::MaximalCyclic: {
      auto cyc = cyclic_family(g);
      for (auto& s : cyc) {
        bool maximal = true;
        for (auto& t : cyc)
          if (t.size() > s.size() && s.mask().is_subset_of(t.mask())) {
            maximal = false;
            break;
          }
        if (maximal) fam.members.push_back(s);
      }
      break;
    }
    case FamilyKind::MaximalAbelian: {
      // Cyclic classes are closed twins in COM, so every maximal clique is a
      // union of whole classes.
      BuiltGraph cg = build_class_graph(g, GraphKind::Com);
      for (auto& clique : max_cliques(cg.graph)) {
        std::vector<Elem> members;
        for (auto v : clique) {
          const auto& block = g.cyclic_classes()[g.class_of(cg.vertices[v])].block;
          members.insert(members.end(), block.begin(), block.end());
        }
        std::sort(members.begin(), members.end());
        SubgroupHandle h(g, members, true);
        if (!subgroup_is(h, SubgroupProperty::Abelian)) throw Error("COM clique is not an abelian subgroup");
        if (h.size() > 1) fam.members.push_back(std::move(h));
      }
      break;
    }
    case FamilyKind::All: {
      if (g.order() > kAllOrderLimit)
        throw SizeGuardError("subgroup lattice enumeration limited to |G| <= " + std::to_string(kAllOrderLimit));
      auto atoms = cyclic_family(g);
      std::unordered_set<Bitset, BitsetHash> seen;
      std::vector<SubgroupHandle> found;
      for (auto& a : atoms)
        if (a.size() < g.order() && seen.insert(a.mask()).second) found.push_back(a);
      // Every subgroup is a join of cyclic subgroups, so joining with atoms reaches a fixpoint.
      for (std::size_t i = 0; i < found.size(); ++i) {
        const auto gens = subgroup_generators(found[i]);
        for (auto& a : atoms) {
          if (a.mask().is_subset_of(found[i].mask())) continue;
          auto seeds = gens;
          seeds.push_back(generator_of(g, a));
          auto j = generated_closure(g, seeds);
          if (!j || j->size() == g.order()) continue;
          if (seen.insert(j->mask()).second) {
            found.push_back(*j);
            if (found.size() > kAllCap) throw SizeGuardError("subgroup enumeration exceeded 10^5 subgroups");
          }
        }
      }
      fam.members = std::move(found);
      break;
    }
  }
  sort_family(fam.members);
  return fam;
}

Graph intersection_graph(const SubgroupFamily& fam) {
  const std::size_t n = fam.members.size();
  Graph out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (fam.members[i].mask().intersection_count(fam.members[j].mask()) > 1) out.add_edge(i, j);
  return out;
}

std::string format_family(const SubgroupFamily& fam) {
  std::ostringstream os;
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    os << 'H' << i << ": {";
    const auto& m = fam.members[i].members();
    for (std::size_t k = 0; k < m.size(); ++k) os << (k ? ", " : "") << m[k];
    os << "}\n";
  }
  return os.str();
}

DualPair dual_pair(const Group& g, const SubgroupFamily& fam) {
  if (!fam.owner.same_as(g)) throw SpecError("dual pair: family belongs to another group");
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) throw SpecError("dual pair: group is cyclic");
  DualPair dp;
  dp.family = fam;
  for (Elem x = 0; x < g.order(); ++x)
    if (x != g.identity()) dp.elements.push_back(x);
  const std::size_t ne = dp.elements.size(), ns = fam.members.size();
  dp.bipartite = Graph(ne + ns);
  for (std::size_t i = 0; i < ne; ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < ns; ++j)
      if (fam.members[j].contains(dp.elements[i])) {
        dp.bipartite.add_edge(i, ne + j);
        covered = true;
      }
    if (!covered) throw SpecError("dual pair: element " + g.describe(dp.elements[i]) + " lies in no member");
  }
  dp.element_half = Graph(ne);
  for (std::size_t j = 0; j < ns; ++j) {
    Bitset side(ne);
    dp.bipartite.row(ne + j).for_each([&](std::size_t i) { side.set(i); });
    side.for_each([&](std::size_t i) { dp.element_half.set_row(i, dp.element_half.row(i) | side); });
  }
  dp.element_half.check_symmetric();
  dp.subgroup_half = intersection_graph(fam);
  return dp;
}

DualPairReport dual_pair_verify(const DualPair& dp) {
  DualPairReport r;
  const std::size_t ne = dp.elements.size();
  Metrics me = metrics(dp.element_half), ms = metrics(dp.subgroup_half);
  r.element_components = me.components.size();
  r.subgroup_components = ms.components.size();
  std::vector<std::size_t> comp_e(ne), comp_s(dp.subgroup_half.n());
  for (std::size_t c = 0; c < me.components.size(); ++c)
    for (auto v : me.components[c]) comp_e[v] = c;
  for (std::size_t c = 0; c < ms.components.size(); ++c)
    for (auto v : ms.components[c]) comp_s[v] = c;
  std::vector<std::size_t> match(me.components.size(), ms.components.size());
  for (std::size_t i = 0; i < ne; ++i)
    dp.bipartite.row(i).for_each([&](std::size_t j) {
      std::size_t s = comp_s[j - ne];
      if (match[comp_e[i]] == ms.components.size()) match[comp_e[i]] = s;
      else if (match[comp_e[i]] != s && r.ok) {
        r.ok = false;
        r.failure = "an element component meets two subgroup components";
      }
    });
  std::vector<char> used(ms.components.size(), 0);
  for (auto s : match) {
    if (s == ms.components.size() || used[s]) {
      if (r.ok) r.failure = "component correspondence is not a bijection";
      r.ok = false;
      continue;
    }
    used[s] = 1;
  }
  if (r.element_components != r.subgroup_components && r.ok) {
    r.ok = false;
    r.failure = "component counts differ";
  }
  if (!r.ok) return r;
  for (std::size_t c = 0; c < me.components.size(); ++c) {
    std::size_t d1 = me.diameters[c], d2 = ms.diameters[match[c]];
    r.diameters.emplace_back(d1, d2);
    if ((d1 > d2 ? d1 - d2 : d2 - d1) > 1 && r.ok) {
      r.ok = false;
      r.failure = "component " + std::to_string(c) + " diameters differ by more than 1";
    }
  }
  return r;
}

std::string format_dual_pair(const DualPair& dp) {
  std::ostringstream os;
  const std::size_t ne = dp.elements.size();
  for (std::size_t i = 0; i < ne; ++i)
    dp.bipartite.row(i).for_each([&](std::size_t j) { os << 'E' << dp.elements[i] << " S" << (j - ne) << '\n'; });
  return os.str();
}

}  // namespace grouptrix
