#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "corpus.hpp"
#include "grouptrix/constructions.hpp"
#include "grouptrix/errors.hpp"
#include "grouptrix/graph_algorithms.hpp"
#include "grouptrix/hierarchy.hpp"
#include "grouptrix/subgroups.hpp"
#include "oracles.hpp"

using namespace grouptrix;

namespace {

using ElemSet = std::vector<Elem>;

std::set<ElemSet> member_sets(const SubgroupFamily& f) {
  std::set<ElemSet> out;
  for (auto& h : f.members) out.insert(h.members());
  return out;
}

// Every nontrivial proper subgroup by testing all subsets for closure.
std::set<ElemSet> brute_subgroups(const Group& g) {
  std::set<ElemSet> out;
  const std::size_t n = g.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask >> g.identity() & 1)) continue;
    ElemSet s;
    for (Elem x = 0; x < n; ++x)
      if (mask >> x & 1) s.push_back(x);
    if (s.size() == 1 || s.size() == n || n % s.size() != 0) continue;
    bool closed = true;
    for (std::size_t i = 0; i < s.size() && closed; ++i)
      for (std::size_t j = 0; j < s.size() && closed; ++j) closed = mask >> g.mul(s[i], s[j]) & 1;
    if (closed) out.insert(s);
  }
  return out;
}

std::vector<std::size_t> non_identity(const Group& g) {
  std::vector<std::size_t> v;
  for (Elem x = 0; x < g.order(); ++x)
    if (x != g.identity()) v.push_back(x);
  return v;
}

bool share_nontrivial(const Group& g, const ElemSet& a, const ElemSet& b) {
  for (Elem x : a)
    if (x != g.identity() && std::binary_search(b.begin(), b.end(), x)) return true;
  return false;
}

}  // namespace

TEST_CASE("subgroup family examples") {
  const Group a5 = make_alternating(5);
  CHECK(enumerate_subgroups(a5, FamilyKind::Cyclic).members.size() == 31);
  const Group q8 = make_group("q8");
  auto mc = enumerate_subgroups(q8, FamilyKind::MaximalCyclic);
  REQUIRE(mc.members.size() == 3);
  for (auto& h : mc.members) {
    CHECK(h.size() == 4);
    CHECK(oracle::cyclic_set(q8, h.members()));
  }
  CHECK(enumerate_subgroups(make_symmetric(3), FamilyKind::All).members.size() == 4);
  CHECK(enumerate_subgroups(make_symmetric(4), FamilyKind::All).members.size() == 28);
  CHECK(enumerate_subgroups(a5, FamilyKind::All).members.size() == 57);
  CHECK_THROWS_AS(enumerate_subgroups(make_group("psl2:8"), FamilyKind::All), SizeGuardError);
  CHECK(parse_family_kind(to_string(FamilyKind::MaximalAbelian)) == FamilyKind::MaximalAbelian);
}

TEST_CASE("families agree with brute force") {
  for (auto spec : {"cyclic:6", "v4", "sym:3", "dihedral:8", "q8", "cyclic:12", "alt:4", "dihedral:10", "genq:12",
                    "elab:2,3", "dihedral:16", "elab:2,4", "genq:16"}) {
    const Group g = make_group(spec);
    CAPTURE(spec);
    const auto all = brute_subgroups(g);
    CHECK(member_sets(enumerate_subgroups(g, FamilyKind::All)) == all);

    std::set<ElemSet> cyclic, abelian;
    for (auto& h : all)
      if (oracle::cyclic_set(g, h)) cyclic.insert(h);
    for (Elem x = 0; x < g.order(); ++x)
      if (oracle::powers(g, x).size() == g.order()) {
        auto p = oracle::powers(g, x);
        std::sort(p.begin(), p.end());
        cyclic.insert(p);
      }
    CHECK(member_sets(enumerate_subgroups(g, FamilyKind::Cyclic)) == cyclic);

    auto maximal = [](const std::set<ElemSet>& s) {
      std::set<ElemSet> out;
      for (auto& a : s) {
        bool top = true;
        for (auto& b : s)
          if (b.size() > a.size() && std::includes(b.begin(), b.end(), a.begin(), a.end())) top = false;
        if (top) out.insert(a);
      }
      return out;
    };
    CHECK(member_sets(enumerate_subgroups(g, FamilyKind::MaximalCyclic)) == maximal(cyclic));

    std::set<ElemSet> with_whole = all;
    ElemSet whole(g.order());
    for (Elem x = 0; x < g.order(); ++x) whole[x] = x;
    with_whole.insert(whole);
    for (auto& h : with_whole)
      if (oracle::commuting_set(g, h)) abelian.insert(h);
    CHECK(member_sets(enumerate_subgroups(g, FamilyKind::MaximalAbelian)) == maximal(abelian));
  }
}

TEST_CASE("intersection graphs") {
  const Group c6 = make_cyclic(6);
  auto fam = enumerate_subgroups(c6, FamilyKind::Cyclic);
  const Graph ig = intersection_graph(fam);
  for (std::size_t i = 0; i < fam.members.size(); ++i)
    for (std::size_t j = i + 1; j < fam.members.size(); ++j) {
      const bool expect = share_nontrivial(c6, fam.members[i].members(), fam.members[j].members());
      CHECK(ig.adjacent(i, j) == expect);
      if (fam.members[i].size() * fam.members[j].size() == 6) CHECK_FALSE(ig.adjacent(i, j));
    }
  // Every nontrivial subgroup of Q8 contains -1, including <-1> itself.
  CHECK(intersection_graph(enumerate_subgroups(make_group("q8"), FamilyKind::Cyclic)) == Graph::complete(4));
  CHECK(intersection_graph(enumerate_subgroups(make_group("q8"), FamilyKind::MaximalCyclic)) == Graph::complete(3));

  const Graph a5all = intersection_graph(enumerate_subgroups(make_alternating(5), FamilyKind::All));
  const Metrics m = metrics(a5all);
  REQUIRE(m.connected);
  CHECK(m.diameters.front() <= 5);
}

TEST_CASE("intersection graph is invariant under reordering") {
  std::mt19937_64 rng(41);
  for (auto spec : {"sym:4", "dihedral:12", "alt:5"}) {
    const Group g = make_group(spec);
    for (auto kind : {FamilyKind::Cyclic, FamilyKind::MaximalCyclic, FamilyKind::MaximalAbelian}) {
      auto fam = enumerate_subgroups(g, kind);
      const Graph base = intersection_graph(fam);
      std::vector<std::size_t> perm(fam.members.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      SubgroupFamily shuffled{fam.owner, fam.kind, {}};
      for (auto i : perm) shuffled.members.push_back(fam.members[i]);
      const Graph other = intersection_graph(shuffled);
      for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = 0; j < perm.size(); ++j)
          if (i != j) CHECK(other.adjacent(i, j) == base.adjacent(perm[i], perm[j]));
    }
  }
}

TEST_CASE("dual pairs") {
  const Group a5 = make_alternating(5);
  const auto keep = non_identity(a5);
  auto ab = dual_pair(a5, enumerate_subgroups(a5, FamilyKind::MaximalAbelian));
  CHECK(ab.element_half == induced(build_graph(a5, GraphKind::Com), keep));
  CHECK(ab.subgroup_half == intersection_graph(ab.family));
  auto rep = dual_pair_verify(ab);
  CHECK(rep.ok);
  CHECK(rep.element_components == rep.subgroup_components);
  CHECK(rep.element_components > 1);

  auto all = dual_pair(a5, enumerate_subgroups(a5, FamilyKind::All));
  CHECK(all.element_half == induced(build_graph(a5, GraphKind::NGen), keep));
  CHECK(dual_pair_verify(all).ok);

  const Group s4 = make_symmetric(4);
  auto s4all = dual_pair_verify(dual_pair(s4, enumerate_subgroups(s4, FamilyKind::All)));
  CHECK(s4all.ok);
  CHECK(s4all.element_components == 1);
  for (auto [d1, d2] : s4all.diameters) CHECK((d1 > d2 ? d1 - d2 : d2 - d1) <= 1);

  const Group q8 = make_group("q8");
  auto qc = dual_pair(q8, enumerate_subgroups(q8, FamilyKind::Cyclic));
  CHECK(qc.element_half == induced(build_graph(q8, GraphKind::EPow), non_identity(q8)));
  CHECK(dual_pair_verify(qc).ok);

  CHECK_THROWS_AS(dual_pair(make_cyclic(6), enumerate_subgroups(make_cyclic(6), FamilyKind::Cyclic)), SpecError);
  auto partial = enumerate_subgroups(s4, FamilyKind::Cyclic);
  partial.members.pop_back();
  CHECK_THROWS_AS(dual_pair(s4, partial), SpecError);
}

TEST_CASE("bipartite incidence halves to both graphs") {
  const Group s4 = make_symmetric(4);
  auto dp = dual_pair(s4, enumerate_subgroups(s4, FamilyKind::MaximalCyclic));
  const std::size_t e = dp.elements.size(), s = dp.family.members.size();
  REQUIRE(dp.bipartite.n() == e + s);
  for (std::size_t v = 0; v < e + s; ++v) CHECK(dp.bipartite.degree(v) > 0);
  for (std::size_t u = 0; u < e; ++u)
    for (std::size_t v = u + 1; v < e; ++v) {
      const bool shared = dp.bipartite.row(u).intersects(dp.bipartite.row(v));
      CHECK(dp.element_half.adjacent(u, v) == shared);
    }
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      CHECK(dp.subgroup_half.adjacent(i, j) == dp.bipartite.row(e + i).intersects(dp.bipartite.row(e + j)));
  const std::string text = format_dual_pair(dp);
  CHECK(text.rfind("E" + std::to_string(dp.elements[0]) + " S", 0) == 0);
  CHECK(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) == dp.bipartite.edge_count());
}

TEST_CASE("maximal cyclic element half is the reduced enhanced power graph") {
  for (auto& e : corpus::up_to(200)) {
    const Group g = make_group(e.spec);
    bool cyclic = false;
    for (Elem x = 0; x < g.order(); ++x) cyclic = cyclic || oracle::order(g, x) == g.order();
    if (cyclic || is_generalized_quaternion(g)) continue;
    CAPTURE(e.spec);
    auto dp = dual_pair(g, enumerate_subgroups(g, FamilyKind::MaximalCyclic));
    CHECK(dp.element_half == induced(build_graph(g, GraphKind::EPow), non_identity(g)));
    CHECK(dual_pair_verify(dp).ok);
  }
}

TEST_CASE("dual enhanced power graph collapsed by classes is the cyclic intersection graph") {
  for (auto spec : {"sym:4", "alt:5", "dihedral:12", "q8", "prod(sym:3,cyclic:5)", "psl2:7"}) {
    const Group g = make_group(spec);
    CAPTURE(spec);
    const BuiltGraph cls = build_class_graph(g, GraphKind::Dep);
    const auto fam = enumerate_subgroups(g, FamilyKind::Cyclic);
    const Graph ig = intersection_graph(fam);
    REQUIRE(cls.graph.n() == fam.members.size());
    // Match each class vertex to the cyclic subgroup it generates.
    std::vector<std::size_t> at;
    for (Elem v : cls.vertices) {
      auto sub = g.cyclic(v);
      std::size_t idx = fam.members.size();
      for (std::size_t i = 0; i < fam.members.size(); ++i)
        if (fam.members[i].members() == sub) idx = i;
      REQUIRE(idx < fam.members.size());
      at.push_back(idx);
    }
    CHECK(induced(ig, at) == cls.graph);
  }
}

TEST_CASE("family listing format") {
  const Group s3 = make_symmetric(3);
  auto fam = enumerate_subgroups(s3, FamilyKind::MaximalCyclic);
  const std::string text = format_family(fam);
  CHECK(text.rfind("H0: {", 0) == 0);
  CHECK(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) == fam.members.size());
}
