#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "grouptrix/constructions.hpp"
#include "grouptrix/errors.hpp"
#include "grouptrix/graph_algorithms.hpp"
#include "grouptrix/hierarchy.hpp"
#include "grouptrix/twins.hpp"
#include "oracles.hpp"

using namespace grouptrix;

namespace {

Graph random_graph(std::size_t n, std::mt19937_64& rng, unsigned percent = 50) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng() % 100 < percent) g.add_edge(u, v);
  return g;
}

// Disjoint union or join of two cographs, recursively.
Graph random_cograph(std::size_t n, std::mt19937_64& rng) {
  if (n == 1) return Graph(1);
  const std::size_t left = 1 + rng() % (n - 1);
  const Graph a = random_cograph(left, rng), b = random_cograph(n - left, rng);
  const bool join = rng() & 1;
  Graph g(n);
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(left + u, left + v);
  if (join)
    for (std::size_t u = 0; u < left; ++u)
      for (std::size_t v = left; v < n; ++v) g.add_edge(u, v);
  return g;
}

bool brute_twin_free(const Graph& g) {
  for (std::size_t u = 0; u < g.n(); ++u)
    for (std::size_t v = u + 1; v < g.n(); ++v) {
      bool open = true, closed = true;
      for (std::size_t w = 0; w < g.n(); ++w) {
        if (w != u && w != v && g.adjacent(u, w) != g.adjacent(v, w)) open = closed = false;
      }
      if (g.adjacent(u, v)) open = false;
      else closed = false;
      if (open || closed) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("twin classes") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto closed = twin_classes(Graph::complete(n), TwinType::Closed);
    REQUIRE(closed.size() == 1);
    CHECK(closed[0].size() == n);
    auto open = twin_classes(Graph::empty(n), TwinType::Open);
    REQUIRE(open.size() == 1);
    CHECK(open[0].size() == n);
  }
  const Group c6 = make_cyclic(6);
  std::vector<std::size_t> dominating;
  for (Elem x = 0; x < 6; ++x)
    if (c6.element_order(x) == 6 || x == c6.identity()) dominating.push_back(x);
  auto classes = twin_classes(build_graph(c6, GraphKind::Pow), TwinType::Closed);
  CHECK(std::find(classes.begin(), classes.end(), dominating) != classes.end());
  CHECK(to_string(TwinType::Open) == "open");
}

TEST_CASE("cokernel examples") {
  const Group a5 = make_group("alt:5");
  CHECK(cokernel(build_graph(a5, GraphKind::Pow)).result.n() == 1);
  CHECK(cokernel(build_graph(a5, GraphKind::NGen)).result.n() == 32);
  const Graph p4 = Graph::path(4);
  auto t = cokernel(p4);
  CHECK(t.result == p4);
  CHECK(t.steps.empty());
  // A path with two leaves hanging off its end reduces to P4.
  const Graph cherry = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
  auto c = cokernel(cherry);
  CHECK(c.result.n() == 4);
  CHECK(isomorphic(c.result, p4));
  CHECK(confluence_test(cherry, 20, 1));
}

TEST_CASE("cokernels are twin-free and replay") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 300; ++i) {
    const Graph g = random_graph(1 + rng() % 14, rng, static_cast<unsigned>(rng() % 100));
    for (auto order : {ReductionOrder::Deterministic, ReductionOrder::SeededRandom, ReductionOrder::AlternatingRounds}) {
      auto t = cokernel(g, order, rng());
      CHECK(brute_twin_free(t.result));
      CHECK(is_twin_free(t.result));
      CHECK(replay(t) == t.result);
      CHECK(t.result.n() + t.steps.size() == g.n());
      CHECK(std::is_sorted(t.survivors.begin(), t.survivors.end()));
      CHECK(induced(g, t.survivors) == t.result);
      for (std::size_t v = 0; v < g.n(); ++v) CHECK(t.class_map[v] < t.result.n());
    }
  }
}

TEST_CASE("replay rejects an invalid merge") {
  auto t = cokernel(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}));
  REQUIRE(t.steps.size() == 1);
  CHECK(format_trace(t) == "MERGE 3 4 open\n");
  t.steps[0] = {0, 3, TwinType::Open};
  CHECK_THROWS_AS(replay(t), Error);
}

TEST_CASE("cokernel size 1 iff P4-free on random graphs") {
  std::mt19937_64 rng(31);
  for (std::size_t n = 1; n <= 10; ++n)
    for (int i = 0; i < 100; ++i) {
      const Graph g = random_graph(n, rng, static_cast<unsigned>(rng() % 100));
      CHECK((cokernel(g).result.n() == 1) == !oracle::has_induced_p4(g));
    }
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_cograph(1 + rng() % 64, rng);
    REQUIRE_FALSE(oracle::has_induced_p4(g));
    for (int k = 0; k < 5; ++k) CHECK(cokernel(g, ReductionOrder::SeededRandom, rng()).result.n() == 1);
  }
}

TEST_CASE("confluence across reduction orders") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 20; ++i) CHECK(confluence_test(random_graph(12, rng, 40), 20, rng()));
  for (int i = 0; i < 50; ++i) CHECK(confluence_test(random_graph(1 + rng() % 40, rng, 50), 10, rng()));
  CHECK_THROWS_AS(confluence_test(Graph(65), 2, 1), SizeGuardError);
}

TEST_CASE("group graphs: cokernel bounded by cyclic classes, nontrivial twin classes") {
  // Kinds whose adjacency depends only on <x> and <y>; Engel is treated separately below.
  const std::vector<GraphKind> kinds{GraphKind::Pow, GraphKind::EPow, GraphKind::Com, GraphKind::Gen,
                                     GraphKind::NGen, GraphKind::Nilp, GraphKind::Sol};
  for (auto& e : corpus::up_to(660)) {
    const Group g = make_group(e.spec);
    if (g.order() == 1) continue;
    CAPTURE(e.spec);
    for (auto k : kinds) {
      CAPTURE(to_string(k));
      const Graph graph = build_graph(g, k);
      CHECK(cokernel(graph).result.n() <= g.cyclic_class_count());
      auto open = twin_classes(graph, TwinType::Open), closed = twin_classes(graph, TwinType::Closed);
      const bool nontrivial = open.size() < graph.n() || closed.size() < graph.n();
      CHECK(nontrivial);
    }
  }
}

TEST_CASE("class graphs reach the same cokernel as element graphs") {
  const std::vector<GraphKind> kinds{GraphKind::Pow, GraphKind::EPow, GraphKind::Com, GraphKind::NGen,
                                     GraphKind::Nilp, GraphKind::Sol, GraphKind::Dep};
  for (auto spec : {"sym:4", "alt:5", "sl2:5", "dihedral:12", "prod(sym:3,cyclic:5)", "psl2:7"}) {
    const Group g = make_group(spec);
    CAPTURE(spec);
    for (auto k : kinds) {
      CAPTURE(to_string(k));
      const auto whole = cokernel(build_graph(g, k)).result;
      const auto classes = cokernel(build_class_graph(g, k).graph).result;
      CHECK(whole.n() == classes.n());
      if (whole.n() <= 64) CHECK(isomorphic(whole, classes));
    }
  }
}

namespace {

// [y, _k x] = 1 for some k, by direct iteration with pigeonhole bound |G|.
bool engel_arc(const Group& g, Elem x, Elem y) {
  Elem w = y;
  for (std::uint32_t k = 0; k <= g.order(); ++k) {
    w = g.commutator(w, x);
    if (w == g.identity()) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("Engel graph adjacency is not a function of cyclic subgroups") {
  // x and x^-1 generate the same subgroup but can differ in Engel adjacency, so
  // the cyclic-class bound on cokernels does not extend to the Engel graph.
  const Group g = make_group("psl2:7");
  const Graph engel = build_graph(g, GraphKind::Engel);
  std::size_t witnesses = 0;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem x2 : g.cyclic_classes()[g.class_of(x)].block) {
      if (x2 <= x) continue;
      for (Elem y = 0; y < g.order(); ++y) {
        if (y == x || y == x2) continue;
        const bool a = engel_arc(g, x, y) || engel_arc(g, y, x);
        const bool b = engel_arc(g, x2, y) || engel_arc(g, y, x2);
        REQUIRE(engel.adjacent(x, y) == a);
        REQUIRE(engel.adjacent(x2, y) == b);
        witnesses += a != b;
      }
    }
  CHECK(witnesses > 0);
  CHECK(cokernel(engel).result.n() > g.cyclic_class_count());
}
