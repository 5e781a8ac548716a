#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "grouptrix/arith.hpp"
#include "grouptrix/constructions.hpp"
#include "grouptrix/embeddings.hpp"
#include "grouptrix/errors.hpp"
#include "grouptrix/graph_algorithms.hpp"
#include "grouptrix/group_algorithms.hpp"
#include "grouptrix/hierarchy.hpp"
#include "oracles.hpp"

using namespace grouptrix;

namespace {

Graph random_graph(std::size_t n, std::mt19937_64& rng) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng() & 1) g.add_edge(u, v);
  return g;
}

Perm cycle_perm(std::size_t m, const std::vector<std::size_t>& pts) {
  Perm p(m);
  for (std::size_t i = 0; i < m; ++i) p[i] = i;
  for (std::size_t i = 0; i < pts.size(); ++i) p[pts[i]] = pts[(i + 1) % pts.size()];
  return p;
}

Perm random_even(std::size_t m, std::mt19937_64& rng) {
  Perm p(m);
  for (std::size_t i = 0; i < m; ++i) p[i] = i;
  do std::shuffle(p.begin(), p.end(), rng);
  while (!perm::is_even(p));
  return p;
}

}  // namespace

TEST_CASE("commuting embedding of a path") {
  const Graph p4 = Graph::path(4);
  auto cert = embed(EmbedKind::Com, p4);
  REQUIRE(cert.group);
  CHECK(cert.group->order() == 32);
  CHECK(verify_embedding(cert).ok);
  std::vector<std::size_t> image;
  for (auto& t : cert.vertex_map) image.push_back(t.at(0));
  CHECK(std::set<std::size_t>(image.begin(), image.end()).size() == 4);
  CHECK(isomorphic(induced(build_graph(*cert.group, GraphKind::Com), image), p4));
  CHECK(cert.transcript.size() == 6);
}

TEST_CASE("commuting ambient is nilpotent of class at most two with exponent dividing four") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 20; ++i) {
    auto cert = embed(EmbedKind::Com, random_graph(2 + rng() % 7, rng));
    const Group& g = *cert.group;
    auto lower = series(SubgroupHandle::whole(g), SeriesKind::LowerCentral);
    // gamma_3 is trivial.
    CHECK((lower.size() < 3 || lower[2].size() == 1));
    CHECK(lower.back().size() == 1);
    for (Elem x = 0; x < g.order(); ++x) CHECK(4 % g.element_order(x) == 0);
  }
}

TEST_CASE("power embedding of a chain and refusals") {
  Digraph chain(2);
  chain.add_arc(1, 0);
  auto cert = embed_poset(chain);
  REQUIRE(cert.product);
  std::uint64_t order = 1;
  for (auto& f : cert.product->factors) order *= f.order();
  CHECK(order == 6);
  CHECK(verify_embedding(cert).ok);
  CHECK(cert.product->is_power_of(cert.vertex_map[0], cert.vertex_map[1]));
  CHECK_FALSE(cert.product->is_power_of(cert.vertex_map[1], cert.vertex_map[0]));

  // C5 has no transitive orientation but embeds in the enhanced power graph.
  const Graph c5 = Graph::cycle(5);
  CHECK_THROWS_AS(embed(EmbedKind::Pow, c5), Error);
  CHECK(verify_embedding(embed(EmbedKind::EPow, c5)).ok);
}

TEST_CASE("power embedding succeeds exactly on comparability graphs") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      Graph g(n);
      std::size_t bit = 0;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v, ++bit)
          if (mask >> bit & 1) g.add_edge(u, v);
      bool embedded = false;
      try {
        embedded = verify_embedding(embed(EmbedKind::Pow, g)).ok;
      } catch (const Error&) {
      }
      CHECK(embedded == oracle::has_transitive_orientation(g));
    }
  }
  std::mt19937_64 rng(47);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(6, rng);
    bool embedded = false;
    try {
      embedded = verify_embedding(embed(EmbedKind::Pow, g)).ok;
    } catch (const Error&) {
    }
    CHECK(embedded == oracle::has_transitive_orientation(g));
  }
}

TEST_CASE("round trips on random instances") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 60; ++i) {
    const Graph g = random_graph(1 + rng() % 8, rng);
    for (auto k : {EmbedKind::Com, EmbedKind::EPow, EmbedKind::Dep}) {
      CAPTURE(to_string(k));
      auto cert = embed(k, g);
      CHECK(verify_embedding(cert).ok);
      CHECK(cert.instance == g);
      CHECK(cert.transcript.size() == g.n() * (g.n() - 1) / 2);
    }
  }
  for (int i = 0; i < 15; ++i) {
    const Graph g = random_graph(1 + rng() % 5, rng);
    CHECK(verify_embedding(embed(EmbedKind::Gen, g)).ok);
  }
  for (int i = 0; i < 15; ++i) {
    auto c = ColouredComplete::uniform(1 + rng() % 5, Colour::Red);
    for (std::size_t u = 0; u < c.n; ++u)
      for (std::size_t v = u + 1; v < c.n; ++v) c.set(u, v, static_cast<Colour>(rng() % 3));
    CHECK(verify_embedding(embed_coloured(c)).ok);
  }
}

TEST_CASE("corrupted certificates are rejected") {
  const Graph p4 = Graph::path(4);
  for (auto k : {EmbedKind::Com, EmbedKind::EPow, EmbedKind::Dep}) {
    CAPTURE(to_string(k));
    auto cert = embed(k, p4);
    std::swap(cert.vertex_map[0], cert.vertex_map[2]);
    const VerifyResult r = verify_embedding(cert);
    CHECK_FALSE(r.ok);
    CHECK(r.failing.has_value());
    CHECK_FALSE(r.reason.empty());
  }
  auto gen = embed(EmbedKind::Gen, p4);
  std::swap(gen.perms[0], gen.perms[2]);
  CHECK_FALSE(verify_embedding(gen).ok);
}

TEST_CASE("generating embedding of an edge") {
  auto cert = embed(EmbedKind::Gen, Graph::complete(2));
  REQUIRE(cert.perms.size() == 2);
  CHECK(cert.degree >= 7);
  std::set<std::size_t> covered;
  for (auto& p : cert.perms) {
    CHECK(perm::is_even(p));
    auto ct = perm::cycle_type(p);
    REQUIRE(ct.size() >= 1);
    CHECK(arith::is_prime(ct.front()));
    for (auto x : perm::support(p)) covered.insert(x);
  }
  CHECK(covered.size() == cert.degree);
  CHECK(verify_embedding(cert).ok);
}

TEST_CASE("three coloured triangle") {
  auto c = ColouredComplete::uniform(3, Colour::Red);
  c.set(0, 2, Colour::Green);
  c.set(1, 2, Colour::Blue);
  auto cert = embed_coloured(c);
  REQUIRE(cert.product);
  const auto& sp = *cert.product;
  CHECK(sp.factors.size() == 3);
  const auto& m = cert.vertex_map;
  CHECK(sp.cyclic_pair(m[0], m[1]));
  CHECK(sp.commute(m[0], m[2]));
  CHECK_FALSE(sp.cyclic_pair(m[0], m[2]));
  CHECK_FALSE(sp.commute(m[1], m[2]));
  CHECK(verify_embedding(cert).ok);
}

TEST_CASE("modular p-group factor predicates") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Group g = make_modular_p3(p);
    Elem a = 0, b = 0;
    // a of order p^2; b of order p outside <a> and not commuting with a.
    for (Elem x = 0; x < g.order(); ++x)
      if (g.element_order(x) == p * p) {
        a = x;
        break;
      }
    for (Elem x = 0; x < g.order(); ++x)
      if (g.element_order(x) == p && !g.commute(a, x)) {
        b = x;
        break;
      }
    REQUIRE(b != 0);
    const Elem ap = g.pow(a, p);
    CHECK(oracle::cyclic_set(g, oracle::closure(g, {b, g.identity()})));
    auto h = oracle::closure(g, {b, ap});
    CHECK(oracle::commuting_set(g, h));
    CHECK_FALSE(oracle::cyclic_set(g, h));
    CHECK_FALSE(oracle::commuting_set(g, oracle::closure(g, {b, a})));
  }
}

TEST_CASE("symbolic product rejects non-coprime factors") {
  SymbolicProduct sp{{make_cyclic(4), make_cyclic(6)}};
  CHECK_THROWS_AS(sp.check_coprime(), Error);
  SymbolicProduct ok{{make_cyclic(4), make_cyclic(9)}};
  CHECK_NOTHROW(ok.check_coprime());
  CHECK(ok.cyclic_pair({1, 0}, {0, 1}));
  CHECK(ok.commute({1, 2}, {3, 5}));
}

TEST_CASE("alternating generation certificate") {
  // Two 5-cycles covering all seven points generate A7.
  const Perm a = cycle_perm(7, {0, 1, 2, 3, 4}), b = cycle_perm(7, {2, 3, 4, 5, 6});
  REQUIRE(oracle::perm_closure_size({a, b}, 10000) == 2520);
  CHECK(perm_generates_alternating(a, b, 7));
  // Supports missing a common point.
  const Perm c = cycle_perm(8, {0, 1, 2, 3, 4}), d = cycle_perm(8, {2, 3, 4, 5, 6});
  CHECK_FALSE(perm_generates_alternating(c, d, 8));
  // Blocks {0,1},{2,3},... preserved: imprimitive.
  const Perm e = cycle_perm(8, {0, 2, 4, 6}), f = cycle_perm(8, {1, 3, 5, 7});
  const Perm ef = perm::compose(e, f);
  const Perm swap = perm::compose(cycle_perm(8, {0, 1}), cycle_perm(8, {2, 3}));
  REQUIRE(perm::is_even(ef));
  REQUIRE(oracle::perm_closure_size({ef, swap}, 30000) < 20160);
  CHECK_FALSE(perm_generates_alternating(ef, swap, 8));
}

TEST_CASE("alternating certificate agrees with closure on random pairs") {
  std::mt19937_64 rng(59);
  int decided = 0;
  for (int i = 0; i < 150; ++i) {
    const std::size_t m = 7 + rng() % 2;
    const Perm a = random_even(m, rng), b = random_even(m, rng);
    const bool truth = oracle::perm_closure_size({a, b}, oracle::factorial(m)) == oracle::factorial(m) / 2;
    try {
      const bool verdict = perm_generates_alternating(a, b, m);
      CHECK(verdict == truth);
      ++decided;
    } catch (const IndeterminateError&) {
      CHECK_FALSE(truth);
    }
  }
  CHECK(decided > 100);
}

TEST_CASE("certificate text") {
  auto cert = embed(EmbedKind::Com, Graph::path(3));
  const std::string text = format_certificate(cert);
  CHECK(text.rfind("kind: COM\n", 0) == 0);
  CHECK(text.find("ambient: ") != std::string::npos);
  CHECK(text.find("vertex 0 -> ") != std::string::npos);
  CHECK(text.find("pair (0,2): predicate=commute result=false\n") != std::string::npos);
  CHECK(parse_embed_kind(to_string(EmbedKind::ThreeColoured)) == EmbedKind::ThreeColoured);
  CHECK_THROWS_AS(embed(EmbedKind::Com, Graph(15)), SizeGuardError);
}
