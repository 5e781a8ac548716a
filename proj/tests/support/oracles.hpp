#pragma once

// Brute-force reference computations. They touch only the multiplication of a
// group or the adjacency of a graph, never the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "grouptrix/graph.hpp"
#include "grouptrix/group.hpp"
#include "grouptrix/permutation.hpp"

namespace oracle {

using grouptrix::Elem;
using grouptrix::Graph;
using grouptrix::Group;
using grouptrix::Perm;

inline std::vector<Elem> powers(const Group& g, Elem x) {
  std::vector<Elem> out{g.identity()};
  for (Elem y = x; y != g.identity(); y = g.mul(y, x)) out.push_back(y);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint32_t order(const Group& g, Elem x) {
  std::uint32_t k = 1;
  for (Elem y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

/// Closure by repeated right multiplication with the seeds until nothing new appears.
inline std::vector<Elem> closure(const Group& g, const std::vector<Elem>& seeds) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> members{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Elem s : seeds) {
      const Elem y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

inline bool is_closed(const Group& g, const std::vector<Elem>& s) {
  std::set<Elem> in(s.begin(), s.end());
  if (!in.count(g.identity())) return false;
  for (Elem a : s)
    for (Elem b : s)
      if (!in.count(g.mul(a, b))) return false;
  return true;
}

inline bool commuting_set(const Group& g, const std::vector<Elem>& s) {
  for (Elem a : s)
    for (Elem b : s)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

inline bool cyclic_set(const Group& g, const std::vector<Elem>& s) {
  for (Elem x : s)
    if (powers(g, x).size() == s.size()) return true;
  return false;
}

inline std::vector<Elem> center(const Group& g) {
  std::vector<Elem> z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return z;
}

inline std::vector<std::uint64_t> trial_factor(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      f.push_back(p);
      n /= p;
    }
  if (n > 1) f.push_back(n);
  return f;
}

inline std::set<std::uint64_t> distinct_primes(std::uint64_t n) {
  auto f = trial_factor(n);
  return {f.begin(), f.end()};
}

/// Prime graph from element orders: {p, q} joined when some order is divisible by pq.
struct PrimeGraph {
  std::set<std::uint64_t> primes;
  std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
};

inline PrimeGraph prime_graph(const Group& g) {
  PrimeGraph pg;
  pg.primes = distinct_primes(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    auto ps = distinct_primes(order(g, x));
    for (auto p : ps)
      for (auto q : ps)
        if (p < q) pg.edges.insert({p, q});
  }
  return pg;
}

inline bool prime_graph_connected(const PrimeGraph& pg) {
  if (pg.primes.empty()) return true;
  std::set<std::uint64_t> seen{*pg.primes.begin()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto [p, q] : pg.edges)
      if (seen.count(p) != seen.count(q)) {
        seen.insert(p);
        seen.insert(q);
        grew = true;
      }
  }
  return seen.size() == pg.primes.size();
}

/// Connectivity of the induced subgraph on `keep` by flood fill.
inline bool connected_on(const Graph& g, const std::vector<std::size_t>& keep) {
  if (keep.empty()) return true;
  std::set<std::size_t> allowed(keep.begin(), keep.end()), seen{keep[0]};
  std::vector<std::size_t> stack{keep[0]};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : allowed)
      if (g.adjacent(v, w) && seen.insert(w).second) stack.push_back(w);
  }
  return seen.size() == keep.size();
}

/// Induced P4 by exhaustive search over ordered quadruples.
inline bool has_induced_p4(const Graph& g) {
  const std::size_t n = g.n();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || !g.adjacent(b, c) || g.adjacent(a, c)) continue;
        for (std::size_t d = 0; d < n; ++d)
          if (d != b && g.adjacent(c, d) && !g.adjacent(a, d) && !g.adjacent(b, d)) return true;
      }
    }
  return false;
}

/// Whether the edges admit a transitive orientation, by trying all 2^m orientations.
inline bool has_transitive_orientation(const Graph& g) {
  auto edges = g.edges();
  const std::size_t m = edges.size(), n = g.n();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::vector<char>> arc(n, std::vector<char>(n, 0));
    for (std::size_t e = 0; e < m; ++e) {
      auto [u, v] = edges[e];
      if ((mask >> e) & 1) arc[u][v] = 1;
      else arc[v][u] = 1;
    }
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        if (arc[a][b])
          for (std::size_t c = 0; c < n && ok; ++c)
            if (arc[b][c] && !arc[a][c]) ok = false;
    if (ok) return true;
  }
  return false;
}

/// Size of the permutation group generated by gens, by orbit of the identity.
inline std::size_t perm_closure_size(const std::vector<Perm>& gens, std::size_t cap) {
  const std::size_t m = gens.front().size();
  std::set<Perm> seen;
  Perm id(m);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Perm> todo{id};
  seen.insert(id);
  while (!todo.empty() && seen.size() <= cap) {
    Perm x = todo.back();
    todo.pop_back();
    for (const auto& s : gens) {
      Perm y(m);
      for (std::size_t i = 0; i < m; ++i) y[i] = s[x[i]];
      if (seen.insert(y).second) todo.push_back(std::move(y));
    }
  }
  return seen.size();
}

inline std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace oracle
