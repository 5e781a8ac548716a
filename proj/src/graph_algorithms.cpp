#include "grouptrix/graph_algorithms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "grouptrix/errors.hpp"
#include "grouptrix/twins.hpp"

namespace grouptrix {

Graph complement(const Graph& g) {
  Graph c(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) c.set_row(v, ~g.row(v));
  return c;
}

Graph induced(const Graph& g, const std::vector<std::size_t>& s) {
  Graph h(s.size());
  std::vector<std::size_t> pos(g.n(), g.n());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.n()) throw SpecError("induced: vertex out of range");
    if (pos[s[i]] != g.n()) throw SpecError("induced: repeated vertex");
    pos[s[i]] = i;
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    g.row(s[i]).for_each([&](std::size_t v) {
      if (pos[v] != g.n()) h.add_edge(i, pos[v]);
    });
  if (!g.labels().empty()) {
    std::vector<std::string> l;
    for (auto v : s) l.push_back(g.label(v));
    h.set_labels(std::move(l));
  }
  return h;
}

Graph difference(const Graph& a, const Graph& b) {
  if (a.n() != b.n()) throw SpecError("difference: vertex counts differ");
  Graph d(a.n());
  for (std::size_t v = 0; v < a.n(); ++v) {
    Bitset r = a.row(v);
    r.subtract(b.row(v));
    d.set_row(v, r);
  }
  d.set_labels(a.labels());
  return d;
}

Graph graph_union(const Graph& a, const Graph& b) {
  if (a.n() != b.n()) throw SpecError("union: vertex counts differ");
  Graph u(a.n());
  for (std::size_t v = 0; v < a.n(); ++v) u.set_row(v, a.row(v) | b.row(v));
  u.set_labels(a.labels());
  return u;
}

Graph strong_product(const Graph& a, const Graph& b) {
  if (a.n() * b.n() > 100000) throw SizeGuardError("strong product: more than 10^5 vertices");
  const std::size_t m = b.n();
  Graph p(a.n() * m);
  for (std::size_t v1 = 0; v1 < a.n(); ++v1)
    for (std::size_t v2 = v1; v2 < a.n(); ++v2) {
      if (v1 != v2 && !a.adjacent(v1, v2)) continue;
      for (std::size_t w1 = 0; w1 < m; ++w1)
        for (std::size_t w2 = 0; w2 < m; ++w2) {
          if (w1 != w2 && !b.adjacent(w1, w2)) continue;
          p.add_edge(v1 * m + w1, v2 * m + w2);
        }
    }
  return p;
}

// ---------------------------------------------------------------- metrics

std::size_t component_diameter(const Graph& g, const std::vector<std::size_t>& comp) {
  std::size_t diam = 0;
  for (std::size_t s : comp) {
    Bitset visited(g.n()), frontier(g.n());
    visited.set(s);
    frontier.set(s);
    std::size_t level = 0;
    while (true) {
      Bitset next(g.n());
      frontier.for_each([&](std::size_t v) { next |= g.row(v); });
      next.subtract(visited);
      if (next.none()) break;
      visited |= next;
      frontier = std::move(next);
      ++level;
    }
    diam = std::max(diam, level);
  }
  return diam;
}

Metrics metrics(const Graph& g, bool with_diameters) {
  Metrics m;
  Bitset unvisited(g.n());
  unvisited.set_all();
  for (std::size_t s = unvisited.first(); s < g.n(); s = unvisited.first()) {
    std::vector<std::size_t> comp{s};
    unvisited.reset(s);
    for (std::size_t k = 0; k < comp.size(); ++k) {
      Bitset nb = g.row(comp[k]) & unvisited;
      nb.for_each([&](std::size_t v) { comp.push_back(v); });
      unvisited.subtract(nb);
    }
    std::sort(comp.begin(), comp.end());
    m.components.push_back(std::move(comp));
  }
  m.connected = m.components.size() <= 1;
  if (with_diameters)
    for (auto& c : m.components) m.diameters.push_back(component_diameter(g, c));
  return m;
}

// ---------------------------------------------------------------- cliques

std::vector<std::vector<std::size_t>> max_cliques(const Graph& g, std::size_t cap) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> r;
  std::function<void(Bitset, Bitset)> bk = [&](Bitset p, Bitset x) {
    if (p.none()) {
      if (x.none()) {
        if (out.size() >= cap) throw SizeGuardError("max_cliques: more than " + std::to_string(cap) + " cliques");
        auto c = r;
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
      }
      return;
    }
    // Pivot maximising |P ∩ N(u)| over P ∪ X.
    std::size_t pivot = g.n(), best = 0;
    auto consider = [&](std::size_t u) {
      std::size_t c = p.intersection_count(g.row(u));
      if (pivot == g.n() || c > best) {
        pivot = u;
        best = c;
      }
    };
    p.for_each(consider);
    x.for_each(consider);
    Bitset cand = p;
    cand.subtract(g.row(pivot));
    cand.for_each([&](std::size_t v) {
      r.push_back(v);
      bk(p & g.row(v), x & g.row(v));
      r.pop_back();
      p.reset(v);
      x.set(v);
    });
  };
  if (g.n() == 0) return out;
  Bitset all(g.n());
  all.set_all();
  bk(all, Bitset(g.n()));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t clique_number(const Graph& g) {
  if (g.n() == 0) return 0;
  std::size_t best = 1;
  // Branch and bound with greedy colouring bounds.
  std::function<void(std::size_t, const Bitset&)> expand = [&](std::size_t size, const Bitset& p) {
    std::vector<std::size_t> order, colour;
    Bitset uncoloured = p;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      Bitset avail = uncoloured;
      for (std::size_t v = avail.first(); v < g.n(); v = avail.next(v + 1)) {
        order.push_back(v);
        colour.push_back(c);
        uncoloured.reset(v);
        avail.reset(v);
        avail.subtract(g.row(v));
      }
    }
    Bitset rest = p;
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + colour[i] <= best) return;
      std::size_t v = order[i];
      Bitset np = rest & g.row(v);
      if (np.none())
        best = std::max(best, size + 1);
      else
        expand(size + 1, np);
      rest.reset(v);
    }
  };
  Bitset all(g.n());
  all.set_all();
  expand(0, all);
  return best;
}

std::size_t independence_number(const Graph& g) { return clique_number(complement(g)); }

std::size_t chromatic_number(const Graph& g) {
  const std::size_t n = g.n();
  if (n > 64) throw SizeGuardError("chromatic number: exact computation limited to 64 vertices");
  if (n == 0) return 0;
  std::vector<std::uint64_t> adj(n, 0);
  for (std::size_t v = 0; v < n; ++v) g.row(v).for_each([&](std::size_t u) { adj[v] |= std::uint64_t{1} << u; });
  const std::size_t lower = clique_number(g);
  std::size_t best = n + 1;
  std::vector<int> colour(n, -1);
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t coloured, std::size_t used) {
    if (best == lower) return;
    if (used >= best) return;
    if (coloured == n) {
      best = used;
      return;
    }
    // DSATUR choice: most distinct neighbour colours, then most uncoloured neighbours.
    std::size_t pick = n;
    int best_sat = -1, best_deg = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      std::uint64_t seen = 0;
      int deg = 0;
      for (std::uint64_t m = adj[v]; m; m &= m - 1) {
        int u = __builtin_ctzll(m);
        if (colour[u] >= 0)
          seen |= std::uint64_t{1} << colour[u];
        else
          ++deg;
      }
      int sat = __builtin_popcountll(seen);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    std::uint64_t forbidden = 0;
    for (std::uint64_t m = adj[pick]; m; m &= m - 1) {
      int u = __builtin_ctzll(m);
      if (colour[u] >= 0) forbidden |= std::uint64_t{1} << colour[u];
    }
    for (std::size_t c = 0; c < used; ++c) {
      if (forbidden >> c & 1) continue;
      colour[pick] = static_cast<int>(c);
      go(coloured + 1, used);
      colour[pick] = -1;
    }
    if (used + 1 < best) {
      colour[pick] = static_cast<int>(used);
      go(coloured + 1, used + 1);
      colour[pick] = -1;
    }
  };
  go(0, 0);
  return best;
}

std::size_t clique_cover_number(const Graph& g) { return chromatic_number(complement(g)); }

CliqueParams clique_params(const Graph& g) {
  CliqueParams p;
  p.omega = clique_number(g);
  p.alpha = independence_number(g);
  if (g.n() <= 64) {
    p.chi = chromatic_number(g);
    p.theta = clique_cover_number(g);
    if (p.omega > *p.chi || p.alpha > *p.theta) throw Error("clique parameters violate omega <= chi or alpha <= theta");
  }
  return p;
}

// ---------------------------------------------------------------- forbidden subgraphs

std::optional<std::array<std::size_t, 4>> find_induced_p4(const Graph& g) {
  for (std::size_t b = 0; b < g.n(); ++b) {
    for (std::size_t c = g.row(b).next(b + 1); c < g.n(); c = g.row(b).next(c + 1)) {
      Bitset a_side = g.row(b);
      a_side.subtract(g.row(c));
      a_side.reset(c);
      if (a_side.none()) continue;
      Bitset d_side = g.row(c);
      d_side.subtract(g.row(b));
      d_side.reset(b);
      if (d_side.none()) continue;
      for (std::size_t a = a_side.first(); a < g.n(); a = a_side.next(a + 1)) {
        Bitset d = d_side;
        d.subtract(g.row(a));
        if (d.any()) return std::array<std::size_t, 4>{a, b, c, d.first()};
      }
    }
  }
  return std::nullopt;
}

namespace {

// Induced 2K2 as (a,b,c,d) with edges ab, cd.
std::optional<std::array<std::size_t, 4>> find_2k2(const Graph& g) {
  for (auto [a, b] : g.edges()) {
    Bitset far = ~(g.row(a) | g.row(b));
    far.reset(a);
    far.reset(b);
    for (std::size_t c = far.first(); c < g.n(); c = far.next(c + 1)) {
      Bitset d = g.row(c) & far;
      if (d.any()) return std::array<std::size_t, 4>{a, b, c, d.first()};
    }
  }
  return std::nullopt;
}

// Induced C4 in cycle order.
std::optional<std::array<std::size_t, 4>> find_c4(const Graph& g) {
  for (std::size_t u = 0; u < g.n(); ++u)
    for (std::size_t w = u + 1; w < g.n(); ++w) {
      if (g.adjacent(u, w)) continue;
      Bitset common = g.row(u) & g.row(w);
      for (std::size_t x = common.first(); x < g.n(); x = common.next(x + 1)) {
        Bitset y = common;
        y.subtract(g.row(x));
        y.reset(x);
        if (y.any()) return std::array<std::size_t, 4>{u, x, w, y.first()};
      }
    }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 5>> find_c5(const Graph& g) {
  for (std::size_t a = 0; a < g.n(); ++a)
    for (std::size_t b : g.row(a).to_vector()) {
      Bitset cs = g.row(b);
      cs.subtract(g.row(a));
      cs.reset(a);
      for (std::size_t c : cs.to_vector()) {
        Bitset ds = g.row(c);
        ds.subtract(g.row(a));
        ds.subtract(g.row(b));
        ds.reset(a);
        ds.reset(b);
        for (std::size_t d : ds.to_vector()) {
          Bitset es = g.row(d) & g.row(a);
          es.subtract(g.row(b));
          es.subtract(g.row(c));
          es.reset(b);
          es.reset(c);
          if (es.any()) return std::array<std::size_t, 5>{a, b, c, d, es.first()};
        }
      }
    }
  return std::nullopt;
}

// Shortest u-w path avoiding N[v] \ {u,w}; closes a chordless cycle through v.
std::optional<std::vector<std::size_t>> chordless_cycle_through(const Graph& g, std::size_t v, std::size_t u, std::size_t w) {
  Bitset blocked = g.row(v);
  blocked.set(v);
  blocked.reset(u);
  blocked.reset(w);
  std::vector<std::size_t> parent(g.n(), g.n());
  std::vector<std::size_t> queue{u};
  parent[u] = u;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    std::size_t x = queue[k];
    if (x == w) break;
    g.row(x).for_each([&](std::size_t y) {
      if (parent[y] == g.n() && !blocked.test(y)) {
        parent[y] = x;
        queue.push_back(y);
      }
    });
  }
  if (parent[w] == g.n()) return std::nullopt;
  std::vector<std::size_t> cyc{v};
  std::vector<std::size_t> path;
  for (std::size_t x = w; x != u; x = parent[x]) path.push_back(x);
  path.push_back(u);
  std::reverse(path.begin(), path.end());
  cyc.insert(cyc.end(), path.begin(), path.end());
  return cyc;
}

ClassResult chordal_test(const Graph& g) {
  const std::size_t n = g.n();
  // Maximum cardinality search; PEO is the reverse visiting order.
  std::vector<std::size_t> weight(n, 0), peo_pos(n, 0);
  std::vector<char> done(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!done[v] && (pick == n || weight[v] > weight[pick])) pick = v;
    done[pick] = 1;
    peo_pos[pick] = n - 1 - step;
    g.row(pick).for_each([&](std::size_t u) {
      if (!done[u]) ++weight[u];
    });
  }
  ClassResult r;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> later;
    g.row(v).for_each([&](std::size_t u) {
      if (peo_pos[u] > peo_pos[v]) later.push_back(u);
    });
    if (later.size() < 2) continue;
    std::size_t first = *std::min_element(later.begin(), later.end(),
                                          [&](std::size_t a, std::size_t b) { return peo_pos[a] < peo_pos[b]; });
    for (std::size_t w : later) {
      if (w == first || g.adjacent(first, w)) continue;
      r.member = false;
      if (auto cyc = chordless_cycle_through(g, v, first, w)) {
        r.witness = *cyc;
        r.witness_kind = "C" + std::to_string(cyc->size());
        return r;
      }
    }
  }
  if (r.member) return r;
  for (std::size_t v = 0; v < n; ++v) {
    auto nb = g.row(v).to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        if (auto cyc = chordless_cycle_through(g, v, nb[i], nb[j])) {
          r.witness = *cyc;
          r.witness_kind = "C" + std::to_string(cyc->size());
          return r;
        }
      }
  }
  throw Error("chordal test: ordering failed but no chordless cycle found");
}

bool hammer_simeone(const Graph& g) {
  std::vector<std::size_t> d(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) d[v] = g.degree(v);
  std::sort(d.rbegin(), d.rend());
  std::size_t m = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] + 1 >= i + 1) m = i + 1;  // d_i >= i - 1 with 1-based i
  std::size_t lhs = 0, rhs = m * (m - (m ? 1 : 0));
  for (std::size_t i = 0; i < d.size(); ++i) (i < m ? lhs : rhs) += d[i];
  return lhs == rhs;
}

template <std::size_t K>
void set_witness(ClassResult& r, const std::array<std::size_t, K>& w, const char* kind) {
  r.member = false;
  r.witness.assign(w.begin(), w.end());
  r.witness_kind = kind;
}

}  // namespace

ClassResult class_test(const Graph& g, GraphClass kind) {
  ClassResult r;
  switch (kind) {
    case GraphClass::Cograph: {
      auto p4 = find_induced_p4(g);
      bool reduces = cokernel(g).result.n() <= 1;
      if (reduces == p4.has_value()) throw Error("cograph test: P4 search and twin reduction disagree");
      if (p4) set_witness(r, *p4, "P4");
      return r;
    }
    case GraphClass::Chordal:
      return chordal_test(g);
    case GraphClass::Split: {
      bool split = hammer_simeone(g);
      if (auto w = find_2k2(g))
        set_witness(r, *w, "2K2");
      else if (auto c = find_c4(g))
        set_witness(r, *c, "C4");
      else if (auto c5 = find_c5(g))
        set_witness(r, *c5, "C5");
      if (split != r.member) throw Error("split test: degree criterion and forbidden subgraph search disagree");
      return r;
    }
    case GraphClass::Threshold: {
      if (auto p4 = find_induced_p4(g))
        set_witness(r, *p4, "P4");
      else if (auto c = find_c4(g))
        set_witness(r, *c, "C4");
      else if (auto w = find_2k2(g))
        set_witness(r, *w, "2K2");
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------- isomorphism

namespace {

// Colour refinement run on both graphs jointly so colours are comparable.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine(const Graph& a, const Graph& b) {
  const std::size_t n = a.n();
  std::vector<std::size_t> ca(n, 0), cb(n, 0);
  std::size_t classes = 1;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> sig_id;
    auto signature = [&](const Graph& g, const std::vector<std::size_t>& c, std::size_t v) {
      std::vector<std::size_t> s;
      g.row(v).for_each([&](std::size_t u) { s.push_back(c[u]); });
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), c[v]);
      return s;
    };
    std::vector<std::vector<std::size_t>> sa(n), sb(n);
    for (std::size_t v = 0; v < n; ++v) {
      sa[v] = signature(a, ca, v);
      sb[v] = signature(b, cb, v);
      sig_id.emplace(sa[v], 0);
      sig_id.emplace(sb[v], 0);
    }
    std::size_t id = 0;
    for (auto& kv : sig_id) kv.second = id++;
    std::vector<std::size_t> na(n), nb(n);
    for (std::size_t v = 0; v < n; ++v) {
      na[v] = sig_id[sa[v]];
      nb[v] = sig_id[sb[v]];
    }
    ca = std::move(na);
    cb = std::move(nb);
    if (sig_id.size() == classes) return {ca, cb};
    classes = sig_id.size();
  }
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() > 64 || b.n() > 64) throw SizeGuardError("isomorphism test limited to 64 vertices");
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  const std::size_t n = a.n();
  if (n == 0) return true;
  auto [ca, cb] = refine(a, b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<std::uint64_t> adja(n, 0), adjb(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    a.row(v).for_each([&](std::size_t u) { adja[v] |= std::uint64_t{1} << u; });
    b.row(v).for_each([&](std::size_t u) { adjb[v] |= std::uint64_t{1} << u; });
  }
  // Order: repeatedly take the vertex with most ordered neighbours, then rarest colour.
  std::vector<std::size_t> freq(2 * n + 1, 0);
  for (auto c : ca) ++freq[c];
  std::vector<std::size_t> order;
  std::uint64_t placed = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    int best_conn = -1;
    std::size_t best_freq = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed >> v & 1) continue;
      int conn = __builtin_popcountll(adja[v] & placed);
      if (conn > best_conn || (conn == best_conn && freq[ca[v]] < best_freq)) {
        pick = v;
        best_conn = conn;
        best_freq = freq[ca[v]];
      }
    }
    order.push_back(pick);
    placed |= std::uint64_t{1} << pick;
  }
  std::vector<std::size_t> map(n, n);
  std::uint64_t used = 0;
  std::function<bool(std::size_t)> go = [&](std::size_t k) {
    if (k == n) return true;
    std::size_t v = order[k];
    for (std::size_t w = 0; w < n; ++w) {
      if ((used >> w & 1) || cb[w] != ca[v]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        std::size_t u = order[j];
        ok = ((adja[v] >> u) & 1) == ((adjb[w] >> map[u]) & 1);
      }
      if (!ok) continue;
      map[v] = w;
      used |= std::uint64_t{1} << w;
      if (go(k + 1)) return true;
      used &= ~(std::uint64_t{1} << w);
      map[v] = n;
    }
    return false;
  };
  return go(0);
}

// ---------------------------------------------------------------- misc

bool has_spread(const Graph& g, int k) {
  if (k == 1) {
    if (g.n() == 0) return false;
    for (std::size_t v = 0; v < g.n(); ++v)
      if (g.row(v).none()) return false;
    return true;
  }
  if (k == 2) {
    for (std::size_t u = 0; u < g.n(); ++u)
      for (std::size_t v = u + 1; v < g.n(); ++v)
        if (!g.row(u).intersects(g.row(v))) return false;
    return true;
  }
  throw SpecError("spread is only defined here for k = 1, 2");
}

bool is_transitive(const Digraph& d) {
  for (std::size_t u = 0; u < d.n(); ++u) {
    bool ok = true;
    d.out(u).for_each([&](std::size_t v) {
      Bitset reach = d.out(v);
      reach.reset(u);
      if (!reach.is_subset_of(d.out(u))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool comparability_check(const Digraph& d, const Graph& g) {
  if (d.n() != g.n()) throw SpecError("comparability check: vertex counts differ");
  return is_transitive(d) && d.underlying() == g;
}

std::optional<Digraph> transitive_orientation(const Graph& g) {
  if (g.n() > 8) throw SizeGuardError("transitive orientation search limited to 8 vertices");
  const std::size_t n = g.n();
  auto edges = g.edges();
  // dir[u][v] = 1 when oriented u -> v.
  std::vector<std::vector<char>> dir(n, std::vector<char>(n, 0));
  auto consistent = [&]() {
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        if (!dir[u][v]) continue;
        for (std::size_t w = 0; w < n; ++w) {
          if (w == u || !dir[v][w]) continue;
          if (!g.adjacent(u, w) || dir[w][u]) return false;
        }
      }
    return true;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t k) {
    if (k == edges.size()) return true;
    auto [u, v] = edges[k];
    for (int side = 0; side < 2; ++side) {
      std::size_t a = side ? v : u, b = side ? u : v;
      dir[a][b] = 1;
      if (consistent() && go(k + 1)) return true;
      dir[a][b] = 0;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  Digraph d(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (dir[u][v]) d.add_arc(u, v);
  return d;
}

}  // namespace grouptrix
