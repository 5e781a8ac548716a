#include "grouptrix/embeddings.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>
#include <sstream>

#include "grouptrix/arith.hpp"
#include "grouptrix/constructions.hpp"
#include "grouptrix/errors.hpp"
#include "grouptrix/graph_algorithms.hpp"
#include "grouptrix/group_algorithms.hpp"

namespace grouptrix {

namespace {

constexpr std::size_t kComMax = 14;
constexpr std::size_t kSymbolicMax = 12;
constexpr std::size_t kGenMax = 6;

const char* colour_name(Colour c) {
  switch (c) {
    case Colour::Red: return "red";
    case Colour::Green: return "green";
    case Colour::Blue: return "blue";
  }
  return "?";
}

std::string predicate_name(EmbedKind k) {
  switch (k) {
    case EmbedKind::Com: return "commute";
    case EmbedKind::Pow: return "power";
    case EmbedKind::EPow: return "cyclic";
    case EmbedKind::Dep: return "cyclic-meet";
    case EmbedKind::Gen: return "generates-A_m";
    case EmbedKind::ThreeColoured: return "colour";
  }
  return "?";
}

// Group on F_2^n x F_2 with (v1,a1)(v2,a2) = (v1+v2, a1+a2+B(v1,v2)); element v | a << n.
Group bilinear_group(const Graph& g) {
  const std::size_t n = g.n();
  // form[i]: bit j set when B(v_i, v_j) = 1, i.e. i > j and i, j non-adjacent.
  std::vector<std::uint32_t> form(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!g.adjacent(i, j)) form[i] |= 1u << j;
  const std::uint32_t vmask = (1u << n) - 1;
  auto mul = [form, n, vmask](Elem x, Elem y) {
    const std::uint32_t v1 = x & vmask, v2 = y & vmask;
    std::uint32_t b = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (v1 >> i & 1) b ^= static_cast<std::uint32_t>(std::popcount(form[i] & v2)) & 1u;
    const std::uint32_t a = ((x >> n) ^ (y >> n) ^ b) & 1u;
    return static_cast<Elem>((v1 ^ v2) | a << n);
  };
  auto describe = [n, vmask](Elem x) {
    std::string s = "(";
    for (std::size_t i = 0; i < n; ++i) s += (x & vmask) >> i & 1 ? '1' : '0';
    return s + "," + std::to_string(x >> n) + ")";
  };
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(1u << i);
  gens.push_back(1u << n);
  return Group(std::make_shared<FunctionRep>(2u << n, 0, mul, describe, gens),
               "B" + std::to_string(2u << n));
}

Elem generator_of_cyclic(const Group& c) { return c.order() > 1 ? 1 : 0; }

void require_size(std::size_t n, std::size_t max, const std::string& what) {
  if (n > max) throw SizeGuardError(what + ": at most " + std::to_string(max) + " vertices");
}

}  // namespace

std::string to_string(EmbedKind k) {
  switch (k) {
    case EmbedKind::Com: return "COM";
    case EmbedKind::Pow: return "POW";
    case EmbedKind::EPow: return "EPOW";
    case EmbedKind::Dep: return "DEP";
    case EmbedKind::Gen: return "GEN";
    case EmbedKind::ThreeColoured: return "THREE_COLOURED";
  }
  return "?";
}

EmbedKind parse_embed_kind(const std::string& s) {
  std::string u;
  for (char c : s) u += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (EmbedKind k : {EmbedKind::Com, EmbedKind::Pow, EmbedKind::EPow, EmbedKind::Dep, EmbedKind::Gen,
                      EmbedKind::ThreeColoured})
    if (u == to_string(k)) return k;
  throw SpecError("unknown embedding kind '" + s + "'");
}

ColouredComplete ColouredComplete::uniform(std::size_t n, Colour c) {
  return {n, std::vector<std::vector<Colour>>(n, std::vector<Colour>(n, c))};
}

void ColouredComplete::set(std::size_t u, std::size_t v, Colour c) {
  colour[u][v] = c;
  colour[v][u] = c;
}

void SymbolicProduct::check_coprime() const {
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (arith::gcd(factors[i].order(), factors[j].order()) != 1)
        throw Error("symbolic product: factor orders " + std::to_string(factors[i].order()) + " and " +
                    std::to_string(factors[j].order()) + " are not coprime");
}

bool SymbolicProduct::commute(const Tuple& x, const Tuple& y) const {
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (!factors[i].commute(x[i], y[i])) return false;
  return true;
}

bool SymbolicProduct::cyclic_pair(const Tuple& x, const Tuple& y) const {
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (!generated_is(factors[i], {x[i], y[i]}, SubgroupProperty::Cyclic)) return false;
  return true;
}

bool SymbolicProduct::is_power_of(const Tuple& x, const Tuple& y) const {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& c = factors[i].cyclic(y[i]);
    if (!std::binary_search(c.begin(), c.end(), x[i])) return false;
  }
  return true;
}

bool SymbolicProduct::cyclic_meet(const Tuple& x, const Tuple& y) const {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& a = factors[i].cyclic(x[i]);
    const auto& b = factors[i].cyclic(y[i]);
    std::vector<Elem> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.size() > 1) return true;
  }
  return false;
}

std::string SymbolicProduct::describe() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? " x " : "") + factors[i].label();
  return s.empty() ? "1" : s;
}

std::string SymbolicProduct::describe(const Tuple& x) const {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + std::to_string(i) + ":" + std::to_string(x[i]);
  return s + ")";
}

namespace {

// Adjacency the certificate claims for (u, v), read from the instance.
bool expected_pair(const EmbeddingCertificate& c, std::size_t u, std::size_t v) {
  return c.instance.adjacent(u, v);
}

// Evaluates the target predicate on the ambient. For ThreeColoured the result
// is "pair realises its colour".
bool evaluate_pair(const EmbeddingCertificate& c, std::size_t u, std::size_t v) {
  const auto& x = c.vertex_map[u];
  const auto& y = c.vertex_map[v];
  switch (c.kind) {
    case EmbedKind::Com:
      return c.group->commute(x[0], y[0]);
    case EmbedKind::Pow:
      return c.product->is_power_of(x, y) || c.product->is_power_of(y, x);
    case EmbedKind::EPow:
      return c.product->cyclic_pair(x, y);
    case EmbedKind::Dep:
      return c.product->cyclic_meet(x, y);
    case EmbedKind::Gen:
      return perm_generates_alternating(c.perms[u], c.perms[v], c.degree);
    case EmbedKind::ThreeColoured: {
      const bool cyc = c.product->cyclic_pair(x, y);
      const bool com = c.product->commute(x, y);
      switch (c.colours->colour[u][v]) {
        case Colour::Red: return cyc;
        case Colour::Green: return com && !cyc;
        case Colour::Blue: return !com;
      }
    }
  }
  return false;
}

void fill_transcript(EmbeddingCertificate& c) {
  c.transcript.clear();
  const std::size_t n = c.vertex_map.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      std::string pred = predicate_name(c.kind);
      if (c.kind == EmbedKind::ThreeColoured) pred = colour_name(c.colours->colour[u][v]);
      c.transcript.push_back({u, v, pred, evaluate_pair(c, u, v)});
    }
}

EmbeddingCertificate embed_com(const Graph& g) {
  require_size(g.n(), kComMax, "COM embedding");
  EmbeddingCertificate c;
  c.kind = EmbedKind::Com;
  c.instance = g;
  c.group = bilinear_group(g);
  for (std::size_t i = 0; i < g.n(); ++i) c.vertex_map.push_back({static_cast<Elem>(1u << i)});
  return c;
}

EmbeddingCertificate embed_epow(const Graph& g) {
  require_size(g.n(), kSymbolicMax, "EPOW embedding");
  EmbeddingCertificate c;
  c.kind = EmbedKind::EPow;
  c.instance = g;
  SymbolicProduct prod;
  arith::PrimeSupply primes(3);
  const std::size_t n = g.n();
  std::vector<Elem> ps;
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = primes.next();
    primes.avoid(p);
    ps.push_back(static_cast<Elem>(p));
    prod.factors.push_back(make_elementary_abelian(ps.back(), 2));
  }
  // Factor k is <a_k> x <b_k> with a_k = (1,0), b_k = (0,1): index 1 and p.
  for (std::size_t j = 0; j < n; ++j) {
    SymbolicProduct::Tuple t(n, 0);
    t[j] = ps[j];
    for (std::size_t k = j + 1; k < n; ++k)
      if (!g.adjacent(j, k)) t[k] = 1;
    c.vertex_map.push_back(std::move(t));
  }
  c.product = std::move(prod);
  return c;
}

EmbeddingCertificate embed_dep(const Graph& g) {
  require_size(g.n(), kSymbolicMax, "DEP embedding");
  EmbeddingCertificate c;
  c.kind = EmbedKind::Dep;
  c.instance = g;
  SymbolicProduct prod;
  arith::PrimeSupply primes(3);
  auto edges = g.edges();
  auto add_factor = [&] {
    const auto p = primes.next();
    primes.avoid(p);
    prod.factors.push_back(make_cyclic(static_cast<std::uint32_t>(p)));
  };
  for (std::size_t e = 0; e < edges.size(); ++e) add_factor();
  // A private factor per vertex keeps isolated vertices away from the identity
  // and the map injective; it meets no other vertex.
  for (std::size_t v = 0; v < g.n(); ++v) add_factor();
  const std::size_t f = prod.factors.size();
  for (std::size_t v = 0; v < g.n(); ++v) {
    SymbolicProduct::Tuple t(f, 0);
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].first == v || edges[e].second == v) t[e] = 1;
    t[edges.size() + v] = 1;
    c.vertex_map.push_back(std::move(t));
  }
  c.product = std::move(prod);
  return c;
}

EmbeddingCertificate embed_gen(const Graph& g) {
  require_size(g.n(), kGenMax, "GEN embedding");
  const std::size_t n = g.n();
  Graph h = complement(g);
  auto edges = h.edges();
  // S(v): edges of the complement at v, then private dummy points up to k.
  std::size_t k = 3;
  for (std::size_t v = 0; v < n; ++v) k = std::max(k, h.degree(v));
  std::vector<std::vector<std::uint32_t>> sets(n);
  std::uint32_t next_point = static_cast<std::uint32_t>(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    sets[edges[e].first].push_back(static_cast<std::uint32_t>(e));
    sets[edges[e].second].push_back(static_cast<std::uint32_t>(e));
  }
  for (auto& s : sets)
    while (s.size() < k) s.push_back(next_point++);
  std::size_t m = std::max<std::size_t>(next_point, 2 * k + 1);
  while (!arith::is_prime(m - k)) ++m;
  if (m > 255) throw SizeGuardError("GEN embedding needs more than 255 points");
  EmbeddingCertificate c;
  c.kind = EmbedKind::Gen;
  c.instance = g;
  c.degree = m;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<char> in(m, 0);
    for (auto p : sets[v]) in[p] = 1;
    std::vector<std::uint32_t> comp;
    for (std::uint32_t p = 0; p < m; ++p)
      if (!in[p]) comp.push_back(p);
    c.perms.push_back(perm::cycle(m, comp));
    c.vertex_map.push_back({static_cast<Elem>(v)});
  }
  return c;
}

EmbeddingCertificate embed_pow_order(const Graph& g, const Digraph& order) {
  require_size(g.n(), kSymbolicMax, "POW embedding");
  EmbeddingCertificate c;
  c.kind = EmbedKind::Pow;
  c.instance = g;
  c.order = order;
  SymbolicProduct prod;
  arith::PrimeSupply primes(2);
  const std::size_t n = g.n();
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = primes.next();
    primes.avoid(p);
    prod.factors.push_back(make_cyclic(static_cast<std::uint32_t>(p)));
  }
  // Vertex x maps to the indicator of its down-set [x] = {y : y <= x}.
  for (std::size_t x = 0; x < n; ++x) {
    SymbolicProduct::Tuple t(n, 0);
    t[x] = generator_of_cyclic(prod.factors[x]);
    order.out(x).for_each([&](std::size_t y) { t[y] = generator_of_cyclic(prod.factors[y]); });
    c.vertex_map.push_back(std::move(t));
  }
  c.product = std::move(prod);
  return c;
}

}  // namespace

EmbeddingCertificate embed_poset(const Digraph& order) {
  if (!is_transitive(order)) throw SpecError("POW embedding: order relation is not transitive");
  for (std::size_t u = 0; u < order.n(); ++u)
    for (std::size_t v = u + 1; v < order.n(); ++v)
      if (order.has_arc(u, v) && order.has_arc(v, u)) throw SpecError("POW embedding: order relation has a 2-cycle");
  auto c = embed_pow_order(order.underlying(), order);
  fill_transcript(c);
  return c;
}

EmbeddingCertificate embed_coloured(const ColouredComplete& col) {
  require_size(col.n, kSymbolicMax, "three-coloured embedding");
  const std::size_t n = col.n;
  EmbeddingCertificate c;
  c.kind = EmbedKind::ThreeColoured;
  c.colours = col;
  c.instance = Graph(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      if (col.colour[u][v] != col.colour[v][u]) throw SpecError("colouring is not symmetric");
      if (col.colour[u][v] == Colour::Red) c.instance.add_edge(u, v);
    }
  SymbolicProduct prod;
  arith::PrimeSupply primes(3);
  std::vector<std::uint32_t> ps;
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = primes.next();
    primes.avoid(p);
    ps.push_back(static_cast<std::uint32_t>(p));
    prod.factors.push_back(make_modular_p3(ps.back()));
  }
  // In factor k: a has index 1, a^p index p, b index p^2. Vertex k is b there;
  // earlier vertices get 1, a^p or a by the colour of their edge to k.
  for (std::size_t j = 0; j < n; ++j) {
    SymbolicProduct::Tuple t(n, 0);
    t[j] = ps[j] * ps[j];
    for (std::size_t k = j + 1; k < n; ++k) {
      switch (col.colour[j][k]) {
        case Colour::Red: t[k] = 0; break;
        case Colour::Green: t[k] = ps[k]; break;
        case Colour::Blue: t[k] = 1; break;
      }
    }
    c.vertex_map.push_back(std::move(t));
  }
  c.product = std::move(prod);
  fill_transcript(c);
  return c;
}

EmbeddingCertificate embed(EmbedKind kind, const Graph& g) {
  EmbeddingCertificate c;
  switch (kind) {
    case EmbedKind::Com: c = embed_com(g); break;
    case EmbedKind::EPow: c = embed_epow(g); break;
    case EmbedKind::Dep: c = embed_dep(g); break;
    case EmbedKind::Gen: c = embed_gen(g); break;
    case EmbedKind::Pow: {
      auto orient = transitive_orientation(g);
      if (!orient)
        throw SpecError("POW embedding: the graph has no transitive orientation (exhaustive search over " +
                        std::to_string(g.edge_count()) + " edges), so it is not a comparability graph");
      c = embed_pow_order(g, *orient);
      break;
    }
    case EmbedKind::ThreeColoured: {
      auto col = ColouredComplete::uniform(g.n(), Colour::Blue);
      for (auto [u, v] : g.edges()) col.set(u, v, Colour::Red);
      return embed_coloured(col);
    }
  }
  fill_transcript(c);
  return c;
}

VerifyResult verify_embedding(const EmbeddingCertificate& c) {
  VerifyResult r;
  auto fail = [&](std::size_t u, std::size_t v, std::string why) {
    r.ok = false;
    r.failing = std::make_pair(u, v);
    r.reason = std::move(why);
    return r;
  };
  const std::size_t n = c.vertex_map.size();
  if (n != c.instance.n()) {
    r.ok = false;
    r.reason = "vertex map size differs from the instance";
    return r;
  }
  switch (c.kind) {
    case EmbedKind::Com:
      if (!c.group) return r.ok = false, r.reason = "missing ambient group", r;
      for (std::size_t v = 0; v < n; ++v)
        if (c.vertex_map[v].size() != 1 || c.vertex_map[v][0] >= c.group->order())
          return fail(v, v, "vertex image is not an ambient element");
      break;
    case EmbedKind::Gen:
      if (c.perms.size() != n) return r.ok = false, r.reason = "missing permutations", r;
      for (std::size_t v = 0; v < n; ++v)
        if (c.perms[v].size() != c.degree || !perm::is_even(c.perms[v])) return fail(v, v, "permutation is not in A_m");
      break;
    default:
      if (!c.product) return r.ok = false, r.reason = "missing symbolic product", r;
      try {
        c.product->check_coprime();
      } catch (const Error& e) {
        r.ok = false;
        r.reason = e.what();
        return r;
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (c.vertex_map[v].size() != c.product->factors.size()) return fail(v, v, "tuple length mismatch");
        for (std::size_t i = 0; i < c.vertex_map[v].size(); ++i)
          if (c.vertex_map[v][i] >= c.product->factors[i].order()) return fail(v, v, "tuple entry out of range");
      }
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const bool same = c.kind == EmbedKind::Gen ? c.perms[u] == c.perms[v] : c.vertex_map[u] == c.vertex_map[v];
      if (same) return fail(u, v, "vertex map is not injective");
    }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      bool got;
      try {
        got = evaluate_pair(c, u, v);
      } catch (const IndeterminateError& e) {
        return fail(u, v, std::string("indeterminate: ") + e.what());
      }
      const bool want = c.kind == EmbedKind::ThreeColoured ? true : expected_pair(c, u, v);
      if (got != want)
        return fail(u, v, predicate_name(c.kind) + " is " + (got ? "true" : "false") + ", instance needs " +
                              (want ? "true" : "false"));
    }
  return r;
}

namespace {

// Finest block system with 0 and beta in one block.
std::vector<std::uint32_t> minimal_blocks(const std::vector<Perm>& gens, std::size_t m, std::uint32_t beta) {
  std::vector<std::uint32_t> parent(m);
  for (std::uint32_t i = 0; i < m; ++i) parent[i] = i;
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> queue{{0, beta}};
  parent[find(beta)] = find(0);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    auto [x, y] = queue[k];
    for (const auto& g : gens) {
      std::uint32_t a = find(g[x]), b = find(g[y]);
      if (a == b) continue;
      parent[b] = a;
      queue.emplace_back(a, b);
    }
  }
  for (std::uint32_t i = 0; i < m; ++i) parent[i] = find(i);
  return parent;
}

// A power of w is a single p-cycle when exactly one cycle length is divisible by p and it equals p.
bool has_isolated_prime_cycle(const Perm& w, std::size_t max_p) {
  auto cyc = perm::cycles(w);
  std::vector<std::size_t> lens;
  for (auto& c : cyc) lens.push_back(c.size());
  for (std::size_t p = 2; p <= max_p; ++p) {
    if (!arith::is_prime(p)) continue;
    std::size_t divisible = 0, exact = 0;
    for (auto l : lens) {
      if (l % p == 0) ++divisible;
      if (l == p) ++exact;
    }
    if (divisible == 1 && exact == 1) return true;
  }
  return false;
}

}  // namespace

bool perm_generates_alternating(const Perm& a0, const Perm& b0, std::size_t m) {
  if (m < 7) throw SpecError("perm_generates_alternating: degree must be at least 7");
  if (a0.size() > m || b0.size() > m) throw SpecError("perm_generates_alternating: permutation exceeds degree");
  Perm a = a0, b = b0;
  for (std::size_t i = a.size(); i < m; ++i) a.push_back(static_cast<std::uint32_t>(i));
  for (std::size_t i = b.size(); i < m; ++i) b.push_back(static_cast<std::uint32_t>(i));
  if (!perm::is_even(a) || !perm::is_even(b)) throw SpecError("perm_generates_alternating: odd permutation");
  const std::vector<Perm> gens{a, b};
  if (perm::orbits(gens, m).size() != 1) return false;
  for (std::uint32_t beta = 1; beta < m; ++beta) {
    auto blocks = minimal_blocks(gens, m, beta);
    if (std::any_of(blocks.begin(), blocks.end(), [&](std::uint32_t r) { return r != blocks[0]; })) return false;
  }
  // Primitive: Jordan's theorem gives A_m once some element has a power that is a
  // p-cycle with p <= m - 3. Search short words breadth-first.
  const std::size_t max_p = m - 3;
  std::vector<Perm> letters{a, b, perm::inverse(a), perm::inverse(b)};
  std::set<Perm> seen{perm::identity(m)};
  std::vector<Perm> frontier{perm::identity(m)};
  constexpr std::size_t kWordCap = 20000;
  while (!frontier.empty() && seen.size() < kWordCap) {
    std::vector<Perm> next;
    for (const auto& w : frontier)
      for (const auto& l : letters) {
        Perm x = perm::compose(w, l);
        if (!seen.insert(x).second) continue;
        if (has_isolated_prime_cycle(x, max_p)) return true;
        next.push_back(std::move(x));
      }
    frontier = std::move(next);
  }
  throw IndeterminateError("primitive group of degree " + std::to_string(m) +
                           " with no short word yielding a prime cycle of length <= " + std::to_string(max_p));
}

std::string format_certificate(const EmbeddingCertificate& c) {
  std::ostringstream os;
  os << "kind: " << to_string(c.kind) << '\n';
  os << "instance: " << c.instance.n() << " vertices, " << c.instance.edge_count() << " edges\n";
  if (c.group) os << "ambient: " << c.group->label() << " (order " << c.group->order() << ")\n";
  if (c.product) os << "ambient: " << c.product->describe() << '\n';
  if (c.kind == EmbedKind::Gen) os << "ambient: A" << c.degree << '\n';
  for (std::size_t v = 0; v < c.vertex_map.size(); ++v) {
    os << "vertex " << v << " -> ";
    if (c.kind == EmbedKind::Gen) os << perm::format(c.perms[v]);
    else if (c.group) os << c.group->describe(c.vertex_map[v][0]);
    else os << c.product->describe(c.vertex_map[v]);
    os << '\n';
  }
  for (auto& t : c.transcript)
    os << "pair (" << t.u << "," << t.v << "): predicate=" << t.predicate << " result=" << (t.result ? "true" : "false")
       << '\n';
  return os.str();
}

}  // namespace grouptrix
