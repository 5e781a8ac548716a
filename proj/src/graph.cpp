#include "grouptrix/graph.hpp"

#include "grouptrix/errors.hpp"

namespace grouptrix {

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) {
    g.rows_[v].set_all();
    g.rows_[v].reset(v);
  }
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph Graph::cycle(std::size_t n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw SpecError("edge endpoint out of range");
    g.add_edge(u, v);
  }
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t s = 0;
  for (auto& r : rows_) s += r.count();
  return s / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n(); ++u)
    rows_[u].for_each([&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

void Graph::check_symmetric() const {
  for (std::size_t u = 0; u < n(); ++u) {
    if (rows_[u].test(u)) throw Error("graph has a loop at " + std::to_string(u));
    rows_[u].for_each([&](std::size_t v) {
      if (!rows_[v].test(u)) throw Error("adjacency is not symmetric at " + std::to_string(u) + "," + std::to_string(v));
    });
  }
}

std::size_t Digraph::in_degree(std::size_t v) const {
  std::size_t d = 0;
  for (auto& r : out_) d += r.test(v);
  return d;
}

std::size_t Digraph::arc_count() const {
  std::size_t s = 0;
  for (auto& r : out_) s += r.count();
  return s;
}

Graph Digraph::underlying() const {
  Graph g(n());
  for (std::size_t u = 0; u < n(); ++u) out_[u].for_each([&](std::size_t v) { g.add_edge(u, v); });
  return g;
}

}  // namespace grouptrix
