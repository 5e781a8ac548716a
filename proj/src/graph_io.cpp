#include "grouptrix/graph_io.hpp"

#include <istream>
#include <ostream>

#include "grouptrix/errors.hpp"

namespace grouptrix {

void write_edge_list(const Graph& g, std::ostream& os) {
  auto edges = g.edges();
  os << g.n() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) os << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& is) {
  long long n, m;
  if (!(is >> n >> m) || n < 0 || m < 0) throw SpecError("edge list: bad header");
  Graph g(static_cast<std::size_t>(n));
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(is >> u >> v)) throw SpecError("edge list: missing edge line");
    if (u < 0 || v < 0 || u >= n || v >= n) throw SpecError("edge list: endpoint out of range");
    g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  return g;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_dot(const Graph& g, std::ostream& os, const std::string& name) {
  os << "graph " << quoted(name) << " {\n";
  for (std::size_t v = 0; v < g.n(); ++v) {
    os << "  " << v;
    if (!g.labels().empty()) os << " [label=" << quoted(g.label(v)) << "]";
    os << ";\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
}

void write_digraph_edge_list(const Digraph& d, std::ostream& os) {
  os << d.n() << ' ' << d.arc_count() << '\n';
  for (std::size_t u = 0; u < d.n(); ++u) d.out(u).for_each([&](std::size_t v) { os << u << ' ' << v << '\n'; });
}

}  // namespace grouptrix
