#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "grouptrix/bitset.hpp"

namespace grouptrix {

/// Simple undirected loop-free graph with one adjacency bitset per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : rows_(n, Bitset(n)) {}

  static Graph complete(std::size_t n);
  static Graph empty(std::size_t n) { return Graph(n); }
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t n() const { return rows_.size(); }
  const Bitset& row(std::size_t v) const { return rows_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  std::size_t degree(std::size_t v) const { return rows_[v].count(); }
  std::size_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Loops are ignored.
  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) return;
    rows_[u].set(v);
    rows_[v].set(u);
  }
  void remove_edge(std::size_t u, std::size_t v) {
    rows_[u].reset(v);
    rows_[v].reset(u);
  }

  /// Replaces a row without touching the mirror entries; callers must call
  /// check_symmetric or otherwise keep the matrix symmetric.
  void set_row(std::size_t v, const Bitset& r) {
    rows_[v] = r;
    rows_[v].reset(v);
  }
  /// Throws Error when adjacency is not symmetric or has a loop.
  void check_symmetric() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> l) { labels_ = std::move(l); }
  std::string label(std::size_t v) const { return v < labels_.size() ? labels_[v] : std::to_string(v); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<Bitset> rows_;
  std::vector<std::string> labels_;
};

/// Loop-free directed graph.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n) : out_(n, Bitset(n)) {}

  std::size_t n() const { return out_.size(); }
  const Bitset& out(std::size_t v) const { return out_[v]; }
  bool has_arc(std::size_t u, std::size_t v) const { return out_[u].test(v); }
  void add_arc(std::size_t u, std::size_t v) {
    if (u != v) out_[u].set(v);
  }
  std::size_t out_degree(std::size_t v) const { return out_[v].count(); }
  std::size_t in_degree(std::size_t v) const;
  std::size_t arc_count() const;

  /// Edge wherever an arc exists in at least one direction.
  Graph underlying() const;

 private:
  std::vector<Bitset> out_;
};

}  // namespace grouptrix
