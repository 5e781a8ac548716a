#pragma once

// Realising finite graphs as induced subgraphs of graphs on groups.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grouptrix/graph.hpp"
#include "grouptrix/group.hpp"
#include "grouptrix/permutation.hpp"

namespace grouptrix {

enum class EmbedKind { Com, Pow, EPow, Dep, Gen, ThreeColoured };

std::string to_string(EmbedKind k);
EmbedKind parse_embed_kind(const std::string& s);

enum class Colour { Red, Green, Blue };

/// Complete graph with coloured edges; colour[u][v] == colour[v][u].
struct ColouredComplete {
  std::size_t n = 0;
  std::vector<std::vector<Colour>> colour;

  static ColouredComplete uniform(std::size_t n, Colour c);
  void set(std::size_t u, std::size_t v, Colour c);
};

/// Direct product of groups with pairwise coprime orders. Only the factors
/// are materialised; elements are tuples of factor indices.
struct SymbolicProduct {
  std::vector<Group> factors;
  using Tuple = std::vector<Elem>;

  /// Throws Error unless factor orders are pairwise coprime.
  void check_coprime() const;
  bool commute(const Tuple& x, const Tuple& y) const;
  /// <x, y> cyclic.
  bool cyclic_pair(const Tuple& x, const Tuple& y) const;
  /// x is a power of y.
  bool is_power_of(const Tuple& x, const Tuple& y) const;
  /// <x> and <y> meet nontrivially.
  bool cyclic_meet(const Tuple& x, const Tuple& y) const;
  std::string describe() const;
  std::string describe(const Tuple& x) const;
};

struct TranscriptLine {
  std::size_t u = 0, v = 0;
  std::string predicate;
  bool result = false;
};

struct EmbeddingCertificate {
  EmbedKind kind = EmbedKind::Com;
  Graph instance;                          // for ThreeColoured: the red edges
  std::optional<ColouredComplete> colours; // ThreeColoured only
  std::optional<Digraph> order;            // Pow only: arc u -> v when v < u

  std::optional<Group> group;              // Com: materialised ambient
  std::optional<SymbolicProduct> product;  // Pow, EPow, Dep, ThreeColoured
  std::vector<Perm> perms;                 // Gen: one cycle per vertex, in A_degree
  std::size_t degree = 0;

  std::vector<SymbolicProduct::Tuple> vertex_map;  // Com uses one-entry tuples
  std::vector<TranscriptLine> transcript;
};

EmbeddingCertificate embed(EmbedKind kind, const Graph& g);
/// Pow from an explicit strict partial order (arc u -> v when v < u).
EmbeddingCertificate embed_poset(const Digraph& order);
EmbeddingCertificate embed_coloured(const ColouredComplete& c);

struct VerifyResult {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> failing;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Re-evaluates the target predicate for every vertex pair from the ambient alone.
VerifyResult verify_embedding(const EmbeddingCertificate& cert);

/// <a, b> contains A_m, decided without enumerating the group. Returns false
/// when the group is intransitive or imprimitive; throws IndeterminateError
/// when no prime cycle certificate is found.
bool perm_generates_alternating(const Perm& a, const Perm& b, std::size_t m);

std::string format_certificate(const EmbeddingCertificate& cert);

}  // namespace grouptrix
