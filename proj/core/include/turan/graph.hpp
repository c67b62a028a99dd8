#pragma once

#include <utility>
#include <vector>

#include "turan/bitset.hpp"

namespace turan {

/// Unordered vertex pairs; duplicates and reversed pairs are collapsed by
/// Graph::from_edges.
using EdgeList = std::vector<std::pair<int, int>>;

struct InducedSubgraph;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one bit row per vertex, so neighborhood
/// intersections and complements are word-parallel. Every constructor
/// validates symmetry and irreflexivity.
class Graph {
 public:
  Graph() = default;  // 0 vertices

  /// Builds a graph from an edge list. Duplicate and reversed pairs collapse;
  /// loops or out-of-range endpoints raise InputError.
  static Graph from_edges(int n, const EdgeList& edges);

  /// Adopts an adjacency table, validating the Graph invariants
  /// (raises ContractError on asymmetry or self-loops).
  static Graph from_adjacency(std::vector<Bitset> adj);

  int order() const { return n_; }
  long long edge_count() const;
  int degree(int v) const { return adj_[v].count(); }
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const Bitset& neighbors(int v) const { return adj_[v]; }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  EdgeList edges() const;

  Graph complement() const;

  /// Subgraph induced on the given vertex set, vertices renumbered 0..|S|-1
  /// in increasing original order; the remap table is returned alongside.
  InducedSubgraph induced_subgraph(const Bitset& keep) const;
  InducedSubgraph induced_subgraph(const std::vector<int>& keep) const;

  /// Vertex sets of connected components, each sorted, ordered by smallest
  /// member.
  std::vector<std::vector<int>> connected_components() const;

  /// True for graphs on 0 or 1 vertices.
  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Bitset> adj_;
};

/// Result of taking an induced subgraph: `vertices[i]` is the original index
/// of vertex i in `graph`.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertices;
};

}  // namespace turan
