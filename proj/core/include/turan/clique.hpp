#pragma once

#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Default guard on the branch-and-bound kernel; callers may raise it.
inline constexpr int kCliqueKernelCap = 64;

/// Hard guard on the exhaustive oracle (2^n subsets).
inline constexpr int kOracleCap = 20;

struct CliqueResult {
  int size = 0;
  std::vector<int> members;  // sorted ascending
};

/// Exact maximum clique via branch and bound over bit-parallel candidate
/// sets with greedy-coloring upper bounds. The witness is the
/// lexicographically smallest maximum clique (compared as sorted vertex
/// sequences), so outputs are deterministic.
///
/// Raises SizeLimitError when order() > size_cap.
CliqueResult max_clique(const Graph& g, int size_cap = kCliqueKernelCap);

/// Same contract as max_clique, implemented by exhaustive subset
/// enumeration; shares no search logic with the branch-and-bound path.
/// Raises SizeLimitError when order() > kOracleCap.
CliqueResult oracle_max_clique(const Graph& g);

/// Per-vertex clique weights: c[v] is the order of the largest clique
/// containing v; isolated vertices have weight 1.
struct VertexWeights {
  std::vector<int> c;

  /// Clique number of the graph the weights came from (0 for empty graphs).
  int omega() const;
};

/// Per-edge clique weights: k is the order of the largest clique containing
/// the edge {u, v}; always >= 2. Entries have u < v and are sorted.
struct EdgeCliqueWeight {
  int u = 0, v = 0, k = 0;
  friend bool operator==(const EdgeCliqueWeight&, const EdgeCliqueWeight&) = default;
};

struct EdgeWeights {
  std::vector<EdgeCliqueWeight> edges;

  /// Weight of edge {u, v}; raises ContractError when absent.
  int k_of(int u, int v) const;
};

/// c[v] = 1 + omega(G[N(v)]).
VertexWeights vertex_clique_weights(const Graph& g, int size_cap = kCliqueKernelCap);

/// k[{u,v}] = 2 + omega(G[N(u) & N(v)]).
EdgeWeights edge_clique_weights(const Graph& g, int size_cap = kCliqueKernelCap);

}  // namespace turan
