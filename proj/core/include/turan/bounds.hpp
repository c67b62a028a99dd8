#pragma once

#include <optional>

#include "turan/clique.hpp"
#include "turan/graph.hpp"
#include "turan/rational.hpp"

namespace turan {

struct VertexLocalBound {
  Rational exact;      // (n/2) * sum over v of (c(v)-1)/c(v)
  long long floored = 0;
};

/// Evaluates the vertex-localized edge bound. `weights` must have been
/// computed from `g` (length mismatch raises ContractError).
VertexLocalBound vertex_localized_bound(const Graph& g, const VertexWeights& weights);

/// floor(n^2 (r-1) / (2r)) in exact integer arithmetic; r >= 1.
long long classical_floor_bound(long long n, long long r);

/// n^2 (r-1) / (2r) as a reduced fraction; r >= 1.
Rational classical_nofloor_bound(long long n, long long r);

struct EdgeLocalCheck {
  Rational sum;    // sum over edges of k(e)/(k(e)-1)
  Rational bound;  // n^2 / 2
  bool tight = false;
};

/// Evaluates the edge-localized bound. `weights` must cover exactly the
/// edges of `g` (mismatch raises ContractError).
EdgeLocalCheck edge_localized_check(const Graph& g, const EdgeWeights& weights);

/// All bound values for one graph. Classical entries use r = omega(G) and
/// are absent only for the graph on 0 vertices.
struct BoundReport {
  int n = 0;
  long long m = 0;
  int omega = 0;

  Rational vertex_local_exact;
  long long vertex_local_floor = 0;
  bool tight_vertex_floor = false;        // m == vertex_local_floor
  bool vertex_local_nofloor_tight = false;  // m == vertex_local_exact

  std::optional<long long> classical_floor;
  std::optional<Rational> classical_nofloor;

  Rational edge_local_sum;
  Rational edge_local_bound;
  bool tight_edge = false;
};

BoundReport bound_report(const Graph& g);

/// The two-step recovery chain m <= vertex_local_floor <= classical_floor
/// with r = omega(G). `holds` is a theorem; false signals a library bug.
struct ClassicalChain {
  bool holds = false;
  long long edge_count = 0;
  long long vertex_local_floor = 0;
  long long classical_floor = 0;
};

ClassicalChain recover_classical_chain(const Graph& g);

}  // namespace turan
