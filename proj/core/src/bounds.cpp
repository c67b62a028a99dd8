#include "turan/bounds.hpp"

#include <string>

#include "turan/error.hpp"

namespace turan {

VertexLocalBound vertex_localized_bound(const Graph& g, const VertexWeights& weights) {
  if (static_cast<int>(weights.c.size()) != g.order())
    throw ContractError("vertex weights cover " + std::to_string(weights.c.size()) +
                        " vertices but the graph has " + std::to_string(g.order()));
  Rational sum;
  for (int c : weights.c) sum += Rational(c - 1, c);
  VertexLocalBound out;
  out.exact = Rational(g.order(), 2) * sum;
  out.floored = out.exact.floor_ll();
  return out;
}

long long classical_floor_bound(long long n, long long r) {
  if (n < 0) throw DomainError("classical bound needs n >= 0");
  if (r < 1) throw DomainError("classical bound needs r >= 1");
  BigInt num = BigInt(n) * n * (r - 1);
  return BigInt(num / (2 * BigInt(r))).convert_to<long long>();
}

Rational classical_nofloor_bound(long long n, long long r) {
  if (n < 0) throw DomainError("classical bound needs n >= 0");
  if (r < 1) throw DomainError("classical bound needs r >= 1");
  return Rational(BigInt(n) * n * (r - 1), 2 * BigInt(r));
}

EdgeLocalCheck edge_localized_check(const Graph& g, const EdgeWeights& weights) {
  if (static_cast<long long>(weights.edges.size()) != g.edge_count())
    throw ContractError("edge weights cover " + std::to_string(weights.edges.size()) +
                        " edges but the graph has " + std::to_string(g.edge_count()));
  Rational sum;
  for (const auto& e : weights.edges) {
    if (!g.adjacent(e.u, e.v))
      throw ContractError("weighted edge {" + std::to_string(e.u) + ", " +
                          std::to_string(e.v) + "} is not in the graph");
    sum += Rational(e.k, e.k - 1);
  }
  EdgeLocalCheck out;
  out.sum = sum;
  out.bound = Rational(static_cast<long long>(g.order()) * g.order(), 2);
  out.tight = (out.sum == out.bound);
  return out;
}

BoundReport bound_report(const Graph& g) {
  BoundReport r;
  r.n = g.order();
  r.m = g.edge_count();

  VertexWeights w = vertex_clique_weights(g);
  r.omega = w.omega();

  VertexLocalBound vb = vertex_localized_bound(g, w);
  r.vertex_local_exact = vb.exact;
  r.vertex_local_floor = vb.floored;
  r.tight_vertex_floor = (r.m == r.vertex_local_floor);
  r.vertex_local_nofloor_tight = (Rational(r.m) == r.vertex_local_exact);

  if (r.omega >= 1) {
    r.classical_floor = classical_floor_bound(r.n, r.omega);
    r.classical_nofloor = classical_nofloor_bound(r.n, r.omega);
  }

  EdgeLocalCheck ec = edge_localized_check(g, edge_clique_weights(g));
  r.edge_local_sum = ec.sum;
  r.edge_local_bound = ec.bound;
  r.tight_edge = ec.tight;
  return r;
}

ClassicalChain recover_classical_chain(const Graph& g) {
  ClassicalChain chain;
  chain.edge_count = g.edge_count();
  if (g.order() == 0) {
    chain.holds = true;
    return chain;
  }
  VertexWeights w = vertex_clique_weights(g);
  chain.vertex_local_floor = vertex_localized_bound(g, w).floored;
  chain.classical_floor = classical_floor_bound(g.order(), w.omega());
  chain.holds = chain.edge_count <= chain.vertex_local_floor &&
                chain.vertex_local_floor <= chain.classical_floor;
  return chain;
}

}  // namespace turan
