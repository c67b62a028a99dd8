#include "turan/clique.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "turan/error.hpp"

namespace turan {

namespace {

// Branch and bound in the style of bitset MCS solvers: candidates are
// greedily colored, vertices are expanded in reverse color order, and a
// branch is cut once |R| + color bound cannot beat the incumbent.
class Solver {
 public:
  explicit Solver(const Graph& g) : g_(g), best_size_(0) {}

  // Largest clique inside `candidates`, at least `lower_bound + 1` or none.
  int solve(const Bitset& candidates, int lower_bound) {
    best_size_ = lower_bound;
    current_.clear();
    expand(candidates);
    return best_size_;
  }

  int best_size() const { return best_size_; }

 private:
  void expand(const Bitset& candidates) {
    if (candidates.none()) {
      best_size_ = std::max(best_size_, static_cast<int>(current_.size()));
      return;
    }

    // Greedy coloring: vertices of color class i can never form a clique
    // with each other, so |R| + (number of classes spanning v's prefix)
    // bounds any clique through v.
    std::vector<int> order;
    std::vector<int> bound;
    color_sort(candidates, order, bound);

    Bitset pool = candidates;
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      int depth = static_cast<int>(current_.size());
      if (depth + bound[idx] <= best_size_) return;
      int v = order[idx];
      current_.push_back(v);
      expand(pool & g_.neighbors(v));
      current_.pop_back();
      pool.reset(v);
    }
  }

  void color_sort(const Bitset& candidates, std::vector<int>& order,
                  std::vector<int>& bound) {
    Bitset uncolored = candidates;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset fits = uncolored;  // vertices not adjacent to this color class
      while (fits.any()) {
        int v = fits.lowest();
        fits.reset(v);
        uncolored.reset(v);
        fits.and_not(g_.neighbors(v));
        order.push_back(v);
        bound.push_back(color);
      }
    }
  }

  const Graph& g_;
  int best_size_;
  std::vector<int> current_;
};

// Lexicographically smallest maximum clique: fix vertices one by one in
// ascending order, keeping v iff a clique of the target size still exists
// through the fixed prefix.
std::vector<int> lex_smallest_witness(const Graph& g, int omega) {
  std::vector<int> clique;
  Bitset candidates(g.order());
  for (int v = 0; v < g.order(); ++v) candidates.set(v);

  int remaining = omega;
  for (int v = 0; v < g.order() && remaining > 0; ++v) {
    if (!candidates.test(v)) continue;
    Bitset rest = candidates & g.neighbors(v);
    Solver solver(g);
    int extendable = 1 + solver.solve(rest, remaining - 2);
    if (extendable >= remaining) {
      clique.push_back(v);
      candidates = rest;
      remaining -= 1;
    }
  }
  return clique;
}

bool is_clique_mask(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
  std::uint64_t rest = mask;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    std::uint64_t others = mask & ~(std::uint64_t{1} << v);
    if ((adj[v] & others) != others) return false;
  }
  return true;
}

std::vector<int> mask_to_vector(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

CliqueResult max_clique(const Graph& g, int size_cap) {
  if (g.order() > size_cap)
    throw SizeLimitError("max_clique: graph order " + std::to_string(g.order()) +
                         " exceeds the kernel cap " + std::to_string(size_cap));
  if (g.order() == 0) return {};

  Bitset all(g.order());
  for (int v = 0; v < g.order(); ++v) all.set(v);
  Solver solver(g);
  int omega = solver.solve(all, 0);
  return {omega, lex_smallest_witness(g, omega)};
}

CliqueResult oracle_max_clique(const Graph& g) {
  const int n = g.order();
  if (n > kOracleCap)
    throw SizeLimitError("oracle_max_clique: graph order " + std::to_string(n) +
                         " exceeds the oracle cap " + std::to_string(kOracleCap));
  if (n == 0) return {};

  std::vector<std::uint64_t> adj(n, 0);
  for (int v = 0; v < n; ++v)
    g.neighbors(v).for_each([&](int u) { adj[v] |= std::uint64_t{1} << u; });

  int best_size = 0;
  std::vector<int> best;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    int size = std::popcount(mask);
    if (size < best_size) continue;
    if (!is_clique_mask(adj, mask)) continue;
    std::vector<int> members = mask_to_vector(mask);
    if (size > best_size || members < best) {
      best_size = size;
      best = std::move(members);
    }
  }
  return {best_size, best};
}

int VertexWeights::omega() const {
  int w = 0;
  for (int x : c) w = std::max(w, x);
  return w;
}

int EdgeWeights::k_of(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (const auto& e : edges)
    if (e.u == u && e.v == v) return e.k;
  throw ContractError("edge {" + std::to_string(u) + ", " + std::to_string(v) +
                      "} has no recorded weight");
}

VertexWeights vertex_clique_weights(const Graph& g, int size_cap) {
  VertexWeights w;
  w.c.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) {
    InducedSubgraph nbhd = g.induced_subgraph(g.neighbors(v));
    w.c.push_back(1 + max_clique(nbhd.graph, size_cap).size);
  }
  return w;
}

EdgeWeights edge_clique_weights(const Graph& g, int size_cap) {
  EdgeWeights w;
  for (const auto& [u, v] : g.edges()) {
    InducedSubgraph common = g.induced_subgraph(g.neighbors(u) & g.neighbors(v));
    w.edges.push_back({u, v, 2 + max_clique(common.graph, size_cap).size});
  }
  return w;
}

}  // namespace turan
