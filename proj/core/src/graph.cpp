#include "turan/graph.hpp"

#include <algorithm>
#include <string>

#include "turan/error.hpp"

namespace turan {

namespace {

void validate(const std::vector<Bitset>& adj) {
  const int n = static_cast<int>(adj.size());
  for (int v = 0; v < n; ++v) {
    if (adj[v].capacity() != n)
      throw ContractError("adjacency row " + std::to_string(v) + " has wrong width");
    if (adj[v].test(v))
      throw ContractError("self-loop at vertex " + std::to_string(v));
    adj[v].for_each([&](int u) {
      if (!adj[u].test(v))
        throw ContractError("asymmetric adjacency between " + std::to_string(v) +
                            " and " + std::to_string(u));
    });
  }
}

}  // namespace

Graph Graph::from_edges(int n, const EdgeList& edges) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, Bitset(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint outside [0, " + std::to_string(n) + ")");
    if (u == v)
      throw InputError("loop at vertex " + std::to_string(u) + " is not allowed");
    g.adj_[u].set(v);
    g.adj_[v].set(u);
  }
  validate(g.adj_);
  return g;
}

Graph Graph::from_adjacency(std::vector<Bitset> adj) {
  validate(adj);
  Graph g;
  g.n_ = static_cast<int>(adj.size());
  g.adj_ = std::move(adj);
  return g;
}

long long Graph::edge_count() const {
  long long deg_sum = 0;
  for (const Bitset& row : adj_) deg_sum += row.count();
  return deg_sum / 2;
}

EdgeList Graph::edges() const {
  EdgeList out;
  for (int u = 0; u < n_; ++u)
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

Graph Graph::complement() const {
  std::vector<Bitset> adj(n_, Bitset(n_));
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adj_[u].test(v)) {
        adj[u].set(v);
        adj[v].set(u);
      }
  return from_adjacency(std::move(adj));
}

InducedSubgraph Graph::induced_subgraph(const Bitset& keep) const {
  if (keep.capacity() != n_)
    throw InputError("vertex set width does not match graph order");
  std::vector<int> verts = keep.to_vector();
  const int k = static_cast<int>(verts.size());
  std::vector<Bitset> adj(k, Bitset(k));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (adj_[verts[i]].test(verts[j])) {
        adj[i].set(j);
        adj[j].set(i);
      }
  return {from_adjacency(std::move(adj)), std::move(verts)};
}

InducedSubgraph Graph::induced_subgraph(const std::vector<int>& keep) const {
  Bitset set(n_);
  for (int v : keep) {
    if (v < 0 || v >= n_)
      throw InputError("vertex " + std::to_string(v) + " outside [0, " +
                       std::to_string(n_) + ")");
    set.set(v);
  }
  return induced_subgraph(set);
}

std::vector<std::vector<int>> Graph::connected_components() const {
  std::vector<std::vector<int>> comps;
  Bitset seen(n_);
  for (int s = 0; s < n_; ++s) {
    if (seen.test(s)) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen.set(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      adj_[v].for_each([&](int u) {
        if (!seen.test(u)) {
          seen.set(u);
          stack.push_back(u);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool Graph::is_connected() const {
  return n_ <= 1 || connected_components().size() == 1;
}

}  // namespace turan
