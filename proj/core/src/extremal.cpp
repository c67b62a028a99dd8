#include "turan/extremal.hpp"

#include <algorithm>
#include <numeric>

#include "turan/error.hpp"

namespace turan {

namespace {

long long choose2(long long x) { return x * (x - 1) / 2; }

void require_turan_domain(int n, int r) {
  if (n < 1 || r < 1 || r > n)
    throw DomainError("Turan parameters need 1 <= r <= n, got n = " +
                      std::to_string(n) + ", r = " + std::to_string(r));
}

// Exact isomorphism test by permutation search, adequate for the 5-vertex
// reference check.
bool isomorphic_small(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const int n = a.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TuranParams turan_params(int n, int r) {
  require_turan_domain(n, r);
  return {n, r, n / r, n % r};
}

Graph turan_graph(int n, int r) {
  require_turan_domain(n, r);
  EdgeList edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u % r != v % r) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

long long turan_edge_count(int n, int r) {
  TuranParams p = turan_params(n, r);
  return choose2(n) - p.s * choose2(p.t + 1) - (p.r - p.s) * choose2(p.t);
}

bool in_S(int n, int r) {
  TuranParams p = turan_params(n, r);
  if (p.s <= 2) return true;
  return static_cast<long long>(r) * (p.s - 2) < static_cast<long long>(p.s) * p.s;
}

std::optional<TuranRecognition> recognize_turan(const Graph& g) {
  const int n = g.order();
  if (n < 1) return std::nullopt;

  // Complete multipartite iff the complement is a disjoint union of cliques;
  // the components are then exactly the classes.
  Graph co = g.complement();
  std::vector<std::vector<int>> classes = co.connected_components();
  for (const auto& cls : classes)
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i + 1; j < cls.size(); ++j)
        if (!co.adjacent(cls[i], cls[j])) return std::nullopt;

  std::size_t lo = classes.front().size(), hi = lo;
  for (const auto& cls : classes) {
    lo = std::min(lo, cls.size());
    hi = std::max(hi, cls.size());
  }
  if (hi - lo > 1) return std::nullopt;

  const int r = static_cast<int>(classes.size());
  TuranRecognition rec{turan_params(n, r), std::move(classes)};
  return rec;
}

Graph paraglider_graph() {
  // Vertex 0 is the degree-2 apex; {3, 4} with 1 and 2 form the two triangles.
  return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 4}, {1, 3}, {2, 4}, {2, 3}, {4, 3}});
}

Graph y_graph() { return Graph::from_edges(3, {{0, 1}}); }

bool is_paraglider(const Graph& g) {
  if (g.order() != 5 || g.edge_count() != 7) return false;
  std::vector<int> degrees;
  for (int v = 0; v < 5; ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end());
  if (degrees != std::vector<int>{2, 3, 3, 3, 3}) return false;
  return isomorphic_small(g, paraglider_graph());
}

bool is_y_graph(const Graph& g) { return g.order() == 3 && g.edge_count() == 1; }

std::string to_string(ExtremalTag tag) {
  switch (tag) {
    case ExtremalTag::TuranInS: return "TuranInS";
    case ExtremalTag::Paraglider: return "Paraglider";
    case ExtremalTag::YGraph: return "YGraph";
    case ExtremalTag::NotExtremal: return "NotExtremal";
  }
  return "NotExtremal";
}

ExtremalClassification classify_extremal(const Graph& g) {
  ExtremalClassification out;
  if (g.order() == 0) return out;  // vacuous case, never extremal
  if (auto rec = recognize_turan(g); rec && in_S(rec->params.n, rec->params.r)) {
    out.tag = ExtremalTag::TuranInS;
    out.turan = std::move(rec);
    return out;
  }
  if (is_paraglider(g)) {
    out.tag = ExtremalTag::Paraglider;
    return out;
  }
  if (is_y_graph(g)) {
    out.tag = ExtremalTag::YGraph;
    return out;
  }
  return out;
}

bool extremal_weight_profile_check(const Graph& g, const VertexWeights& weights) {
  if (static_cast<int>(weights.c.size()) != g.order())
    throw ContractError("vertex weights do not match the graph order");
  if (g.order() == 0) return true;
  const int omega = weights.omega();
  int at_omega = 0, one_below = 0;
  for (int c : weights.c) {
    if (c == omega)
      ++at_omega;
    else if (c == omega - 1)
      ++one_below;
    else
      return false;
  }
  return one_below == 0 || (one_below == 1 && at_omega == g.order() - 1);
}

}  // namespace turan
