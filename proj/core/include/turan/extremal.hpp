#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turan/clique.hpp"
#include "turan/graph.hpp"

namespace turan {

/// Parameters of a Turan graph T(n, r): n = t*r + s with 0 <= s < r.
struct TuranParams {
  int n = 0, r = 0, t = 0, s = 0;
  friend bool operator==(const TuranParams&, const TuranParams&) = default;
};

TuranParams turan_params(int n, int r);

/// T(n, r): complete multipartite, classes of size floor(n/r) or ceil(n/r);
/// vertex v belongs to class v mod r. Requires 1 <= r <= n.
Graph turan_graph(int n, int r);

/// |E(T(n, r))| by the closed form C(n,2) - s*C(t+1,2) - (r-s)*C(t,2).
long long turan_edge_count(int n, int r);

/// Membership of T(n, r) in the class attaining the floored classical bound:
/// with s = n mod r, true iff s <= 2 or r*(s-2) < s^2.
bool in_S(int n, int r);

struct TuranRecognition {
  TuranParams params;
  std::vector<std::vector<int>> classes;  // each sorted, ordered by smallest member
};

/// Recognizes complete multipartite graphs whose class sizes differ by at
/// most 1 (the complement's components must all be cliques). Requires n >= 1.
std::optional<TuranRecognition> recognize_turan(const Graph& g);

/// True iff g is isomorphic to the paraglider X (complement of P2 u P3).
bool is_paraglider(const Graph& g);

/// True iff g is isomorphic to Y (one edge plus an isolated vertex).
bool is_y_graph(const Graph& g);

/// Reference copies with the weight layout used throughout the tests:
/// X's vertex 0 is the degree-2 apex.
Graph paraglider_graph();
Graph y_graph();

enum class ExtremalTag { TuranInS, Paraglider, YGraph, NotExtremal };

std::string to_string(ExtremalTag tag);

/// Structural classification of the equality class of the vertex-localized
/// bound. Purely structural: the biconditional with bound tightness is a
/// theorem checked by the verification suite, not assumed here.
struct ExtremalClassification {
  ExtremalTag tag = ExtremalTag::NotExtremal;
  std::optional<TuranRecognition> turan;  // set iff tag == TuranInS
};

ExtremalClassification classify_extremal(const Graph& g);

/// Weight profile every extremal graph must satisfy: all weights equal
/// omega, or exactly one vertex at omega - 1 and the rest at omega.
bool extremal_weight_profile_check(const Graph& g, const VertexWeights& weights);

}  // namespace turan
