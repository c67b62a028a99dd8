#pragma once

#include <string>

#include "turan/graph.hpp"

namespace turan {

/// Hard guard on brute-force canonicalization.
inline constexpr int kCanonicalCap = 10;

/// Canonically labeled copy of g: the vertex ordering (restricted to
/// non-decreasing degree, which is permutation-invariant) that minimizes the
/// upper-triangle adjacency bit string in graph6 bit order. Two graphs get
/// identical canonical graphs iff they are isomorphic.
///
/// Raises SizeLimitError when order() > kCanonicalCap.
Graph canonical_graph(const Graph& g);

/// graph6 encoding of canonical_graph(g); equal strings iff isomorphic.
std::string canonical_form(const Graph& g);

}  // namespace turan
