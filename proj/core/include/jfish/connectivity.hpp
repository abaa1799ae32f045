#pragma once

#include "jfish/graph.hpp"

namespace jfish {

// Connected componentwise over the vertices in "inside" only.
bool is_connected_within(const Graph& g, const VertexSet& inside);
bool is_connected(const Graph& g);

// Vertices reachable from "from" (which must intersect "inside") walking
// only through "inside".
VertexSet reachable_within(const Graph& g, const VertexSet& from, const VertexSet& inside);

// Number of connected components of g restricted to "inside".
int component_count_within(const Graph& g, const VertexSet& inside);

// k in 1..3. True iff n > k and deleting any vertex set of size < k leaves
// the graph connected (checked by exhaustive deletion; fine at desk scale).
bool is_k_connected(const Graph& g, int k);

} // namespace jfish
