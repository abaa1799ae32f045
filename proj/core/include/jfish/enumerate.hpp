#pragma once

#include <cstdint>

#include "jfish/graph.hpp"
#include "jfish/stream_rng.hpp"

namespace jfish {

// Labeled graphs on n vertices indexed by the bits of the upper adjacency
// triangle, pairs ordered (0,1), (0,2), .., (0,n-1), (1,2), .. Index space
// is 2^(n choose 2), so n is capped at 11 to keep it inside 64 bits.
uint64_t labeled_graph_count(int n);
Graph graph_from_index(int n, uint64_t index);

// G(n, p) with p given in thousandths, decided pair by pair in the same
// pair order as graph_from_index.
Graph sample_gnp(int n, int p1000, StreamRng& rng);

// Near-threshold planted instance: three cliques plus two outside vertices
// attached to all but one vertex of each clique, then a few random edge
// toggles so the samples straddle the extremal boundary instead of sitting
// exactly on it. Requires n >= 8.
Graph sample_three_blob(int n, StreamRng& rng);

} // namespace jfish
