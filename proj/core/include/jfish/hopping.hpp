#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jfish/certificates.hpp"
#include "jfish/graph.hpp"
#include "jfish/search.hpp"

namespace jfish {

// Iterated neighborhood chains of a cycle C:
//   ys[0]   = vertices off C
//   xs[i-1] = X_i, the cycle vertices with a neighbor in Y_{i-1}
//   ys[i]   = Y_{i-1} plus the cycle vertices whose both cycle-neighbors
//             lie in X_i
// The chains are nested and stabilize after at most n rounds; limit_x and
// limit_y are the stable sets. Heights are the first level a vertex enters
// its chain, -1 when it never does.
struct HoppingState {
    std::vector<int> cycle;
    std::vector<VertexSet> xs; // xs[i] = X_{i+1}
    std::vector<VertexSet> ys; // ys[i] = Y_i
    VertexSet limit_x;
    VertexSet limit_y;
    std::vector<int> height_x;
    std::vector<int> height_y;
    int iterations = 0; // levels until the chains stop growing

    VertexSet x_at(int i) const; // X_i, empty below 1, limit beyond
    VertexSet y_at(int i) const; // Y_i, empty below 0, limit beyond
};

HoppingState compute_xy(const Graph& g, const std::vector<int>& cycle);

// A path x_1..x_p is good when N(x_1) and N(x_p) lie inside the path and
// neither endpoint neighborhood contains two path-consecutive vertices.
// A single vertex is good exactly when it is isolated.
bool is_good_path(const Graph& g, const std::vector<int>& path);
int longest_good_path(const Graph& g, const SearchLimits& lim = {});
bool has_good_path_at_least(const Graph& g, int order, const SearchLimits& lim = {});

// Hopping path conditions relative to compute_xy(g, c):
//   H1  both endpoints in limit_x
//   H2  no two path-consecutive vertices in X_1
//   H3  path vertices = cycle vertices
//   H4  for j below the path height, every interior path vertex in Y_j has
//       both path-neighbors in X_j
// All four are evaluated; "violated" lists the failed ones.
struct HoppingPathCheck {
    bool ok = false;
    std::vector<std::string> violated;
};
HoppingPathCheck is_hopping_path(const Graph& g, const HoppingState& st,
                                 const std::vector<int>& path);
HoppingPathCheck is_hopping_path(const Graph& g, const std::vector<int>& cycle,
                                 const std::vector<int>& path);

// Every hopping path for (g, st), each in the orientation whose front is the
// smaller endpoint. Exact search over G restricted to the cycle vertices;
// cycles longer than lim.enum_cap raise CapExceeded.
std::vector<std::vector<int>> enumerate_hopping_paths(const Graph& g, const HoppingState& st,
                                                      const SearchLimits& lim = {});

// Rewrites a hopping path into one whose endpoints both lie in X_1, by
// cycle rotations and endpoint hops that strictly decrease
// (height, sum of endpoint heights) each step. Requires that no two
// cycle-consecutive vertices lie in X_1. Throws std::invalid_argument on a
// bad input and std::logic_error if a step ever fails to make progress.
std::vector<int> reduce_hopping_path(const Graph& g, const std::vector<int>& cycle,
                                     const std::vector<int>& path);

// Checks, given that C is a longest cycle, G-C has no edges, and no good
// path exceeds |C|+1 vertices:
//   M1  limit_x has no two cycle-consecutive vertices
//   M2  limit_x and limit_y are disjoint, and N(limit_y) is inside limit_x
//   M3  limit_y is independent
// Conclusions are evaluated either way; hypothesis_ok says whether they
// were actually promised.
struct HoppingReport {
    bool hypothesis_ok = false;
    std::string hypothesis_failure;
    bool m1 = false;
    bool m2 = false;
    bool m3 = false;
    std::pair<int, int> m1_witness{-1, -1}; // cycle-consecutive pair in limit_x
    int m2_overlap_witness = -1;            // vertex in limit_x and limit_y
    std::pair<int, int> m2_edge_witness{-1, -1}; // y in limit_y, neighbor off limit_x
    std::pair<int, int> m3_witness{-1, -1}; // adjacent pair in limit_y
    HoppingState state;

    bool conclusions_ok() const { return m1 && m2 && m3; }
};
HoppingReport verify_hopping_lemma(const Graph& g, const std::vector<int>& cycle,
                                   const SearchLimits& lim = {});

// Cycle vertices whose both cycle-neighbors are adjacent to u; u must lie
// off the cycle. Swapping such a vertex v with u yields another cycle of
// the same length through V(C) - v + u.
VertexSet swap_set(const Graph& g, const std::vector<int>& cycle, int u);
CycleCert swap_cycle(const Graph& g, const std::vector<int>& cycle, int v, int u);

} // namespace jfish
