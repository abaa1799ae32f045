#pragma once

#include <vector>

#include "jfish/graph.hpp"

namespace jfish {

// Deterministic constructions; equal parameters always give identical
// labelings, so serialized fixtures stay stable.

Graph gen_path(int n);     // 0-1-...-(n-1)
Graph gen_cycle(int n);    // n >= 3
Graph gen_complete(int n);

// Three disjoint copies of K_s on [0,s), [s,2s), [2s,3s), plus two
// nonadjacent vertices u1 = 3s, u2 = 3s+1; u1 misses the first vertex of
// each clique, u2 the second. Requires s >= 2.
Graph gen_H(int s);

// Cliques on [0, n/2) and [n/2, n) joined by the single edge (0, n/2).
// Requires n >= 4.
Graph gen_two_cliques(int n);

// Four layers of sizes a,b,c,d labeled consecutively; complete bipartite
// joins between consecutive layers, nothing else. All sizes >= 1.
Graph gen_F(int a, int b, int c, int d);

// Parts [0,a) and [a,a+b), all cross edges. a,b >= 1.
Graph gen_complete_bipartite(int a, int b);

// Shape generators: the graph is exactly one instance of the shape.
Graph gen_jellyfish(int cycle_len, int tentacles);          // tentacles hang off vertex 0
Graph gen_broom(int path_order, int leaves);                // star at vertex 0
Graph gen_spider(const std::vector<int>& legs);             // root 0, leg lengths >= 1
Graph gen_octopus(int cycle_len, const std::vector<int>& legs); // legs rooted at vertex 0

enum class Family {
    H,
    TwoCliques,
    F,
    CompleteBipartite,
    Jellyfish,
    Broom,
    Spider,
    Octopus,
};

// Parameter layout: H {s}; TwoCliques {n}; F {a,b,c,d};
// CompleteBipartite {a,b}; Jellyfish {cycle,tentacles}; Broom {path,leaves};
// Spider {leg...}; Octopus {cycle, leg...}.
struct FamilySpec {
    Family family = Family::H;
    std::vector<int> params;
};

Graph gen_named(const FamilySpec& spec);

} // namespace jfish
