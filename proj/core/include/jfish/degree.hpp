#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "jfish/graph.hpp"

namespace jfish {

enum class VertexClass { Low, Normal, High };

// Degree-side invariants of a graph. sigma2 is the minimum degree sum over
// nonadjacent pairs; graphs without a nonadjacent pair (complete graphs,
// n <= 1) get an infinite sigma2, encoded as nullopt. Two different "small
// degree" notions live side by side:
//   * low_set  L = { v : 2 d(v) < sigma2 }  (empty when sigma2 is infinite)
//   * classes  Low 3d(v) <= n-2 / Normal 3d(v) >= n-1, where a Normal vertex
//     with a nonadjacent Low vertex is reported High (witness recorded).
struct DegreeProfile {
    std::vector<int> degrees;
    int delta = 0;
    std::optional<int> sigma2;
    std::pair<int, int> sigma2_witness{-1, -1};
    VertexSet low_set;
    std::vector<VertexClass> classes;
    std::vector<int> high_witness; // nonadjacent Low vertex, -1 if none
};

DegreeProfile degree_profile(const Graph& g);

// Threshold checks, all in exact integer arithmetic (multiplied through by 3).
//   ore_main:  3 sigma2 >= 2n - 3   (infinite sigma2 passes)
//   dirac_cor: 3 delta  >= n - 1
// connectivity is the largest k in 0..3 with is_k_connected(g, k).
struct ConditionCheck {
    bool ore_main = false;
    bool dirac_cor = false;
    int connectivity = 0;
};

ConditionCheck check_conditions(const Graph& g);

bool meets_ore_main(const DegreeProfile& p, int n);
bool meets_dirac_cor(const DegreeProfile& p, int n);

} // namespace jfish
