#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace jfish {

// Position combinatorics on a ring of c slots or a line of q slots; sets are
// bitmasks over slot indices. Nothing here touches a Graph: these bounds
// speak only about how marked slots can be spaced.

struct SpacingVerdict {
    bool hypothesis_ok = false;
    bool applicable = false; // some conclusion clause covers this shape
    bool conclusion_ok = false;
};

// Ring version. Hypotheses: 2 <= q <= c/2, both sets nonempty and free of
// ring-consecutive pairs, |A u B| >= 2, and every cross pair is either equal
// or at ring distance > q. Conclusions: A == B forces c >= (q+1)|A|;
// otherwise a lower bound on 2c in |A|,|B|,q and the one-sided overlap count,
// plus a second bound c >= |A| + 2|B| + 1 when q = 2.
SpacingVerdict check_cycle_spacing(int c, int q, uint32_t a, uint32_t b);
std::string describe_cycle_spacing(int c, int q, uint32_t a, uint32_t b);

// Line version on slots 0..q-1. Hypotheses: sets nonempty and free of
// consecutive pairs, slot q-2 not in B, and every pair i in A, j in B with
// i > j has i - j >= t+1. Conclusions: with no such crossing pair,
// q >= 2(|A|+|B|-1) - 1; with one and t >= 2,
// q >= 2|A| + |B| + t - 4 + [q-1 not in A] + [A,B disjoint].
SpacingVerdict check_path_spacing(int q, int t, uint32_t a, uint32_t b);
std::string describe_path_spacing(int q, int t, uint32_t a, uint32_t b);

// Position-list front ends for the harness and CLI. Slots out of range,
// failed hypotheses, and shapes no conclusion clause covers all raise
// std::invalid_argument; the return value is whether the bound holds.
bool cycle_spacing_bound_holds(int c, int q, const std::vector<int>& a,
                               const std::vector<int>& b);
bool path_spacing_bound_holds(int q, int t, const std::vector<int>& a,
                              const std::vector<int>& b);

// Visit every admissible (a, b) pair; returns how many were visited.
// Enumeration is mask-driven and deliberately shares no logic with the
// pairwise hypothesis scan inside the check functions.
long long for_each_cycle_spacing(int c, int q,
                                 const std::function<void(uint32_t, uint32_t)>& fn);
long long for_each_path_spacing(int q, int t,
                                const std::function<void(uint32_t, uint32_t)>& fn);

struct SpacingSweep {
    long long configs = 0;
    long long violations = 0;
    std::string first_violation;
};

// Exhaustive sweeps used by the verification harness.
SpacingSweep sweep_cycle_spacing(int cmax);
SpacingSweep sweep_path_spacing(int qmax, const std::vector<int>& ts);

} // namespace jfish
