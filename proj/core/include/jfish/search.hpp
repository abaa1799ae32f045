#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jfish/certificates.hpp"
#include "jfish/graph.hpp"

namespace jfish {

// Hard caps for the exact searches. Exceeding one raises CapExceeded instead
// of silently grinding.
struct SearchLimits {
    int cycle_cap = 18; // branch-and-bound cycle/path searches
    int enum_cap = 16;  // subset-enumeration searches (octopus)
};

class CapExceeded : public std::runtime_error {
  public:
    CapExceeded(const std::string& op, int n, int cap);
    const std::string& op() const { return op_; }
    int n() const { return n_; }
    int cap() const { return cap_; }

  private:
    std::string op_;
    int n_;
    int cap_;
};

struct MarkedCycle {
    CycleCert cycle;
    int mark_count = 0;
};

// Cycle maximizing (length, |cycle & marks|) lexicographically; among optimal
// cycles the canonically smallest one. none when g is acyclic.
std::optional<MarkedCycle> best_cycle(const Graph& g, const VertexSet& marks,
                                      const SearchLimits& lim = {});

// Length of a longest cycle, 0 when acyclic. Value-only, cheaper than
// best_cycle when the witness is not needed.
int longest_cycle_length(const Graph& g, const SearchLimits& lim = {});

// Some cycle whose vertex set contains `required` and stays inside `allowed`,
// or none. First hit in deterministic search order; not canonicalized.
std::optional<std::vector<int>> cycle_through(const Graph& g, const VertexSet& required,
                                              const VertexSet& allowed,
                                              const SearchLimits& lim = {});

// Path starting at `start` covering `required` (and possibly more), or none.
std::optional<std::vector<int>> covering_path_from(const Graph& g, int start,
                                                   const VertexSet& required,
                                                   const SearchLimits& lim = {});

bool ham_path_between(const Graph& g, int u, int v, const SearchLimits& lim = {});

// Order (vertex count) of a longest path; 0 for the empty graph.
int longest_path_order(const Graph& g, const SearchLimits& lim = {});

// Vertex-disjoint paths starting at neighbors of `branch` (branch excluded),
// staying inside `targets` and covering it exactly. Legs come back ordered by
// ascending first vertex. none when no such system exists.
std::optional<std::vector<std::vector<int>>> legs_cover(const Graph& g, int branch,
                                                        const VertexSet& targets,
                                                        const SearchLimits& lim = {});

} // namespace jfish
