#pragma once

#include <optional>

#include "jfish/certificates.hpp"
#include "jfish/graph.hpp"
#include "jfish/search.hpp"

namespace jfish {

struct PathMetrics {
    int p = 0; // order of a longest path
    int c = 0; // length of a longest cycle, 0 when acyclic
};

// Longest cycle in canonical form, or none when acyclic.
std::optional<CycleCert> longest_cycle(const Graph& g, const SearchLimits& lim = {});

// Cycle maximizing (length, marked vertices on it) lexicographically; the
// canonically smallest optimum. Throws std::invalid_argument on acyclic input.
MarkedCycle l_maximal_cycle(const Graph& g, const VertexSet& marks, const SearchLimits& lim = {});

// Spanning-structure searches. A hamiltonian cycle counts as a jellyfish with
// no tentacles, a hamiltonian path as a broom with no star leaves, a spanning
// cycle as an octopus with no legs. Every certificate is re-checked by the
// structural validator before being returned.
std::optional<JellyfishCert> find_spanning_jellyfish(const Graph& g, const SearchLimits& lim = {});
std::optional<BroomCert> find_spanning_broom(const Graph& g, const SearchLimits& lim = {});
std::optional<SpiderCert> find_spanning_spider(const Graph& g, const SearchLimits& lim = {});
std::optional<OctopusCert> find_spanning_octopus(const Graph& g, const SearchLimits& lim = {});

PathMetrics path_metrics(const Graph& g, const SearchLimits& lim = {});

// Every vertex pair joined by a hamiltonian path. Requires n >= 2.
bool is_hamiltonian_connected(const Graph& g, const SearchLimits& lim = {});

// K_{a,b} as a not-necessarily-induced subgraph.
bool contains_complete_bipartite(const Graph& g, int a, int b);

} // namespace jfish
