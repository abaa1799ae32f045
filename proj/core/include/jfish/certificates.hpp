#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "jfish/graph.hpp"

namespace jfish {

// Cycle as a vertex sequence in canonical form: rotated to start at the
// smallest id, oriented so the sequence is lexicographically least.
struct CycleCert {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    VertexSet vertex_set() const {
        VertexSet s;
        for (int v : vertices) s.set(v);
        return s;
    }
    friend bool operator==(const CycleCert& a, const CycleCert& b) {
        return a.vertices == b.vertices;
    }
};

// Canonicalize an arbitrary traversal order. Requires >= 3 distinct entries.
CycleCert canonical_cycle(std::vector<int> order);

// Cycle plus off-cycle "tentacles", every tentacle adjacent to the center,
// which lies on the cycle. Empty tentacle set = plain cycle.
struct JellyfishCert {
    CycleCert cycle;
    int center = -1;
    std::vector<int> tentacles;
};

// Path plus star leaves at the first path vertex (the center). Empty leaf
// set = plain path.
struct BroomCert {
    std::vector<int> path;
    std::vector<int> leaves;
    int center() const { return path.empty() ? -1 : path.front(); }
};

// Tree with at most one vertex of degree >= 3, given by its edge set.
struct SpiderCert {
    std::vector<std::pair<int, int>> edges;
    std::optional<int> branch;
};

// Cycle plus leg paths hanging off a single branch vertex on the cycle.
// legs[i] lists the leg's vertices outward, excluding the branch itself.
struct OctopusCert {
    CycleCert cycle;
    int branch = -1;
    std::vector<std::vector<int>> legs;
};

// Structure conversions (each target exists whenever the source does).
BroomCert broom_from_jellyfish(const JellyfishCert& jf);
OctopusCert octopus_from_jellyfish(const JellyfishCert& jf);
SpiderCert spider_from_broom(const BroomCert& br);
SpiderCert spider_from_octopus(const OctopusCert& oc);

} // namespace jfish
