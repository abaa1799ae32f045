#include "jfish/finders.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "jfish/validate.hpp"

namespace jfish {

namespace {

std::vector<int> complement_sorted(const Graph& g, const VertexSet& used) {
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if (!used.test(v)) out.push_back(v);
    return out;
}

} // namespace

std::optional<CycleCert> longest_cycle(const Graph& g, const SearchLimits& lim) {
    auto best = best_cycle(g, VertexSet{}, lim);
    if (!best) return std::nullopt;
    return best->cycle;
}

MarkedCycle l_maximal_cycle(const Graph& g, const VertexSet& marks, const SearchLimits& lim) {
    auto best = best_cycle(g, marks, lim);
    if (!best) throw std::invalid_argument("l_maximal_cycle: graph has no cycle");
    return *best;
}

std::optional<JellyfishCert> find_spanning_jellyfish(const Graph& g, const SearchLimits& lim) {
    const int n = g.n();
    if (n < 3) return std::nullopt;
    for (int v = 0; v < n; ++v) {
        // Tentacles hang off v, so v plus all its non-neighbors must lie on
        // the cycle; everything else may sit on the cycle or dangle.
        VertexSet required = g.vertices();
        required -= g.adj(v);
        auto cyc = cycle_through(g, required, g.vertices(), lim);
        if (!cyc) continue;
        JellyfishCert cert;
        cert.cycle = canonical_cycle(*cyc);
        cert.center = v;
        cert.tentacles = complement_sorted(g, cert.cycle.vertex_set());
        std::string why;
        if (!validate_jellyfish(g, cert, /*spanning=*/true, &why))
            throw std::logic_error("find_spanning_jellyfish: bad certificate: " + why);
        return cert;
    }
    return std::nullopt;
}

std::optional<BroomCert> find_spanning_broom(const Graph& g, const SearchLimits& lim) {
    const int n = g.n();
    if (n == 0) return std::nullopt;
    for (int v = 0; v < n; ++v) {
        VertexSet required = g.vertices();
        required -= g.adj(v);
        auto path = covering_path_from(g, v, required, lim);
        if (!path) continue;
        BroomCert cert;
        cert.path = *path;
        VertexSet used;
        for (int u : cert.path) used.set(u);
        cert.leaves = complement_sorted(g, used);
        std::string why;
        if (!validate_broom(g, cert, /*spanning=*/true, &why))
            throw std::logic_error("find_spanning_broom: bad certificate: " + why);
        return cert;
    }
    return std::nullopt;
}

std::optional<SpiderCert> find_spanning_spider(const Graph& g, const SearchLimits& lim) {
    const int n = g.n();
    if (n == 0) return std::nullopt;
    if (n == 1) {
        SpiderCert cert;
        std::string why;
        if (!validate_spider(g, cert, /*spanning=*/true, &why))
            throw std::logic_error("find_spanning_spider: bad certificate: " + why);
        return cert;
    }
    for (int b = 0; b < n; ++b) {
        VertexSet targets = g.vertices();
        targets.reset(b);
        auto legs = legs_cover(g, b, targets, lim);
        if (!legs) continue;
        SpiderCert cert;
        for (const auto& leg : *legs) {
            cert.edges.emplace_back(b, leg.front());
            for (size_t i = 1; i < leg.size(); ++i) cert.edges.emplace_back(leg[i - 1], leg[i]);
        }
        if (legs->size() >= 3) cert.branch = b;
        std::string why;
        if (!validate_spider(g, cert, /*spanning=*/true, &why))
            throw std::logic_error("find_spanning_spider: bad certificate: " + why);
        return cert;
    }
    return std::nullopt;
}

std::optional<OctopusCert> find_spanning_octopus(const Graph& g, const SearchLimits& lim) {
    const int n = g.n();
    if (n < 3) return std::nullopt;
    const int cap = std::min(lim.enum_cap, 32);
    if (n > cap) throw CapExceeded("find_spanning_octopus", n, cap);

    // Local adjacency as plain masks; n <= enum_cap <= 32 here.
    std::vector<uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u = g.adj(v).next(0); u >= 0; u = g.adj(v).next(u + 1)) adj[v] |= uint32_t{1} << u;

    auto try_set = [&](uint32_t mask) -> std::optional<OctopusCert> {
        VertexSet set;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) set.set(v);
        auto cyc = cycle_through(g, set, set, lim);
        if (!cyc) return std::nullopt;
        VertexSet rest = g.vertices() - set;
        for (int b = set.next(0); b >= 0; b = set.next(b + 1)) {
            OctopusCert cert;
            cert.cycle = canonical_cycle(*cyc);
            cert.branch = b;
            if (rest.empty()) {
                // Spanning cycle: no legs needed, any branch vertex works.
                std::string why;
                if (!validate_octopus(g, cert, /*spanning=*/true, &why))
                    throw std::logic_error("find_spanning_octopus: bad certificate: " + why);
                return cert;
            }
            auto legs = legs_cover(g, b, rest, lim);
            if (!legs) continue;
            cert.legs = *legs;
            std::string why;
            if (!validate_octopus(g, cert, /*spanning=*/true, &why))
                throw std::logic_error("find_spanning_octopus: bad certificate: " + why);
            return cert;
        }
        return std::nullopt;
    };

    // Larger cycles first: legs only shrink, and the spanning-cycle case exits
    // without any leg search at all.
    const uint32_t all = n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
    for (int size = n; size >= 3; --size) {
        uint32_t mask = size == 32 ? ~uint32_t{0} : (uint32_t{1} << size) - 1;
        while (true) {
            bool degree_ok = true;
            for (int v = 0; v < n && degree_ok; ++v)
                if (mask >> v & 1) {
                    int d = std::popcount(adj[v] & mask);
                    if (d < 2) degree_ok = false;
                }
            if (degree_ok) {
                if (auto cert = try_set(mask)) return cert;
            }
            if (mask == (all & ~((uint32_t{1} << (n - size)) - 1))) break;
            uint32_t c = mask & -mask;
            uint32_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r; // next same-popcount mask
        }
    }
    return std::nullopt;
}

PathMetrics path_metrics(const Graph& g, const SearchLimits& lim) {
    PathMetrics m;
    m.p = longest_path_order(g, lim);
    m.c = longest_cycle_length(g, lim);
    return m;
}

bool is_hamiltonian_connected(const Graph& g, const SearchLimits& lim) {
    const int n = g.n();
    if (n < 2) throw std::invalid_argument("is_hamiltonian_connected: need n >= 2");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!ham_path_between(g, u, v, lim)) return false;
    return true;
}

bool contains_complete_bipartite(const Graph& g, int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("contains_complete_bipartite: sides must be positive");
    if (a > b) std::swap(a, b);
    const int n = g.n();
    if (a + b > n) return false;

    // Pick the small side greedily vertex by vertex, keeping the common
    // neighborhood; the big side just needs b vertices left in it.
    VertexSet in_a;
    auto dfs = [&](auto&& self, int from, int picked, VertexSet common) -> bool {
        if (picked == a) return (common - in_a).count() >= b;
        for (int v = from; v < n; ++v) {
            if (in_a.test(v)) continue;
            VertexSet next = picked == 0 ? g.adj(v) : common & g.adj(v);
            VertexSet avail = next - in_a;
            avail.reset(v);
            if (avail.count() < b) continue; // common neighborhood only shrinks
            in_a.set(v);
            if (self(self, v + 1, picked + 1, next)) return true;
            in_a.reset(v);
        }
        return false;
    };
    return dfs(dfs, 0, 0, VertexSet{});
}

} // namespace jfish
