#include "jfish/validate.hpp"

#include <algorithm>

namespace jfish {

namespace {

bool fail(std::string* why, const char* msg) {
    if (why) *why = msg;
    return false;
}

bool all_in_range(const Graph& g, const std::vector<int>& vs) {
    return std::all_of(vs.begin(), vs.end(),
                       [&](int v) { return v >= 0 && v < g.n(); });
}

bool distinct(const std::vector<int>& vs) {
    VertexSet seen;
    for (int v : vs) {
        if (seen.test(v)) return false;
        seen.set(v);
    }
    return true;
}

} // namespace

bool validate_path(const Graph& g, const std::vector<int>& path, std::string* why) {
    if (path.empty()) return fail(why, "empty path");
    if (!all_in_range(g, path)) return fail(why, "vertex out of range");
    if (!distinct(path)) return fail(why, "repeated vertex");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1])) return fail(why, "missing path edge");
    return true;
}

bool validate_cycle(const Graph& g, const CycleCert& c, std::string* why) {
    const auto& vs = c.vertices;
    if (vs.size() < 3) return fail(why, "cycle shorter than 3");
    if (!all_in_range(g, vs)) return fail(why, "vertex out of range");
    if (!distinct(vs)) return fail(why, "repeated vertex");
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (!g.has_edge(vs[i], vs[(i + 1) % vs.size()])) return fail(why, "missing cycle edge");
    return true;
}

bool validate_jellyfish(const Graph& g, const JellyfishCert& jf, bool spanning,
                        std::string* why) {
    if (!validate_cycle(g, jf.cycle, why)) return false;
    VertexSet on_cycle = jf.cycle.vertex_set();
    if (jf.center < 0 || jf.center >= g.n() || !on_cycle.test(jf.center))
        return fail(why, "center not on cycle");
    if (!all_in_range(g, jf.tentacles)) return fail(why, "tentacle out of range");
    if (!distinct(jf.tentacles)) return fail(why, "repeated tentacle");
    VertexSet tent;
    for (int t : jf.tentacles) {
        if (on_cycle.test(t)) return fail(why, "tentacle on cycle");
        if (!g.has_edge(jf.center, t)) return fail(why, "tentacle not adjacent to center");
        tent.set(t);
    }
    if (spanning && !((on_cycle | tent) == g.vertices()))
        return fail(why, "not spanning");
    return true;
}

bool validate_broom(const Graph& g, const BroomCert& br, bool spanning, std::string* why) {
    if (!validate_path(g, br.path, why)) return false;
    VertexSet on_path;
    for (int v : br.path) on_path.set(v);
    if (!all_in_range(g, br.leaves)) return fail(why, "leaf out of range");
    if (!distinct(br.leaves)) return fail(why, "repeated leaf");
    VertexSet leaves;
    for (int l : br.leaves) {
        if (on_path.test(l)) return fail(why, "leaf on path");
        if (!g.has_edge(br.center(), l)) return fail(why, "leaf not adjacent to center");
        leaves.set(l);
    }
    if (spanning && !((on_path | leaves) == g.vertices()))
        return fail(why, "not spanning");
    return true;
}

bool validate_spider(const Graph& g, const SpiderCert& sp, bool spanning, std::string* why) {
    // Tree check: right edge count, connected over its support, all edges
    // present in g, at most one vertex of degree >= 3.
    std::vector<int> deg(g.n(), 0);
    VertexSet support;
    for (auto [u, v] : sp.edges) {
        if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
            return fail(why, "vertex out of range");
        if (!g.has_edge(u, v)) return fail(why, "edge missing from graph");
        ++deg[u];
        ++deg[v];
        support.set(u);
        support.set(v);
    }
    int nverts = spanning ? g.n() : support.count();
    if (spanning) {
        if (g.n() == 1) {
            if (!sp.edges.empty()) return fail(why, "edge in a one-vertex spider");
        } else if (!(support == g.vertices())) {
            return fail(why, "not spanning");
        }
    }
    if (static_cast<int>(sp.edges.size()) != nverts - 1 && !(nverts == 1 && sp.edges.empty()))
        return fail(why, "edge count is not order minus one");
    if (!sp.edges.empty()) {
        // Connectivity over the support via union of edges.
        Graph t(g.n());
        for (auto [u, v] : sp.edges) {
            if (t.has_edge(u, v)) return fail(why, "repeated edge");
            t.add_edge(u, v);
        }
        VertexSet start = VertexSet::single(support.first());
        VertexSet reach = start;
        VertexSet frontier = start;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v = frontier.first(); v >= 0; v = frontier.next(v + 1)) next |= t.adj(v);
            next &= support;
            next -= reach;
            reach |= next;
            frontier = next;
        }
        if (!(reach == support)) return fail(why, "edges not connected");
    }
    int branches = 0;
    int branch_vertex = -1;
    for (int v = 0; v < g.n(); ++v)
        if (deg[v] >= 3) {
            ++branches;
            branch_vertex = v;
        }
    if (branches > 1) return fail(why, "more than one branch vertex");
    if (sp.branch) {
        if (branches == 0 || *sp.branch != branch_vertex)
            return fail(why, "declared branch does not match degrees");
    } else if (branches == 1) {
        return fail(why, "branch vertex not declared");
    }
    return true;
}

bool validate_octopus(const Graph& g, const OctopusCert& oc, bool spanning, std::string* why) {
    if (!validate_cycle(g, oc.cycle, why)) return false;
    VertexSet on_cycle = oc.cycle.vertex_set();
    if (oc.branch < 0 || oc.branch >= g.n() || !on_cycle.test(oc.branch))
        return fail(why, "branch not on cycle");
    VertexSet used = on_cycle;
    for (const auto& leg : oc.legs) {
        if (leg.empty()) return fail(why, "empty leg");
        if (!all_in_range(g, leg)) return fail(why, "leg vertex out of range");
        int prev = oc.branch;
        for (int v : leg) {
            if (used.test(v)) return fail(why, "leg vertex reused");
            if (!g.has_edge(prev, v)) return fail(why, "missing leg edge");
            used.set(v);
            prev = v;
        }
    }
    if (spanning && !(used == g.vertices())) return fail(why, "not spanning");
    return true;
}

} // namespace jfish
