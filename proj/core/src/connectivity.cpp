#include "jfish/connectivity.hpp"

#include <stdexcept>

namespace jfish {

VertexSet reachable_within(const Graph& g, const VertexSet& from, const VertexSet& inside) {
    VertexSet seen = from & inside;
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v = frontier.first(); v >= 0; v = frontier.next(v + 1))
            next |= g.adj(v);
        next &= inside;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool is_connected_within(const Graph& g, const VertexSet& inside) {
    int start = inside.first();
    if (start < 0) return true;
    return reachable_within(g, VertexSet::single(start), inside) == inside;
}

bool is_connected(const Graph& g) {
    return is_connected_within(g, g.vertices());
}

int component_count_within(const Graph& g, const VertexSet& inside) {
    VertexSet rest = inside;
    int count = 0;
    while (!rest.empty()) {
        VertexSet comp = reachable_within(g, VertexSet::single(rest.first()), rest);
        rest -= comp;
        ++count;
    }
    return count;
}

namespace {

bool connected_after_deleting(const Graph& g, const VertexSet& deleted) {
    VertexSet inside = g.vertices();
    inside -= deleted;
    if (inside.empty()) return false;
    return is_connected_within(g, inside);
}

} // namespace

bool is_k_connected(const Graph& g, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("is_k_connected supports k in 1..3");
    const int n = g.n();
    if (n <= k) return false;
    if (!is_connected(g)) return false;
    if (k >= 2) {
        for (int a = 0; a < n; ++a)
            if (!connected_after_deleting(g, VertexSet::single(a))) return false;
    }
    if (k >= 3) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                VertexSet s = VertexSet::single(a);
                s.set(b);
                if (!connected_after_deleting(g, s)) return false;
            }
    }
    return true;
}

} // namespace jfish
