#include "jfish/families.hpp"

#include <numeric>
#include <stdexcept>

namespace jfish {

namespace {

void add_clique(Graph& g, int lo, int hi) {
    for (int u = lo; u < hi; ++u)
        for (int v = u + 1; v < hi; ++v) g.add_edge(u, v);
}

void add_join(Graph& g, int alo, int ahi, int blo, int bhi) {
    for (int u = alo; u < ahi; ++u)
        for (int v = blo; v < bhi; ++v) g.add_edge(u, v);
}

} // namespace

Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("gen_path: need n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gen_cycle: need n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("gen_complete: need n >= 1");
    Graph g(n);
    add_clique(g, 0, n);
    return g;
}

Graph gen_H(int s) {
    if (s < 2) throw std::invalid_argument("gen_H: need s >= 2");
    Graph g(3 * s + 2);
    const int u1 = 3 * s, u2 = 3 * s + 1;
    for (int k = 0; k < 3; ++k) {
        int lo = k * s;
        add_clique(g, lo, lo + s);
        for (int v = lo; v < lo + s; ++v) {
            if (v != lo) g.add_edge(u1, v);
            if (v != lo + 1) g.add_edge(u2, v);
        }
    }
    return g;
}

Graph gen_two_cliques(int n) {
    if (n < 4) throw std::invalid_argument("gen_two_cliques: need n >= 4");
    Graph g(n);
    const int half = n / 2;
    add_clique(g, 0, half);
    add_clique(g, half, n);
    g.add_edge(0, half);
    return g;
}

Graph gen_F(int a, int b, int c, int d) {
    if (a < 1 || b < 1 || c < 1 || d < 1)
        throw std::invalid_argument("gen_F: need all layer sizes >= 1");
    Graph g(a + b + c + d);
    add_join(g, 0, a, a, a + b);
    add_join(g, a, a + b, a + b, a + b + c);
    add_join(g, a + b, a + b + c, a + b + c, a + b + c + d);
    return g;
}

Graph gen_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("gen_complete_bipartite: need a,b >= 1");
    Graph g(a + b);
    add_join(g, 0, a, a, a + b);
    return g;
}

Graph gen_jellyfish(int cycle_len, int tentacles) {
    if (cycle_len < 3) throw std::invalid_argument("gen_jellyfish: need cycle length >= 3");
    if (tentacles < 0) throw std::invalid_argument("gen_jellyfish: negative tentacle count");
    Graph g(cycle_len + tentacles);
    for (int v = 0; v < cycle_len; ++v) g.add_edge(v, (v + 1) % cycle_len);
    for (int t = 0; t < tentacles; ++t) g.add_edge(0, cycle_len + t);
    return g;
}

Graph gen_broom(int path_order, int leaves) {
    if (path_order < 1) throw std::invalid_argument("gen_broom: need path order >= 1");
    if (leaves < 0) throw std::invalid_argument("gen_broom: negative leaf count");
    Graph g(path_order + leaves);
    for (int v = 0; v + 1 < path_order; ++v) g.add_edge(v, v + 1);
    for (int t = 0; t < leaves; ++t) g.add_edge(0, path_order + t);
    return g;
}

Graph gen_spider(const std::vector<int>& legs) {
    int total = 1;
    for (int len : legs) {
        if (len < 1) throw std::invalid_argument("gen_spider: leg lengths must be >= 1");
        total += len;
    }
    Graph g(total);
    int next = 1;
    for (int len : legs) {
        g.add_edge(0, next);
        for (int k = 1; k < len; ++k, ++next) g.add_edge(next, next + 1);
        ++next;
    }
    return g;
}

Graph gen_octopus(int cycle_len, const std::vector<int>& legs) {
    if (cycle_len < 3) throw std::invalid_argument("gen_octopus: need cycle length >= 3");
    int total = cycle_len;
    for (int len : legs) {
        if (len < 1) throw std::invalid_argument("gen_octopus: leg lengths must be >= 1");
        total += len;
    }
    Graph g(total);
    for (int v = 0; v < cycle_len; ++v) g.add_edge(v, (v + 1) % cycle_len);
    int next = cycle_len;
    for (int len : legs) {
        g.add_edge(0, next);
        for (int k = 1; k < len; ++k, ++next) g.add_edge(next, next + 1);
        ++next;
    }
    return g;
}

Graph gen_named(const FamilySpec& spec) {
    const auto& p = spec.params;
    auto want = [&](size_t k, const char* what) {
        if (p.size() != k) throw std::invalid_argument(std::string("gen_named: ") + what);
    };
    switch (spec.family) {
        case Family::H:
            want(1, "H takes {s}");
            return gen_H(p[0]);
        case Family::TwoCliques:
            want(1, "TwoCliques takes {n}");
            return gen_two_cliques(p[0]);
        case Family::F:
            want(4, "F takes {a,b,c,d}");
            return gen_F(p[0], p[1], p[2], p[3]);
        case Family::CompleteBipartite:
            want(2, "CompleteBipartite takes {a,b}");
            return gen_complete_bipartite(p[0], p[1]);
        case Family::Jellyfish:
            want(2, "Jellyfish takes {cycle,tentacles}");
            return gen_jellyfish(p[0], p[1]);
        case Family::Broom:
            want(2, "Broom takes {path,leaves}");
            return gen_broom(p[0], p[1]);
        case Family::Spider:
            return gen_spider(p);
        case Family::Octopus: {
            if (p.empty()) throw std::invalid_argument("gen_named: Octopus takes {cycle, legs...}");
            std::vector<int> legs(p.begin() + 1, p.end());
            return gen_octopus(p[0], legs);
        }
    }
    throw std::invalid_argument("gen_named: unknown family");
}

} // namespace jfish
