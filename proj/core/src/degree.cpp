#include "jfish/degree.hpp"

#include "jfish/connectivity.hpp"

namespace jfish {

DegreeProfile degree_profile(const Graph& g) {
    const int n = g.n();
    DegreeProfile p;
    p.degrees.resize(n);
    for (int v = 0; v < n; ++v) p.degrees[v] = g.degree(v);
    p.delta = 0;
    for (int v = 0; v < n; ++v)
        if (v == 0 || p.degrees[v] < p.delta) p.delta = p.degrees[v];

    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            int s = p.degrees[u] + p.degrees[v];
            if (!p.sigma2 || s < *p.sigma2) {
                p.sigma2 = s;
                p.sigma2_witness = {u, v};
            }
        }
    }

    if (p.sigma2) {
        for (int v = 0; v < n; ++v)
            if (2 * p.degrees[v] < *p.sigma2) p.low_set.set(v);
    }

    p.classes.resize(n);
    p.high_witness.assign(n, -1);
    VertexSet low_class;
    for (int v = 0; v < n; ++v) {
        if (3 * p.degrees[v] <= n - 2) {
            p.classes[v] = VertexClass::Low;
            low_class.set(v);
        } else {
            p.classes[v] = VertexClass::Normal;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (p.classes[v] != VertexClass::Normal) continue;
        VertexSet candidates = low_class;
        candidates -= g.adj(v);
        candidates.reset(v);
        int w = candidates.first();
        if (w >= 0) {
            p.classes[v] = VertexClass::High;
            p.high_witness[v] = w;
        }
    }
    return p;
}

bool meets_ore_main(const DegreeProfile& p, int n) {
    return !p.sigma2 || 3 * *p.sigma2 >= 2 * n - 3;
}

bool meets_dirac_cor(const DegreeProfile& p, int n) {
    return 3 * p.delta >= n - 1;
}

ConditionCheck check_conditions(const Graph& g) {
    DegreeProfile p = degree_profile(g);
    ConditionCheck c;
    c.ore_main = meets_ore_main(p, g.n());
    c.dirac_cor = meets_dirac_cor(p, g.n());
    c.connectivity = 0;
    for (int k = 1; k <= 3; ++k)
        if (is_k_connected(g, k)) c.connectivity = k;
    return c;
}

} // namespace jfish
