#include "jfish/enumerate.hpp"

#include <stdexcept>

namespace jfish {

uint64_t labeled_graph_count(int n) {
    if (n < 0 || n > 11) throw std::invalid_argument("labeled sweep limited to n <= 11");
    int bits = n * (n - 1) / 2;
    return uint64_t{1} << bits;
}

Graph graph_from_index(int n, uint64_t index) {
    if (index >= labeled_graph_count(n)) throw std::invalid_argument("graph index out of range");
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (index >> bit & 1) g.add_edge(u, v);
    return g;
}

Graph sample_gnp(int n, int p1000, StreamRng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p1000)) g.add_edge(u, v);
    return g;
}

Graph sample_three_blob(int n, StreamRng& rng) {
    if (n < 8) throw std::invalid_argument("three-blob sampler needs n >= 8");
    Graph g(n);
    int m = n - 2;
    int cut1 = m / 3, cut2 = 2 * m / 3;
    int starts[4] = {0, cut1, cut2, m};
    for (int b = 0; b < 3; ++b)
        for (int u = starts[b]; u < starts[b + 1]; ++u)
            for (int v = u + 1; v < starts[b + 1]; ++v) g.add_edge(u, v);
    // hub m skips each blob's first vertex, hub m+1 the second (or the first
    // again when the blob is a singleton, so singletons keep one hub)
    for (int b = 0; b < 3; ++b) {
        int lo = starts[b], hi = starts[b + 1];
        int skip1 = lo, skip2 = hi - lo >= 2 ? lo + 1 : lo;
        for (int v = lo; v < hi; ++v) {
            if (v != skip1) g.add_edge(m, v);
            if (v != skip2) g.add_edge(m + 1, v);
        }
    }
    int toggles = static_cast<int>(rng.below(static_cast<uint32_t>(n)));
    for (int i = 0; i < toggles; ++i) {
        int u = static_cast<int>(rng.below(static_cast<uint32_t>(n)));
        int v = static_cast<int>(rng.below(static_cast<uint32_t>(n)));
        if (u == v) continue;
        if (g.has_edge(u, v))
            g.remove_edge(u, v);
        else
            g.add_edge(u, v);
    }
    return g;
}

} // namespace jfish
