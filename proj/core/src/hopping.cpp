#include "jfish/hopping.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "jfish/connectivity.hpp"
#include "jfish/validate.hpp"

namespace jfish {

namespace {

constexpr int kInf = 1 << 28;

int pos_of(const std::vector<int>& cycle, int v) {
    for (size_t s = 0; s < cycle.size(); ++s)
        if (cycle[s] == v) return (int)s;
    throw std::logic_error("pos_of: vertex not on cycle");
}

// Cycle opened just before position s, walked forward.
std::vector<int> rotation_at(const std::vector<int>& cycle, int s) {
    const int l = (int)cycle.size();
    std::vector<int> p(l);
    for (int t = 0; t < l; ++t) p[t] = cycle[(s + t) % l];
    return p;
}

} // namespace

VertexSet HoppingState::x_at(int i) const {
    if (i <= 0 || xs.empty()) return {};
    return xs[std::min<size_t>((size_t)i - 1, xs.size() - 1)];
}

VertexSet HoppingState::y_at(int i) const {
    if (i < 0 || ys.empty()) return {};
    return ys[std::min<size_t>((size_t)i, ys.size() - 1)];
}

HoppingState compute_xy(const Graph& g, const std::vector<int>& cycle) {
    CycleCert cert{cycle};
    std::string why;
    if (!validate_cycle(g, cert, &why)) throw std::invalid_argument("compute_xy: " + why);

    const int l = (int)cycle.size();
    HoppingState st;
    st.cycle = cycle;
    st.height_x.assign(g.n(), -1);
    st.height_y.assign(g.n(), -1);

    VertexSet off = g.vertices() - cert.vertex_set();
    st.ys.push_back(off);
    for (int v = off.next(0); v >= 0; v = off.next(v + 1)) st.height_y[v] = 0;

    VertexSet px;
    while (true) {
        const VertexSet py = st.ys.back();
        VertexSet xi;
        for (int s = 0; s < l; ++s)
            if (g.adj(cycle[s]).intersects(py)) xi.set(cycle[s]);
        VertexSet yi = py;
        for (int s = 0; s < l; ++s) {
            int prev = cycle[(s + l - 1) % l], nxt = cycle[(s + 1) % l];
            if (xi.test(prev) && xi.test(nxt)) yi.set(cycle[s]);
        }
        if (xi == px && yi == py) break;
        int level = (int)st.xs.size() + 1;
        if (level > g.n() + 1) throw std::logic_error("compute_xy: chains failed to stabilize");
        for (int v = (xi - px).next(0); v >= 0; v = (xi - px).next(v + 1)) st.height_x[v] = level;
        for (int v = (yi - py).next(0); v >= 0; v = (yi - py).next(v + 1)) st.height_y[v] = level;
        st.xs.push_back(xi);
        st.ys.push_back(yi);
        px = xi;
    }
    st.iterations = (int)st.xs.size();
    st.limit_x = st.xs.empty() ? VertexSet{} : st.xs.back();
    st.limit_y = st.ys.back();
    return st;
}

bool is_good_path(const Graph& g, const std::vector<int>& path) {
    std::string why;
    if (!validate_path(g, path, &why)) throw std::invalid_argument("is_good_path: " + why);
    VertexSet used;
    for (int v : path) used.set(v);
    for (int e : {path.front(), path.back()}) {
        if (!g.adj(e).is_subset_of(used)) return false;
        const VertexSet& nb = g.adj(e);
        for (size_t s = 0; s + 1 < path.size(); ++s)
            if (nb.test(path[s]) && nb.test(path[s + 1])) return false;
    }
    return true;
}

namespace {

// Anchored path search. Fixing the first vertex pins one endpoint
// neighborhood, so two constraints prune early: every neighbor of the start
// must still be reachable, and no step may place two of them consecutively.
struct GoodPathSearch {
    const Graph& g;
    const int target; // 0 maximizes, otherwise stop once this order is reached
    int best = 0;
    int start = -1;
    std::vector<int> path;
    VertexSet used;

    GoodPathSearch(const Graph& g, int target) : g(g), target(target) {}

    bool satisfied() const { return target > 0 && best >= target; }

    void run() {
        for (int v = 0; v < g.n() && !satisfied(); ++v) {
            start = v;
            path.assign(1, v);
            used = VertexSet{};
            used.set(v);
            dfs();
        }
    }

    bool good_now() const {
        if (!g.adj(start).is_subset_of(used)) return false;
        int back = path.back();
        if (!g.adj(back).is_subset_of(used)) return false;
        const VertexSet& nb = g.adj(back);
        for (size_t s = 0; s + 1 < path.size(); ++s)
            if (nb.test(path[s]) && nb.test(path[s + 1])) return false;
        return true;
    }

    void dfs() {
        int order = (int)path.size();
        if ((target > 0 ? order >= target : order > best) && good_now()) best = order;
        if (satisfied()) return;
        int back = path.back();
        VertexSet free = g.vertices() - used;
        VertexSet cand = g.adj(back) & free;
        if (cand.empty()) return;
        VertexSet reach = reachable_within(g, cand, free);
        // a good path from this start must carry all of N(start), pairwise
        // nonconsecutive, so it has at least 2 d(start) - 1 vertices
        int need = std::max(target > 0 ? target : best + 1, 2 * g.degree(start) - 1);
        if (order + reach.count() < need) return;
        if (!(g.adj(start) - used).is_subset_of(reach)) return;
        const VertexSet& sn = g.adj(start);
        const bool back_in_sn = sn.test(back);
        for (int w = cand.next(0); w >= 0; w = cand.next(w + 1)) {
            if (back_in_sn && sn.test(w)) continue;
            path.push_back(w);
            used.set(w);
            dfs();
            used.reset(w);
            path.pop_back();
            if (satisfied()) return;
        }
    }
};

} // namespace

int longest_good_path(const Graph& g, const SearchLimits& lim) {
    if (g.n() > lim.cycle_cap) throw CapExceeded("longest_good_path", g.n(), lim.cycle_cap);
    GoodPathSearch s(g, 0);
    s.run();
    return s.best;
}

bool has_good_path_at_least(const Graph& g, int order, const SearchLimits& lim) {
    if (order <= 0) return true;
    if (order > g.n()) return false;
    if (g.n() > lim.cycle_cap) throw CapExceeded("has_good_path_at_least", g.n(), lim.cycle_cap);
    GoodPathSearch s(g, order);
    s.run();
    return s.best >= order;
}

HoppingPathCheck is_hopping_path(const Graph& g, const HoppingState& st,
                                 const std::vector<int>& path) {
    std::string why;
    if (!validate_path(g, path, &why)) throw std::invalid_argument("is_hopping_path: " + why);
    HoppingPathCheck out;
    const int len = (int)path.size();
    auto hx = [&](int v) { return st.height_x[v] < 0 ? kInf : st.height_x[v]; };

    if (!(st.limit_x.test(path.front()) && st.limit_x.test(path.back())))
        out.violated.push_back("H1");

    VertexSet x1 = st.x_at(1);
    for (int s = 0; s + 1 < len; ++s)
        if (x1.test(path[s]) && x1.test(path[s + 1])) {
            out.violated.push_back("H2");
            break;
        }

    VertexSet pv, cv;
    for (int v : path) pv.set(v);
    for (int v : st.cycle) cv.set(v);
    if (!(pv == cv)) out.violated.push_back("H3");

    const int h = std::max(hx(path.front()), hx(path.back()));
    bool h4 = true;
    for (int j = 0; h4 && j < h && j <= st.iterations; ++j) {
        VertexSet xj = st.x_at(j), yj = st.y_at(j);
        for (int s = 1; s + 1 < len; ++s)
            if (yj.test(path[s]) && !(xj.test(path[s - 1]) && xj.test(path[s + 1]))) {
                h4 = false;
                break;
            }
    }
    if (!h4) out.violated.push_back("H4");

    out.ok = out.violated.empty();
    return out;
}

HoppingPathCheck is_hopping_path(const Graph& g, const std::vector<int>& cycle,
                                 const std::vector<int>& path) {
    return is_hopping_path(g, compute_xy(g, cycle), path);
}

std::vector<std::vector<int>> enumerate_hopping_paths(const Graph& g, const HoppingState& st,
                                                      const SearchLimits& lim) {
    const int c = (int)st.cycle.size();
    if (c > lim.enum_cap) throw CapExceeded("enumerate_hopping_paths", c, lim.enum_cap);
    VertexSet cset;
    for (int v : st.cycle) cset.set(v);
    const VertexSet x1 = st.x_at(1);

    std::vector<std::vector<int>> out;
    std::vector<int> path;
    VertexSet used;
    auto dfs = [&](auto&& self) -> void {
        int v = path.back();
        if ((int)path.size() == c) {
            if (!st.limit_x.test(v)) return;
            if (path.front() > v) return; // reversal is enumerated from the other end
            if (is_hopping_path(g, st, path).ok) out.push_back(path);
            return;
        }
        VertexSet cand = g.adj(v) & (cset - used);
        for (int w = cand.next(0); w >= 0; w = cand.next(w + 1)) {
            if (x1.test(v) && x1.test(w)) continue;
            path.push_back(w);
            used.set(w);
            self(self);
            path.pop_back();
            used.reset(w);
        }
    };
    for (int s = st.limit_x.next(0); s >= 0; s = st.limit_x.next(s + 1)) {
        path.assign(1, s);
        used = VertexSet::single(s);
        dfs(dfs);
    }
    return out;
}

std::vector<int> reduce_hopping_path(const Graph& g, const std::vector<int>& cycle,
                                     const std::vector<int>& path) {
    HoppingState st = compute_xy(g, cycle);
    {
        auto chk = is_hopping_path(g, st, path);
        if (!chk.ok) {
            std::string msg = "reduce_hopping_path: not a hopping path:";
            for (const auto& v : chk.violated) msg += " " + v;
            throw std::invalid_argument(msg);
        }
    }
    const int l = (int)cycle.size();
    VertexSet x1 = st.x_at(1);
    for (int s = 0; s < l; ++s)
        if (x1.test(cycle[s]) && x1.test(cycle[(s + 1) % l]))
            throw std::invalid_argument(
                "reduce_hopping_path: first-level vertices are consecutive on the cycle");

    auto hx = [&](int v) { return st.height_x[v] < 0 ? kInf : st.height_x[v]; };
    auto hy = [&](int v) { return st.height_y[v] < 0 ? kInf : st.height_y[v]; };

    std::vector<int> cur = path;
    const int guard = 4 * g.n() * g.n() + 8;
    for (int iter = 0;; ++iter) {
        if (iter > guard) throw std::logic_error("reduce_hopping_path: no progress");
        int hf = hx(cur.front()), hb = hx(cur.back());
        const int i = std::max(hf, hb);
        if (i <= 1) return cur;
        if (hf > hb) {
            std::reverse(cur.begin(), cur.end());
            std::swap(hf, hb);
        }
        const int len = (int)cur.size();
        const long old_sum = (long)hf + hb;

        // Preference order: rotate the cycle open at a vertex that entered Y
        // early (endpoints first, then any doubly-early vertex), otherwise
        // hop an endpoint onto a neighbor one level down.
        std::vector<int> next;
        int rot = -1;
        if (hy(cur.front()) < i) {
            rot = pos_of(cycle, cur.front());
        } else if (hf == i && hy(cur.back()) < i) {
            rot = pos_of(cycle, cur.back());
        } else {
            for (int s = 0; s < l; ++s)
                if (hx(cycle[s]) < i && hy(cycle[s]) < i) {
                    rot = s;
                    break;
                }
        }
        if (rot >= 0) {
            next = rotation_at(cycle, rot);
        } else if (hf < i) {
            int j = -1;
            for (int s = 0; s < len; ++s)
                if (g.has_edge(cur.back(), cur[s]) && hy(cur[s]) == i - 1) {
                    j = s;
                    break;
                }
            if (j < 0) throw std::logic_error("reduce_hopping_path: missing hop target");
            next.assign(cur.begin() + j + 1, cur.end());
            for (int s = j; s >= 0; --s) next.push_back(cur[s]);
        } else {
            int j = -1, jp = -1;
            for (int s = 0; s < len; ++s)
                if (g.has_edge(cur.front(), cur[s]) && hy(cur[s]) == i - 1) {
                    j = s;
                    break;
                }
            for (int s = 0; s < len; ++s)
                if (g.has_edge(cur.back(), cur[s]) && hy(cur[s]) == i - 1) {
                    jp = s;
                    break;
                }
            if (j < 0 || jp < 0) throw std::logic_error("reduce_hopping_path: missing hop target");
            if (j <= jp) {
                for (int s = j - 1; s >= 0; --s) next.push_back(cur[s]);
                for (int s = j; s <= jp; ++s) next.push_back(cur[s]);
                for (int s = len - 1; s > jp; --s) next.push_back(cur[s]);
            } else {
                for (int s = jp + 1; s <= j; ++s) next.push_back(cur[s]);
                for (int s = 0; s <= jp; ++s) next.push_back(cur[s]);
                for (int s = len - 1; s > j; --s) next.push_back(cur[s]);
            }
        }

        std::string why;
        if (!validate_path(g, next, &why))
            throw std::logic_error("reduce_hopping_path: step broke the path: " + why);
        auto chk = is_hopping_path(g, st, next);
        if (!chk.ok) {
            std::string msg = "reduce_hopping_path: step left a non-hopping path:";
            for (const auto& v : chk.violated) msg += " " + v;
            throw std::logic_error(msg);
        }
        const int nf = hx(next.front()), nb = hx(next.back());
        const int ni = std::max(nf, nb);
        const long new_sum = (long)nf + nb;
        if (!(ni < i || (ni == i && new_sum < old_sum)))
            throw std::logic_error("reduce_hopping_path: step did not decrease the height measure");
        cur = std::move(next);
    }
}

HoppingReport verify_hopping_lemma(const Graph& g, const std::vector<int>& cycle,
                                   const SearchLimits& lim) {
    HoppingReport rep;
    rep.state = compute_xy(g, cycle);
    const HoppingState& st = rep.state;
    const int l = (int)cycle.size();

    std::vector<std::string> fails;
    int lc = longest_cycle_length(g, lim);
    if (lc != l)
        fails.push_back("cycle is not longest (" + std::to_string(l) + " vs " +
                        std::to_string(lc) + ")");
    VertexSet off = st.y_at(0);
    for (int v = off.next(0); v >= 0; v = off.next(v + 1))
        if (g.adj(v).intersects(off)) {
            fails.push_back("off-cycle vertices span an edge");
            break;
        }
    if (has_good_path_at_least(g, l + 2, lim))
        fails.push_back("a good path with " + std::to_string(l + 2) + " vertices exists");
    rep.hypothesis_ok = fails.empty();
    for (size_t k = 0; k < fails.size(); ++k) rep.hypothesis_failure += (k ? "; " : "") + fails[k];

    rep.m1 = true;
    for (int s = 0; s < l; ++s) {
        int u = cycle[s], w = cycle[(s + 1) % l];
        if (st.limit_x.test(u) && st.limit_x.test(w)) {
            rep.m1 = false;
            rep.m1_witness = {u, w};
            break;
        }
    }

    rep.m2 = true;
    VertexSet both = st.limit_x & st.limit_y;
    if (!both.empty()) {
        rep.m2 = false;
        rep.m2_overlap_witness = both.next(0);
    }
    for (int y = st.limit_y.next(0); y >= 0; y = st.limit_y.next(y + 1)) {
        VertexSet bad = g.adj(y) - st.limit_x;
        if (!bad.empty()) {
            rep.m2 = false;
            rep.m2_edge_witness = {y, bad.next(0)};
            break;
        }
    }

    rep.m3 = true;
    for (int y = st.limit_y.next(0); y >= 0; y = st.limit_y.next(y + 1)) {
        VertexSet nb = g.adj(y) & st.limit_y;
        if (!nb.empty()) {
            rep.m3 = false;
            rep.m3_witness = {y, nb.next(0)};
            break;
        }
    }
    return rep;
}

VertexSet swap_set(const Graph& g, const std::vector<int>& cycle, int u) {
    CycleCert cert{cycle};
    std::string why;
    if (!validate_cycle(g, cert, &why)) throw std::invalid_argument("swap_set: " + why);
    if (u < 0 || u >= g.n()) throw std::invalid_argument("swap_set: vertex out of range");
    if (cert.vertex_set().test(u)) throw std::invalid_argument("swap_set: vertex lies on the cycle");
    const int l = (int)cycle.size();
    VertexSet out;
    for (int s = 0; s < l; ++s) {
        int prev = cycle[(s + l - 1) % l], nxt = cycle[(s + 1) % l];
        if (g.adj(u).test(prev) && g.adj(u).test(nxt)) out.set(cycle[s]);
    }
    return out;
}

CycleCert swap_cycle(const Graph& g, const std::vector<int>& cycle, int v, int u) {
    VertexSet r = swap_set(g, cycle, u);
    if (v < 0 || v >= g.n() || !r.test(v))
        throw std::invalid_argument("swap_cycle: vertex is not swappable with the replacement");
    std::vector<int> next = cycle;
    for (int& w : next)
        if (w == v) w = u;
    return canonical_cycle(next);
}

} // namespace jfish
