#include "jfish/search.hpp"

#include <algorithm>
#include <stdexcept>

#include "jfish/connectivity.hpp"

namespace jfish {

CapExceeded::CapExceeded(const std::string& op, int n, int cap)
    : std::runtime_error(op + ": graph order " + std::to_string(n) +
                         " exceeds search cap " + std::to_string(cap)),
      op_(op), n_(n), cap_(cap) {}

namespace {

void check_cap(const char* op, int n, int cap) {
    if (n > cap) throw CapExceeded(op, n, cap);
}

VertexSet ids_at_least(int n, int k) {
    VertexSet s;
    for (int i = std::max(k, 0); i < n; ++i) s.set(i);
    return s;
}

// Vertices of `free` reachable from `back` walking only through `free`
// (back itself excluded).
VertexSet reach_from(const Graph& g, int back, const VertexSet& free) {
    return reachable_within(g, g.adj(back) & free, free);
}

// ---------------------------------------------------------------------------
// Two-objective cycle search: maximize (length, marks) lexicographically.
// Phase 1 finds the optimum value; phase 2 greedily rebuilds the canonically
// smallest optimal cycle via feasibility probes. Every cycle is explored from
// its minimum vertex only, so phase-1 work is not duplicated per rotation.

struct CycleValueSearch {
    const Graph& g;
    const VertexSet& marks;
    int best_len = 0;
    int best_marks = -1;

    int anchor = 0;
    VertexSet eligible; // anchor plus all higher ids
    VertexSet used;
    int cur_marks = 0;

    explicit CycleValueSearch(const Graph& gr, const VertexSet& mk) : g(gr), marks(mk) {}

    bool better(int len, int mk) const {
        return len > best_len || (len == best_len && mk > best_marks);
    }

    void dfs(int back, int len) {
        if (len >= 3 && g.has_edge(back, anchor) && better(len, cur_marks)) {
            best_len = len;
            best_marks = cur_marks;
        }
        VertexSet free = eligible - used;
        VertexSet r = reach_from(g, back, free);
        if (!better(len + r.count(), cur_marks + (r & marks).count())) return;
        if (!r.intersects(g.adj(anchor))) return; // closing vertex out of reach
        VertexSet ext = g.adj(back) & free;
        for (int w = ext.first(); w >= 0; w = ext.next(w + 1)) {
            used.set(w);
            if (marks.test(w)) ++cur_marks;
            dfs(w, len + 1);
            used.reset(w);
            if (marks.test(w)) --cur_marks;
        }
    }

    void run() {
        int n = g.n();
        int total_marks = (marks & g.vertices()).count();
        for (anchor = 0; anchor + 2 < n; ++anchor) {
            eligible = ids_at_least(n, anchor);
            if (!better(n - anchor, (marks & eligible).count())) continue;
            used = VertexSet::single(anchor);
            cur_marks = marks.test(anchor) ? 1 : 0;
            dfs(anchor, 1);
            if (best_len == n && best_marks == total_marks) return;
        }
    }
};

struct CycleRebuild {
    const Graph& g;
    const VertexSet& marks;
    int target_len;
    int target_marks;

    int m = 0; // minimum vertex of the cycle under construction
    VertexSet eligible;
    VertexSet used;
    int cur_marks = 0;

    CycleRebuild(const Graph& gr, const VertexSet& mk, int len, int cnt)
        : g(gr), marks(mk), target_len(len), target_marks(cnt) {}

    bool feasible(int back, int len) {
        if (len == target_len) return cur_marks == target_marks && g.has_edge(back, m);
        if (cur_marks > target_marks) return false;
        VertexSet free = eligible - used;
        VertexSet r = reach_from(g, back, free);
        if (len + r.count() < target_len) return false;
        if (cur_marks + (r & marks).count() < target_marks) return false;
        if (!r.intersects(g.adj(m))) return false;
        VertexSet ext = g.adj(back) & free;
        for (int w = ext.first(); w >= 0; w = ext.next(w + 1)) {
            used.set(w);
            if (marks.test(w)) ++cur_marks;
            bool ok = feasible(w, len + 1);
            used.reset(w);
            if (marks.test(w)) --cur_marks;
            if (ok) return true;
        }
        return false;
    }

    // Greedy lexicographic completion; assumes feasible({m}) was checked.
    std::optional<std::vector<int>> build_from(int start) {
        m = start;
        eligible = ids_at_least(g.n(), m + 1);
        used = VertexSet::single(m);
        cur_marks = marks.test(m) ? 1 : 0;
        if (!feasible(m, 1)) return std::nullopt;
        std::vector<int> seq{m};
        for (int len = 1; len < target_len; ++len) {
            VertexSet ext = g.adj(seq.back()) & (eligible - used);
            bool extended = false;
            for (int w = ext.first(); w >= 0; w = ext.next(w + 1)) {
                used.set(w);
                if (marks.test(w)) ++cur_marks;
                if (feasible(w, len + 1)) {
                    seq.push_back(w);
                    extended = true;
                    break;
                }
                used.reset(w);
                if (marks.test(w)) --cur_marks;
            }
            if (!extended) return std::nullopt;
        }
        return seq;
    }
};

// ---------------------------------------------------------------------------
// Separator prechecks. A cycle minus any s vertices falls apart into at most
// s arcs, so a required set spread over more components after such a deletion
// rules the cycle out before any search starts. Same idea for paths with
// s+1 arcs.

int components_hit(const Graph& g, const VertexSet& pool, VertexSet targets) {
    targets &= pool;
    int hits = 0;
    while (!targets.empty()) {
        VertexSet comp = reachable_within(g, VertexSet::single(targets.first()), pool);
        targets -= comp;
        ++hits;
    }
    return hits;
}

bool cycle_separator_blocks(const Graph& g, const VertexSet& required, const VertexSet& allowed) {
    if (components_hit(g, allowed, required) > 1) return true;
    for (int a = allowed.first(); a >= 0; a = allowed.next(a + 1)) {
        VertexSet pool = allowed;
        pool.reset(a);
        VertexSet targets = required;
        targets.reset(a);
        if (components_hit(g, pool, targets) > 1) return true;
        for (int b = allowed.next(a + 1); b >= 0; b = allowed.next(b + 1)) {
            VertexSet pool2 = pool;
            pool2.reset(b);
            VertexSet targets2 = targets;
            targets2.reset(b);
            if (components_hit(g, pool2, targets2) > 2) return true;
        }
    }
    return false;
}

bool path_separator_blocks(const Graph& g, const VertexSet& must_cover) {
    VertexSet pool = g.vertices();
    if (components_hit(g, pool, must_cover) > 1) return true;
    for (int a = pool.first(); a >= 0; a = pool.next(a + 1)) {
        VertexSet sub = pool;
        sub.reset(a);
        VertexSet targets = must_cover;
        targets.reset(a);
        if (components_hit(g, sub, targets) > 2) return true;
    }
    return false;
}

struct CycleThroughSearch {
    const Graph& g;
    VertexSet required;
    VertexSet allowed;
    int r0;
    VertexSet used;
    std::vector<int> path;

    CycleThroughSearch(const Graph& gr, const VertexSet& req, const VertexSet& all)
        : g(gr), required(req), allowed(all), r0(req.first()) {}

    bool dfs(int back) {
        if (required.is_subset_of(used) && path.size() >= 3 && g.has_edge(back, r0)) return true;
        VertexSet free = allowed - used;
        VertexSet r = reach_from(g, back, free);
        VertexSet missing = required - used;
        if (!missing.is_subset_of(r)) return false;
        if (!r.intersects(g.adj(r0))) return false;
        for (int v = missing.first(); v >= 0; v = missing.next(v + 1)) {
            int slots = (g.adj(v) & free).count();
            if (g.has_edge(v, back)) ++slots;
            if (g.has_edge(v, r0)) ++slots;
            if (slots < 2) return false;
        }
        VertexSet ext = g.adj(back) & free;
        for (int w = ext.first(); w >= 0; w = ext.next(w + 1)) {
            used.set(w);
            path.push_back(w);
            if (dfs(w)) return true;
            used.reset(w);
            path.pop_back();
        }
        return false;
    }

    std::optional<std::vector<int>> run() {
        used = VertexSet::single(r0);
        path = {r0};
        if (dfs(r0)) return path;
        return std::nullopt;
    }
};

struct CoveringPathSearch {
    const Graph& g;
    VertexSet required;
    VertexSet used;
    std::vector<int> path;

    CoveringPathSearch(const Graph& gr, const VertexSet& req) : g(gr), required(req) {}

    bool dfs(int back) {
        if (required.is_subset_of(used)) return true;
        VertexSet free = g.vertices() - used;
        VertexSet r = reach_from(g, back, free);
        VertexSet missing = required - used;
        if (!missing.is_subset_of(r)) return false;
        int endpoint_candidates = 0;
        for (int v = missing.first(); v >= 0; v = missing.next(v + 1)) {
            int slots = (g.adj(v) & free).count();
            if (g.has_edge(v, back)) ++slots;
            if (slots == 0) return false;
            if (slots == 1 && ++endpoint_candidates >= 2) return false;
        }
        VertexSet ext = g.adj(back) & free;
        for (int w = ext.first(); w >= 0; w = ext.next(w + 1)) {
            used.set(w);
            path.push_back(w);
            if (dfs(w)) return true;
            used.reset(w);
            path.pop_back();
        }
        return false;
    }

    std::optional<std::vector<int>> run(int start) {
        used = VertexSet::single(start);
        path = {start};
        if (dfs(start)) return path;
        return std::nullopt;
    }
};

struct HamPathSearch {
    const Graph& g;
    int target;
    int n;
    VertexSet used;

    HamPathSearch(const Graph& gr, int tgt) : g(gr), target(tgt), n(gr.n()) {}

    bool dfs(int back, int len) {
        if (len == n) return true;
        VertexSet free = g.vertices() - used;
        VertexSet r = reach_from(g, back, free);
        if (!free.is_subset_of(r)) return false;
        for (int v = free.first(); v >= 0; v = free.next(v + 1)) {
            int slots = (g.adj(v) & free).count();
            if (g.has_edge(v, back)) ++slots;
            if (slots < (v == target ? 1 : 2)) return false;
        }
        VertexSet ext = g.adj(back) & free;
        if (len + 1 < n) ext.reset(target); // target can only be last
        for (int w = ext.first(); w >= 0; w = ext.next(w + 1)) {
            used.set(w);
            if (dfs(w, len + 1)) return true;
            used.reset(w);
        }
        return false;
    }
};

struct LongestPathSearch {
    const Graph& g;
    int best = 0;
    VertexSet used;

    explicit LongestPathSearch(const Graph& gr) : g(gr) {}

    void dfs(int back, int len) {
        if (len > best) best = len;
        VertexSet free = g.vertices() - used;
        VertexSet r = reach_from(g, back, free);
        if (len + r.count() <= best) return;
        VertexSet ext = g.adj(back) & free;
        for (int w = ext.first(); w >= 0; w = ext.next(w + 1)) {
            used.set(w);
            dfs(w, len + 1);
            used.reset(w);
        }
    }
};

struct LegsSearch {
    const Graph& g;
    int branch;
    std::vector<std::vector<int>> legs;

    LegsSearch(const Graph& gr, int b) : g(gr), branch(b) {}

    bool solve(VertexSet uncovered, int min_attach) {
        if (uncovered.empty()) return true;
        VertexSet attach = g.adj(branch) & uncovered & ids_at_least(g.n(), min_attach);
        if (attach.empty()) return false;
        if (!uncovered.is_subset_of(reachable_within(g, attach, uncovered))) return false;
        for (int a = attach.first(); a >= 0; a = attach.next(a + 1)) {
            std::vector<int> leg{a};
            VertexSet rest = uncovered;
            rest.reset(a);
            if (grow(leg, rest, a)) return true;
        }
        return false;
    }

    // Extend the current leg as far as the search wants, then close it and
    // recurse on the remaining targets with a strictly larger attach id.
    bool grow(std::vector<int>& leg, VertexSet uncovered, int a) {
        VertexSet ext = g.adj(leg.back()) & uncovered;
        for (int w = ext.first(); w >= 0; w = ext.next(w + 1)) {
            leg.push_back(w);
            VertexSet rest = uncovered;
            rest.reset(w);
            if (grow(leg, rest, a)) return true;
            leg.pop_back();
        }
        legs.push_back(leg);
        if (solve(uncovered, a + 1)) return true;
        legs.pop_back();
        return false;
    }
};

} // namespace

std::optional<MarkedCycle> best_cycle(const Graph& g, const VertexSet& marks,
                                      const SearchLimits& lim) {
    check_cap("best_cycle", g.n(), lim.cycle_cap);
    VertexSet mk = marks & g.vertices();
    CycleValueSearch value(g, mk);
    value.run();
    if (value.best_len < 3) return std::nullopt;
    CycleRebuild rebuild(g, mk, value.best_len, value.best_marks);
    for (int m = 0; m + value.best_len <= g.n(); ++m) {
        if (auto seq = rebuild.build_from(m))
            return MarkedCycle{canonical_cycle(*seq), value.best_marks};
    }
    throw std::logic_error("best_cycle: optimal value had no witness");
}

int longest_cycle_length(const Graph& g, const SearchLimits& lim) {
    check_cap("longest_cycle_length", g.n(), lim.cycle_cap);
    VertexSet none;
    CycleValueSearch value(g, none);
    value.run();
    return value.best_len;
}

std::optional<std::vector<int>> cycle_through(const Graph& g, const VertexSet& required,
                                              const VertexSet& allowed,
                                              const SearchLimits& lim) {
    check_cap("cycle_through", g.n(), lim.cycle_cap);
    if (required.empty()) throw std::invalid_argument("cycle_through: empty required set");
    if (!allowed.is_subset_of(g.vertices()))
        throw std::invalid_argument("cycle_through: allowed set out of range");
    if (!required.is_subset_of(allowed))
        throw std::invalid_argument("cycle_through: required set not inside allowed set");
    if (allowed.count() < 3) return std::nullopt;
    if (cycle_separator_blocks(g, required, allowed)) return std::nullopt;
    CycleThroughSearch search(g, required, allowed);
    return search.run();
}

std::optional<std::vector<int>> covering_path_from(const Graph& g, int start,
                                                   const VertexSet& required,
                                                   const SearchLimits& lim) {
    check_cap("covering_path_from", g.n(), lim.cycle_cap);
    if (start < 0 || start >= g.n())
        throw std::invalid_argument("covering_path_from: start out of range");
    if (!required.is_subset_of(g.vertices()))
        throw std::invalid_argument("covering_path_from: required set out of range");
    VertexSet goal = required | VertexSet::single(start);
    if (path_separator_blocks(g, goal)) return std::nullopt;
    CoveringPathSearch search(g, goal);
    return search.run(start);
}

bool ham_path_between(const Graph& g, int u, int v, const SearchLimits& lim) {
    check_cap("ham_path_between", g.n(), lim.cycle_cap);
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n() || u == v)
        throw std::invalid_argument("ham_path_between: invalid endpoints");
    HamPathSearch search(g, v);
    search.used = VertexSet::single(u);
    return search.dfs(u, 1);
}

int longest_path_order(const Graph& g, const SearchLimits& lim) {
    check_cap("longest_path_order", g.n(), lim.cycle_cap);
    LongestPathSearch search(g);
    for (int s = 0; s < g.n() && search.best < g.n(); ++s) {
        search.used = VertexSet::single(s);
        search.dfs(s, 1);
    }
    return search.best;
}

std::optional<std::vector<std::vector<int>>> legs_cover(const Graph& g, int branch,
                                                        const VertexSet& targets,
                                                        const SearchLimits& lim) {
    check_cap("legs_cover", g.n(), lim.cycle_cap);
    if (branch < 0 || branch >= g.n())
        throw std::invalid_argument("legs_cover: branch out of range");
    if (targets.test(branch)) throw std::invalid_argument("legs_cover: branch inside targets");
    if (!targets.is_subset_of(g.vertices()))
        throw std::invalid_argument("legs_cover: targets out of range");
    LegsSearch search(g, branch);
    if (!search.solve(targets, 0)) return std::nullopt;
    return search.legs;
}

} // namespace jfish
