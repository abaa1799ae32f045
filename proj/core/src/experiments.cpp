#include "jfish/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "jfish/connectivity.hpp"
#include "jfish/degree.hpp"
#include "jfish/enumerate.hpp"
#include "jfish/families.hpp"
#include "jfish/finders.hpp"
#include "jfish/graph_io.hpp"
#include "jfish/hopping.hpp"
#include "jfish/lemmas.hpp"
#include "jfish/search.hpp"
#include "jfish/stream_rng.hpp"

namespace jfish {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxStoredViolations = 1000;

struct Shard {
    long long generated = 0;
    long long eligible = 0;
    long long tested = 0;
    long long skipped = 0;
    std::map<std::string, long long> tally;
    std::vector<Violation> violations;
};

void merge_into(Shard& into, Shard&& from) {
    into.generated += from.generated;
    into.eligible += from.eligible;
    into.tested += from.tested;
    into.skipped += from.skipped;
    for (auto& [k, v] : from.tally) into.tally[k] += v;
    into.violations.insert(into.violations.end(),
                           std::make_move_iterator(from.violations.begin()),
                           std::make_move_iterator(from.violations.end()));
}

// Deterministic index-sharded driver. Instance i depends only on (seed, i),
// batches are fixed 256-index blocks, and the merged violation list is
// re-sorted by index, so the outcome does not depend on the thread count.
Shard run_indexed(long long count, int threads,
                  const std::function<void(long long, Shard&)>& body) {
    Shard all;
    threads = std::max(1, threads);
    if (threads == 1 || count < 512) {
        for (long long i = 0; i < count; ++i) body(i, all);
    } else {
        constexpr long long kBatch = 256;
        long long batches = (count + kBatch - 1) / kBatch;
        std::vector<Shard> parts(threads);
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (long long b = w; b < batches; b += threads) {
                    long long end = std::min(count, (b + 1) * kBatch);
                    for (long long i = b * kBatch; i < end; ++i) body(i, parts[w]);
                }
            });
        for (auto& t : pool) t.join();
        for (auto& p : parts) merge_into(all, std::move(p));
    }
    std::stable_sort(all.violations.begin(), all.violations.end(),
                     [](const Violation& a, const Violation& b) { return a.index < b.index; });
    return all;
}

void check_spec(const ExperimentSpec& spec) {
    if (spec.n_lo < 0 || spec.n_hi < spec.n_lo)
        throw std::invalid_argument("experiment: bad vertex range");
    if (spec.samples < 0) throw std::invalid_argument("experiment: negative sample count");
    if (spec.threads < 0 || spec.threads > 64)
        throw std::invalid_argument("experiment: bad thread count");
}

void finish(VerifyReport& rep, Shard&& sh, Clock::time_point t0) {
    rep.generated = sh.generated;
    rep.eligible = sh.eligible;
    rep.tested = sh.tested;
    rep.skipped = sh.skipped;
    rep.tally = std::move(sh.tally);
    rep.violations = std::move(sh.violations);
    if (rep.violations.size() > kMaxStoredViolations) {
        rep.tally["violations_suppressed"] +=
            (long long)(rep.violations.size() - kMaxStoredViolations);
        rep.violations.resize(kMaxStoredViolations);
    }
    rep.wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

// Global index -> labeled graph, spanning a range of vertex counts.
struct ExhaustiveIndex {
    std::vector<std::pair<int, uint64_t>> spans;
    long long total = 0;

    ExhaustiveIndex(int lo, int hi) {
        for (int n = lo; n <= hi; ++n) {
            uint64_t c = labeled_graph_count(n);
            spans.emplace_back(n, c);
            total += (long long)c;
        }
    }
    Graph at(long long idx) const {
        for (auto [n, c] : spans) {
            if (idx < (long long)c) return graph_from_index(n, (uint64_t)idx);
            idx -= (long long)c;
        }
        throw std::out_of_range("exhaustive graph index");
    }
};

const char* model_name(long long index) {
    switch (index & 3) {
        case 0: return "model_gnp350";
        case 1: return "model_gnp450";
        case 2: return "model_gnp550";
        default: return "model_three_blob";
    }
}

Graph draw_instance(const ExperimentSpec& spec, long long index) {
    StreamRng rng(spec.seed, (uint64_t)index);
    int n = spec.n_lo + (int)rng.below((uint32_t)(spec.n_hi - spec.n_lo + 1));
    switch (index & 3) {
        case 0: return sample_gnp(n, 350, rng);
        case 1: return sample_gnp(n, 450, rng);
        case 2: return sample_gnp(n, 550, rng);
        default: return n >= 8 ? sample_three_blob(n, rng) : sample_gnp(n, 500, rng);
    }
}

bool sigma2_at_least(const DegreeProfile& prof, int bound) {
    return !prof.sigma2 || *prof.sigma2 >= bound;
}

std::string int_list(const char* key, const std::vector<int>& xs) {
    std::string s(key);
    s += "=[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(xs[i]);
    }
    s += ']';
    return s;
}

bool parse_int_list(const std::string& detail, const std::string& key, std::vector<int>& out) {
    auto p = detail.find(key + "=[");
    if (p == std::string::npos) return false;
    p += key.size() + 2;
    auto e = detail.find(']', p);
    if (e == std::string::npos) return false;
    std::istringstream is(detail.substr(p, e - p));
    out.clear();
    for (int x; is >> x;) out.push_back(x);
    return !out.empty();
}

bool parse_keyed_int(const std::string& detail, const std::string& key, int& out) {
    auto p = detail.find("; " + key + "=");
    if (p == std::string::npos) return false;
    out = std::atoi(detail.c_str() + p + key.size() + 3);
    return true;
}

} // namespace

VerifyReport verify_main_theorem(const ExperimentSpec& spec) {
    check_spec(spec);
    auto t0 = Clock::now();
    VerifyReport rep;
    rep.spec = spec;
    rep.filter = "2-connected && 3*sigma2 >= 2n-3";

    std::optional<ExhaustiveIndex> ex;
    if (spec.exhaustive) ex.emplace(spec.n_lo, spec.n_hi);
    long long count = ex ? ex->total : spec.samples;

    Shard sh = run_indexed(count, spec.threads, [&](long long i, Shard& s) {
        Graph g = ex ? ex->at(i) : draw_instance(spec, i);
        ++s.generated;
        if (!ex) ++s.tally[model_name(i)];
        try {
            DegreeProfile prof = degree_profile(g);
            int n = g.n();
            if (n < 3 || !is_k_connected(g, 2)) {
                ++s.tally["not_2_connected"];
                return;
            }
            if (!meets_ore_main(prof, n)) {
                ++s.tally["ore_main_fail"];
                return;
            }
            ++s.eligible;
            if (meets_dirac_cor(prof, n)) ++s.tally["dirac_cor_eligible"];
            bool found = find_spanning_jellyfish(g).has_value();
            ++s.tested;
            if (found) {
                ++s.tally["jellyfish_found"];
            } else if (n >= 13) {
                s.violations.push_back({i, encode_graph6(g), "spanning_jellyfish",
                                        "eligible graph without a spanning jellyfish"});
            } else {
                ++s.tally["small_n_no_jellyfish"]; // below the stated range: recorded only
            }
        } catch (const CapExceeded&) {
            ++s.skipped;
            ++s.tally["cap_skips"];
        }
    });
    finish(rep, std::move(sh), t0);
    return rep;
}

VerifyReport verify_broom_theorem(const ExperimentSpec& spec) {
    check_spec(spec);
    auto t0 = Clock::now();
    VerifyReport rep;
    rep.spec = spec;
    rep.filter = "connected && 3*sigma2 >= 2n-3";

    std::optional<ExhaustiveIndex> ex;
    if (spec.exhaustive) ex.emplace(spec.n_lo, spec.n_hi);
    long long count = ex ? ex->total : spec.samples;

    Shard sh = run_indexed(count, spec.threads, [&](long long i, Shard& s) {
        Graph g = ex ? ex->at(i) : draw_instance(spec, i);
        ++s.generated;
        if (!ex) ++s.tally[model_name(i)];
        try {
            DegreeProfile prof = degree_profile(g);
            int n = g.n();
            if (n < 1 || !is_connected(g)) {
                ++s.tally["not_connected"];
                return;
            }
            if (!meets_ore_main(prof, n)) {
                ++s.tally["ore_main_fail"];
                return;
            }
            ++s.eligible;
            bool found = find_spanning_broom(g).has_value();
            ++s.tested;
            if (found) {
                ++s.tally["broom_found"];
            } else if (n >= 13) {
                s.violations.push_back({i, encode_graph6(g), "spanning_broom",
                                        "eligible graph without a spanning broom"});
            } else {
                ++s.tally["small_n_no_broom"];
            }
        } catch (const CapExceeded&) {
            ++s.skipped;
            ++s.tally["cap_skips"];
        }
    });
    finish(rep, std::move(sh), t0);
    return rep;
}

VerifyReport verify_linial_and_ore(const ExperimentSpec& spec) {
    check_spec(spec);
    auto t0 = Clock::now();
    VerifyReport rep;
    rep.spec = spec;
    rep.filter = "2-connected (cycle bound) | sigma2 >= n+1 (ham-connected)";

    std::optional<ExhaustiveIndex> ex;
    if (spec.exhaustive) ex.emplace(spec.n_lo, spec.n_hi);
    long long count = ex ? ex->total : spec.samples;

    Shard sh = run_indexed(count, spec.threads, [&](long long i, Shard& s) {
        Graph g = ex ? ex->at(i) : draw_instance(spec, i);
        ++s.generated;
        try {
            DegreeProfile prof = degree_profile(g);
            int n = g.n();
            bool cyc_side = n >= 3 && is_k_connected(g, 2);
            bool ham_side = n >= 2 && sigma2_at_least(prof, n + 1);
            if (!cyc_side && !ham_side) {
                ++s.tally["filtered_out"];
                return;
            }
            ++s.eligible;
            if (cyc_side) {
                int c = longest_cycle_length(g);
                int bound = prof.sigma2 ? std::min(*prof.sigma2, n) : n;
                ++s.tested;
                if (c >= bound) {
                    ++s.tally["cycle_bound_ok"];
                } else {
                    s.violations.push_back({i, encode_graph6(g), "linial_cycle_bound",
                                            "longest cycle " + std::to_string(c) +
                                                " below bound " + std::to_string(bound)});
                }
            }
            if (ham_side) {
                ++s.tested;
                if (is_hamiltonian_connected(g)) {
                    ++s.tally["ham_connected_ok"];
                } else {
                    s.violations.push_back({i, encode_graph6(g), "ore_ham_connected",
                                            "sigma2 >= n+1 but a vertex pair has no "
                                            "hamiltonian path"});
                }
            }
        } catch (const CapExceeded&) {
            ++s.skipped;
            ++s.tally["cap_skips"];
        }
    });
    finish(rep, std::move(sh), t0);
    return rep;
}

VerifyReport verify_tight_nonhamiltonian(const ExperimentSpec& spec) {
    check_spec(spec);
    auto t0 = Clock::now();
    VerifyReport rep;
    rep.spec = spec;
    rep.filter = "2-connected && sigma2 == n-1 && nonhamiltonian";

    std::optional<ExhaustiveIndex> ex;
    if (spec.exhaustive) ex.emplace(spec.n_lo, spec.n_hi);
    long long count = ex ? ex->total : spec.samples;

    Shard sh = run_indexed(count, spec.threads, [&](long long i, Shard& s) {
        Graph g = ex ? ex->at(i) : draw_instance(spec, i);
        ++s.generated;
        try {
            DegreeProfile prof = degree_profile(g);
            int n = g.n();
            if (n < 3 || !is_k_connected(g, 2)) {
                ++s.tally["not_2_connected"];
                return;
            }
            if (!prof.sigma2 || *prof.sigma2 != n - 1) {
                ++s.tally["sigma2_off_target"];
                return;
            }
            if (longest_cycle_length(g) == n) {
                ++s.tally["hamiltonian"];
                return;
            }
            ++s.eligible;
            ++s.tested;
            if (n % 2 == 0) {
                s.violations.push_back({i, encode_graph6(g), "odd_order",
                                        "tight nonhamiltonian graph of even order"});
            } else if (!contains_complete_bipartite(g, (n - 1) / 2, (n + 1) / 2)) {
                s.violations.push_back({i, encode_graph6(g), "bipartite_subgraph",
                                        "no K_{" + std::to_string((n - 1) / 2) + "," +
                                            std::to_string((n + 1) / 2) + "} subgraph"});
            } else {
                ++s.tally["witness_found"];
            }
        } catch (const CapExceeded&) {
            ++s.skipped;
            ++s.tally["cap_skips"];
        }
    });
    finish(rep, std::move(sh), t0);
    return rep;
}

VerifyReport verify_spacing_bounds(const ExperimentSpec& spec) {
    check_spec(spec);
    auto t0 = Clock::now();
    VerifyReport rep;
    rep.spec = spec;
    rep.filter = "admissible ring/line spacing configurations";
    if (spec.cmax < 4 || spec.cmax > 20)
        throw std::invalid_argument("experiment: spacing ceiling out of range");

    Shard sh; // config sweeps are cheap enough single-threaded
    char buf[96];
    for (int c = 4; c <= spec.cmax; ++c)
        for (int q = 2; 2 * q <= c; ++q)
            for_each_cycle_spacing(c, q, [&](uint32_t a, uint32_t b) {
                ++sh.generated;
                ++sh.eligible;
                ++sh.tested;
                ++sh.tally["cycle_configs"];
                SpacingVerdict v = check_cycle_spacing(c, q, a, b);
                if (v.hypothesis_ok && v.applicable && v.conclusion_ok) return;
                std::snprintf(buf, sizeof buf, "c=%d q=%d a=0x%x b=0x%x; ", c, q, a, b);
                const char* kind = v.hypothesis_ok ? "cycle_spacing" : "cycle_spacing_enum";
                sh.violations.push_back(
                    {sh.generated - 1, "", kind, buf + describe_cycle_spacing(c, q, a, b)});
            });
    for (int q = 1; q <= spec.cmax; ++q)
        for (int t : {2, 3})
            for_each_path_spacing(q, t, [&](uint32_t a, uint32_t b) {
                ++sh.generated;
                ++sh.eligible;
                ++sh.tested;
                ++sh.tally["path_configs"];
                SpacingVerdict v = check_path_spacing(q, t, a, b);
                if (v.hypothesis_ok && v.applicable && v.conclusion_ok) return;
                if (v.hypothesis_ok && !v.applicable) return; // no clause speaks here
                std::snprintf(buf, sizeof buf, "q=%d t=%d a=0x%x b=0x%x; ", q, t, a, b);
                const char* kind = v.hypothesis_ok ? "path_spacing" : "path_spacing_enum";
                sh.violations.push_back(
                    {sh.generated - 1, "", kind, buf + describe_path_spacing(q, t, a, b)});
            });
    finish(rep, std::move(sh), t0);
    return rep;
}

namespace {

constexpr std::pair<int, int> kBipartiteMix[] = {{2, 3}, {2, 4}, {2, 5}, {3, 4},
                                                 {3, 5}, {4, 5}, {5, 6}};

bool edgeless_outside(const Graph& g, const VertexSet& cyc) {
    VertexSet out = g.vertices() - cyc;
    for (int v = out.next(0); v >= 0; v = out.next(v + 1))
        if (g.adj(v).intersects(out)) return false;
    return true;
}

int ring_dist(int i, int j, int m) {
    int d = std::abs(i - j);
    return std::min(d, m - d);
}

Graph build_chord_gadget(uint64_t seed, long long index, int& cycle_len) {
    StreamRng rng(seed, (uint64_t)index);
    int m = 5 + (int)rng.below(6);
    int k = 1 + (int)rng.below(3);
    Graph g(m + k);
    for (int j = 0; j < m; ++j) g.add_edge(j, (j + 1) % m);
    for (int j = 0; j < k; ++j) {
        int w = m + j;
        int want = m >= 6 ? 2 + (int)rng.below(2) : 2;
        std::vector<int> picked;
        for (int tries = 0; (int)picked.size() < want && tries < 40; ++tries) {
            int pos = (int)rng.below((uint32_t)m);
            bool ok = true;
            for (int p : picked)
                if (ring_dist(pos, p, m) < 2) ok = false;
            if (ok) picked.push_back(pos);
        }
        for (int p : picked) g.add_edge(w, p);
    }
    int chords = (int)rng.below(4);
    for (int t = 0; t < chords; ++t) {
        int u = (int)rng.below((uint32_t)m), v = (int)rng.below((uint32_t)m);
        if (ring_dist(u, v, m) < 2 || g.has_edge(u, v)) continue;
        g.add_edge(u, v);
    }
    cycle_len = m;
    return g;
}

void run_lemma_checks(const Graph& g, const std::vector<int>& cyc, long long i, Shard& s,
                      const SearchLimits& lim) {
    HoppingReport hr = verify_hopping_lemma(g, cyc, lim);
    std::string where = int_list("cycle", cyc);
    if (hr.hypothesis_ok) {
        ++s.tally["m_checked"];
        ++s.tested;
        if (hr.m1) {
            ++s.tally["m1_ok"];
        } else {
            s.violations.push_back({i, encode_graph6(g), "hopping_m1",
                                    where + "; consecutive limit-X pair (" +
                                        std::to_string(hr.m1_witness.first) + "," +
                                        std::to_string(hr.m1_witness.second) + ")"});
        }
        if (hr.m2) {
            ++s.tally["m2_ok"];
        } else {
            std::string w = hr.m2_overlap_witness >= 0
                                ? "; vertex " + std::to_string(hr.m2_overlap_witness) +
                                      " in both limit chains"
                                : "; edge (" + std::to_string(hr.m2_edge_witness.first) + "," +
                                      std::to_string(hr.m2_edge_witness.second) +
                                      ") leaves limit X";
            s.violations.push_back({i, encode_graph6(g), "hopping_m2", where + w});
        }
        if (hr.m3) {
            ++s.tally["m3_ok"];
        } else {
            s.violations.push_back({i, encode_graph6(g), "hopping_m3",
                                    where + "; adjacent limit-Y pair (" +
                                        std::to_string(hr.m3_witness.first) + "," +
                                        std::to_string(hr.m3_witness.second) + ")"});
        }
    } else {
        ++s.tally["hypothesis_failed"];
    }

    if ((int)cyc.size() > 9) return;
    VertexSet x1 = hr.state.x_at(1);
    int l = (int)cyc.size();
    for (int j = 0; j < l; ++j)
        if (x1.test(cyc[j]) && x1.test(cyc[(j + 1) % l])) {
            ++s.tally["x1_consecutive"];
            return;
        }
    auto paths = enumerate_hopping_paths(g, hr.state, SearchLimits{lim.cycle_cap, 9});
    if (paths.empty()) {
        ++s.tally["no_hopping_path"];
        return;
    }
    s.tally["hopping_paths_found"] += (long long)paths.size();
    int budget = 50;
    for (const auto& p : paths) {
        int h = std::max(hr.state.height_x[p.front()], hr.state.height_x[p.back()]);
        if (h <= 1) {
            ++s.tally["already_reduced"];
            continue;
        }
        if (budget-- <= 0) break;
        std::string what = where + "; " + int_list("path", p);
        try {
            std::vector<int> red = reduce_hopping_path(g, cyc, p);
            ++s.tested;
            if (x1.test(red.front()) && x1.test(red.back())) {
                ++s.tally["reductions_done"];
            } else {
                s.violations.push_back({i, encode_graph6(g), "reduce_endpoints",
                                        what + "; endpoints left above level 1"});
            }
        } catch (const std::exception& e) {
            s.violations.push_back(
                {i, encode_graph6(g), "reduce_invariant", what + "; " + e.what()});
        }
    }
}

void run_swaps(const Graph& g, const MarkedCycle& lm, const DegreeProfile& prof, long long i,
               Shard& s) {
    const std::vector<int>& cyc = lm.cycle.vertices;
    VertexSet cset = lm.cycle.vertex_set();
    VertexSet off = g.vertices() - cset;
    if (off.empty()) return;
    if (g.n() < 3 || !is_k_connected(g, 2) || !meets_ore_main(prof, g.n()) ||
        !edgeless_outside(g, cset)) {
        ++s.tally["swap_ambient_fail"];
        return;
    }
    HoppingState st = compute_xy(g, cyc);
    int budget = 8;
    for (int u = off.next(0); u >= 0 && budget > 0; u = off.next(u + 1)) {
        VertexSet r = swap_set(g, cyc, u) - prof.low_set;
        for (int v = r.next(0); v >= 0 && budget > 0; v = r.next(v + 1)) {
            CycleCert c2 = swap_cycle(g, cyc, v, u);
            if (!edgeless_outside(g, c2.vertex_set())) {
                ++s.tally["swap_hypothesis_failed"];
                continue;
            }
            --budget;
            HoppingState st2 = compute_xy(g, c2.vertices);
            ++s.tally["swaps_done"];
            ++s.tested;
            if (st.limit_x == st2.limit_x && st.limit_y == st2.limit_y) {
                ++s.tally["swap_xy_ok"];
            } else {
                s.violations.push_back({i, encode_graph6(g), "swap_xy",
                                        int_list("cycle", cyc) + "; u=" + std::to_string(u) +
                                            "; v=" + std::to_string(v) +
                                            "; limit chains changed under swap"});
            }
        }
    }
}

} // namespace

VerifyReport verify_hopping_suite(const ExperimentSpec& spec) {
    check_spec(spec);
    auto t0 = Clock::now();
    VerifyReport rep;
    rep.spec = spec;
    rep.filter = "per-branch ambient conditions; see tally";

    SearchLimits lim;
    Shard sh = run_indexed(spec.samples, spec.threads, [&](long long i, Shard& s) {
        ++s.generated;
        try {
            switch (i % 3) {
                case 0: {
                    auto [a, b] = kBipartiteMix[(i / 3) % 7];
                    Graph g = gen_complete_bipartite(a, b);
                    ++s.tally["branch_bipartite"];
                    DegreeProfile prof = degree_profile(g);
                    MarkedCycle lm = l_maximal_cycle(g, prof.low_set, lim);
                    ++s.eligible;
                    run_lemma_checks(g, lm.cycle.vertices, i, s, lim);
                    run_swaps(g, lm, prof, i, s);
                    break;
                }
                case 1: {
                    int m = 0;
                    Graph g = build_chord_gadget(spec.seed, i, m);
                    ++s.tally["branch_gadget"];
                    DegreeProfile prof = degree_profile(g);
                    std::vector<int> cyc(m);
                    for (int j = 0; j < m; ++j) cyc[j] = j;
                    ++s.eligible;
                    run_lemma_checks(g, cyc, i, s, lim);
                    MarkedCycle lm = l_maximal_cycle(g, prof.low_set, lim);
                    run_swaps(g, lm, prof, i, s);
                    break;
                }
                default: {
                    StreamRng rng(spec.seed, (uint64_t)i);
                    int n = 7 + (int)rng.below(6);
                    const int ps[3] = {350, 450, 550};
                    Graph g = sample_gnp(n, ps[(i / 3) % 3], rng);
                    ++s.tally["branch_gnp"];
                    DegreeProfile prof = degree_profile(g);
                    MarkedCycle lm;
                    try {
                        lm = l_maximal_cycle(g, prof.low_set, lim);
                    } catch (const std::invalid_argument&) {
                        ++s.tally["acyclic"];
                        return;
                    }
                    ++s.eligible;
                    run_lemma_checks(g, lm.cycle.vertices, i, s, lim);
                    run_swaps(g, lm, prof, i, s);
                    break;
                }
            }
        } catch (const CapExceeded&) {
            ++s.skipped;
            ++s.tally["cap_skips"];
        }
    });
    finish(rep, std::move(sh), t0);
    return rep;
}

namespace {

bool replay_one(const Violation& vio) {
    if (vio.check == "cycle_spacing" || vio.check == "cycle_spacing_enum") {
        int c, q;
        unsigned a, b;
        if (std::sscanf(vio.detail.c_str(), "c=%d q=%d a=%x b=%x", &c, &q, &a, &b) != 4)
            return false;
        SpacingVerdict v = check_cycle_spacing(c, q, a, b);
        return !(v.hypothesis_ok && v.applicable && v.conclusion_ok);
    }
    if (vio.check == "path_spacing" || vio.check == "path_spacing_enum") {
        int q, t;
        unsigned a, b;
        if (std::sscanf(vio.detail.c_str(), "q=%d t=%d a=%x b=%x", &q, &t, &a, &b) != 4)
            return false;
        SpacingVerdict v = check_path_spacing(q, t, a, b);
        return !(v.hypothesis_ok && v.applicable && v.conclusion_ok);
    }

    Graph g = parse_graph6(vio.graph6);
    DegreeProfile prof = degree_profile(g);
    int n = g.n();
    if (vio.check == "spanning_jellyfish")
        return n >= 3 && is_k_connected(g, 2) && meets_ore_main(prof, n) &&
               !find_spanning_jellyfish(g);
    if (vio.check == "spanning_broom")
        return is_connected(g) && meets_ore_main(prof, n) && !find_spanning_broom(g);
    if (vio.check == "linial_cycle_bound") {
        if (n < 3 || !is_k_connected(g, 2)) return false;
        int bound = prof.sigma2 ? std::min(*prof.sigma2, n) : n;
        return longest_cycle_length(g) < bound;
    }
    if (vio.check == "ore_ham_connected")
        return n >= 2 && sigma2_at_least(prof, n + 1) && !is_hamiltonian_connected(g);
    if (vio.check == "odd_order" || vio.check == "bipartite_subgraph") {
        if (n < 3 || !is_k_connected(g, 2) || !prof.sigma2 || *prof.sigma2 != n - 1 ||
            longest_cycle_length(g) == n)
            return false;
        return vio.check == "odd_order" ? n % 2 == 0
                                        : !contains_complete_bipartite(g, (n - 1) / 2, (n + 1) / 2);
    }

    std::vector<int> cyc;
    if (!parse_int_list(vio.detail, "cycle", cyc)) return false;
    if (vio.check == "hopping_m1" || vio.check == "hopping_m2" || vio.check == "hopping_m3") {
        HoppingReport hr = verify_hopping_lemma(g, cyc);
        if (!hr.hypothesis_ok) return false;
        if (vio.check == "hopping_m1") return !hr.m1;
        if (vio.check == "hopping_m2") return !hr.m2;
        return !hr.m3;
    }
    if (vio.check == "swap_xy") {
        int u, v;
        if (!parse_keyed_int(vio.detail, "u", u) || !parse_keyed_int(vio.detail, "v", v))
            return false;
        CycleCert c2 = swap_cycle(g, cyc, v, u);
        HoppingState st = compute_xy(g, cyc), st2 = compute_xy(g, c2.vertices);
        return !(st.limit_x == st2.limit_x && st.limit_y == st2.limit_y);
    }
    if (vio.check == "reduce_endpoints" || vio.check == "reduce_invariant") {
        std::vector<int> path;
        if (!parse_int_list(vio.detail, "path", path)) return false;
        try {
            std::vector<int> red = reduce_hopping_path(g, cyc, path);
            VertexSet x1 = compute_xy(g, cyc).x_at(1);
            return !(x1.test(red.front()) && x1.test(red.back()));
        } catch (const std::exception&) {
            return true;
        }
    }
    return false;
}

} // namespace

bool replay_violations(const VerifyReport& report) {
    for (const auto& v : report.violations) {
        try {
            if (!replay_one(v)) return false;
        } catch (const std::exception&) {
            return false;
        }
    }
    return true;
}

} // namespace jfish
