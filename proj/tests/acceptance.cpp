// Release gate. Each criterion is a self-contained end-to-end check printing
// one [PASS]/[FAIL] line with the measured numbers; the process exits 0 only
// if every criterion it ran passed. Run with no arguments for the full gate,
// or with a single criterion number (1..11) to rerun one in isolation.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include <jfish/degree.hpp>
#include <jfish/connectivity.hpp>
#include <jfish/enumerate.hpp>
#include <jfish/experiments.hpp>
#include <jfish/families.hpp>
#include <jfish/finders.hpp>
#include <jfish/hopping.hpp>
#include <jfish/validate.hpp>

#include "oracles.hpp"

namespace {

using namespace jfish;

struct Outcome {
    bool pass = false;
    std::string detail;
};

long long tally_of(const VerifyReport& r, const char* key) {
    auto it = r.tally.find(key);
    return it == r.tally.end() ? 0 : it->second;
}

std::string report_stats(const VerifyReport& r) {
    std::ostringstream os;
    os << "generated=" << r.generated << " eligible=" << r.eligible
       << " violations=" << r.violations.size() << " wall_ms=" << r.wall_ms;
    return os.str();
}

// 1. Every labeled graph on up to 7 vertices: the spanning jellyfish, broom
// and spider searches must agree with the brute-force oracles, and every
// certificate they return must validate.
Outcome criterion_finder_oracle_agreement() {
    long long checked = 0, disagreements = 0, bad_certs = 0;
    for (int n = 0; n <= 7; ++n) {
        long long count = labeled_graph_count(n);
        for (long long idx = 0; idx < count; ++idx) {
            Graph g = graph_from_index(n, idx);
            oracle::Answers want = oracle::all_answers(g);
            auto jf = find_spanning_jellyfish(g);
            auto br = find_spanning_broom(g);
            auto sp = find_spanning_spider(g);
            if (jf.has_value() != want.jellyfish || br.has_value() != want.broom ||
                sp.has_value() != want.spider)
                ++disagreements;
            if ((jf && !validate_jellyfish(g, *jf, true)) ||
                (br && !validate_broom(g, *br, true)) ||
                (sp && !validate_spider(g, *sp, true)))
                ++bad_certs;
            ++checked;
        }
    }
    Outcome out;
    out.pass = disagreements == 0 && bad_certs == 0;
    std::ostringstream os;
    os << "graphs=" << checked << " disagreements=" << disagreements
       << " invalid_certificates=" << bad_certs;
    out.detail = os.str();
    return out;
}

// 2. 10,000 seeded samples with n in [13,15]: every 2-connected graph whose
// doubled degree-sum threshold holds has a spanning jellyfish.
Outcome criterion_main_sweep() {
    ExperimentSpec spec;
    spec.id = "main-sweep";
    spec.samples = 10000;
    spec.seed = 1;
    VerifyReport r = verify_main_theorem(spec);
    Outcome out;
    out.pass = r.ok() && r.generated == 10000 && r.eligible > 0 &&
               tally_of(r, "jellyfish_found") == r.eligible;
    out.detail = report_stats(r) +
                 " jellyfish_found=" + std::to_string(tally_of(r, "jellyfish_found"));
    return out;
}

// 3. The sharpness family H(s): minimum degree s, sigma2 = 2s, degree-sum
// threshold missed by exactly one, and no spanning jellyfish.
Outcome criterion_sharpness_family() {
    Outcome out;
    out.pass = true;
    std::ostringstream os;
    for (int s = 2; s <= 4; ++s) {
        Graph g = gen_H(s);
        int n = g.n();
        DegreeProfile p = degree_profile(g);
        bool ok = n == 3 * s + 2 && p.delta == s && p.sigma2 &&
                  *p.sigma2 == 2 * s && 3 * *p.sigma2 == 2 * n - 4 &&
                  !find_spanning_jellyfish(g).has_value();
        if (!ok) out.pass = false;
        os << (s > 2 ? " " : "") << "H(" << s << "):" << (ok ? "ok" : "BAD");
    }
    out.detail = os.str();
    return out;
}

// 4. Two 7-cliques sharing one vertex: sigma2 = n-2 clears the threshold but
// connectivity drops to 1, the jellyfish disappears and the broom survives.
Outcome criterion_two_cliques() {
    Graph g = gen_two_cliques(14);
    DegreeProfile p = degree_profile(g);
    bool sigma_ok = p.sigma2 && *p.sigma2 == 12 && *p.sigma2 == g.n() - 2;
    bool conn_ok = is_k_connected(g, 1) && !is_k_connected(g, 2);
    bool no_jf = !find_spanning_jellyfish(g).has_value();
    auto br = find_spanning_broom(g);
    bool broom_ok = br && validate_broom(g, *br, true);
    Outcome out;
    out.pass = sigma_ok && conn_ok && no_jf && broom_ok;
    std::ostringstream os;
    os << "sigma2=" << (p.sigma2 ? *p.sigma2 : -1) << " cut_vertex=" << (conn_ok ? 1 : 0)
       << " jellyfish=" << (no_jf ? 0 : 1) << " broom=" << (broom_ok ? 1 : 0);
    out.detail = os.str();
    return out;
}

// 5. 5,000 seeded samples: every connected graph over the same degree-sum
// threshold has a spanning broom.
Outcome criterion_broom_sweep() {
    ExperimentSpec spec;
    spec.id = "broom-sweep";
    spec.samples = 5000;
    spec.seed = 1;
    VerifyReport r = verify_broom_theorem(spec);
    Outcome out;
    out.pass = r.ok() && r.generated == 5000 && r.eligible > 0 &&
               tally_of(r, "broom_found") == r.eligible;
    out.detail = report_stats(r) +
                 " broom_found=" + std::to_string(tally_of(r, "broom_found"));
    return out;
}

// 6. Exhaustive n <= 7 baselines: 2-connected graphs carry a cycle of length
// at least min(sigma2, n), and sigma2 >= n+1 forces hamiltonian-connectedness.
Outcome criterion_classical_baselines() {
    ExperimentSpec spec;
    spec.id = "baselines";
    spec.n_lo = 1;
    spec.n_hi = 7;
    spec.exhaustive = true;
    VerifyReport r = verify_linial_and_ore(spec);
    Outcome out;
    out.pass = r.ok() && tally_of(r, "cycle_bound_ok") > 0 &&
               tally_of(r, "ham_connected_ok") > 0;
    out.detail = report_stats(r) +
                 " cycle_bound_ok=" + std::to_string(tally_of(r, "cycle_bound_ok")) +
                 " ham_connected_ok=" + std::to_string(tally_of(r, "ham_connected_ok"));
    return out;
}

// 7. Exhaustive n <= 7: a 2-connected nonhamiltonian graph with sigma2 = n-1
// has odd order and contains the balanced complete bipartite witness. The
// n = 5 census is rerun here through the oracles: every eligible graph
// contains K_{2,3} and at least one eligible graph is K_{2,3} itself.
Outcome criterion_tight_census() {
    ExperimentSpec spec;
    spec.id = "tight-census";
    spec.n_lo = 1;
    spec.n_hi = 7;
    spec.exhaustive = true;
    VerifyReport r = verify_tight_nonhamiltonian(spec);

    long long eligible5 = 0, contained5 = 0, exact_k23 = 0;
    for (long long idx = 0; idx < labeled_graph_count(5); ++idx) {
        Graph g = graph_from_index(5, idx);
        DegreeProfile p = degree_profile(g);
        if (!p.sigma2 || *p.sigma2 != 4) continue;
        if (!oracle::k_connected_by_deletion(g, 2)) continue;
        if (oracle::is_hamiltonian(g)) continue;
        ++eligible5;
        if (contains_complete_bipartite(g, 2, 3)) ++contained5;
        if (g.edge_count() == 6) ++exact_k23;
    }

    Outcome out;
    out.pass = r.ok() && tally_of(r, "witness_found") > 0 && eligible5 > 0 &&
               contained5 == eligible5 && exact_k23 > 0;
    std::ostringstream os;
    os << report_stats(r) << " witness_found=" << tally_of(r, "witness_found")
       << " n5_eligible=" << eligible5 << " n5_k23_contained=" << contained5
       << " n5_exact_k23=" << exact_k23;
    out.detail = os.str();
    return out;
}

// 8. Exhaustive ring and line spacing sweeps up to length 14, t in {2,3}.
// The config counts are frozen so a silently shrunken enumeration fails.
Outcome criterion_spacing_sweeps() {
    ExperimentSpec spec;
    spec.id = "spacing";
    spec.cmax = 14;
    VerifyReport r = verify_spacing_bounds(spec);
    long long cycle_configs = tally_of(r, "cycle_configs");
    long long path_configs = tally_of(r, "path_configs");
    Outcome out;
    out.pass = r.ok() && cycle_configs == 27463 && path_configs == 162380;
    std::ostringstream os;
    os << "cycle_configs=" << cycle_configs << " path_configs=" << path_configs
       << " violations=" << r.violations.size() << " wall_ms=" << r.wall_ms;
    out.detail = os.str();
    return out;
}

VerifyReport hopping_gate_report() {
    ExperimentSpec spec;
    spec.id = "hopping-gate";
    spec.samples = 1600;
    spec.seed = 1;
    return verify_hopping_suite(spec);
}

// 9. Cycle-neighborhood chains: at least 1,000 instances meeting the good-path
// hypothesis with all three structural conclusions intact, every enumerated
// hopping path reduced to a verified height-1 path, and the K_{2,3} limit
// chains reproduced exactly.
Outcome criterion_hopping_chains() {
    VerifyReport r = hopping_gate_report();

    Graph k23 = gen_complete_bipartite(2, 3);
    MarkedCycle mc = l_maximal_cycle(k23, VertexSet{});
    HoppingState st = compute_xy(k23, mc.cycle.vertices);
    VertexSet want_x, want_y;
    want_x.set(0);
    want_x.set(1);
    want_y.set(2);
    want_y.set(3);
    want_y.set(4);
    bool fixture_ok = st.limit_x == want_x && st.limit_y == want_y;

    Outcome out;
    out.pass = r.ok() && tally_of(r, "m_checked") >= 1000 &&
               tally_of(r, "reductions_done") >= 25 && fixture_ok;
    std::ostringstream os;
    os << report_stats(r) << " m_checked=" << tally_of(r, "m_checked")
       << " reductions_done=" << tally_of(r, "reductions_done")
       << " k23_fixture=" << (fixture_ok ? "ok" : "BAD");
    out.detail = os.str();
    return out;
}

// 10. Endpoint swaps: at least 200 instances where swapping the cycle leaves
// both limit chains unchanged.
Outcome criterion_swap_invariance() {
    VerifyReport r = hopping_gate_report();
    Outcome out;
    out.pass = r.ok() && tally_of(r, "swaps_done") >= 200 &&
               tally_of(r, "swap_xy_ok") == tally_of(r, "swaps_done");
    std::ostringstream os;
    os << report_stats(r) << " swaps_done=" << tally_of(r, "swaps_done")
       << " swap_xy_ok=" << tally_of(r, "swap_xy_ok");
    out.detail = os.str();
    return out;
}

// 11. The glued-clique family F: F(3,3,3,3) has no spanning jellyfish and
// F(4,3,3,4) has no spanning octopus.
Outcome criterion_glued_cliques() {
    Graph f1 = gen_F(3, 3, 3, 3);
    Graph f2 = gen_F(4, 3, 3, 4);
    bool no_jf = !find_spanning_jellyfish(f1).has_value();
    bool no_oc = !find_spanning_octopus(f2).has_value();
    Outcome out;
    out.pass = no_jf && no_oc;
    std::ostringstream os;
    os << "F(3,3,3,3): n=" << f1.n() << " jellyfish=" << (no_jf ? 0 : 1)
       << "  F(4,3,3,4): n=" << f2.n() << " octopus=" << (no_oc ? 0 : 1);
    out.detail = os.str();
    return out;
}

struct Criterion {
    const char* name;
    Outcome (*run)();
};

constexpr Criterion kCriteria[] = {
    {"finders agree with oracles on all graphs, n <= 7", criterion_finder_oracle_agreement},
    {"seeded main sweep finds a spanning jellyfish every time", criterion_main_sweep},
    {"sharpness family H(s) sits one below the threshold, no jellyfish", criterion_sharpness_family},
    {"two glued 7-cliques: broom but no jellyfish", criterion_two_cliques},
    {"seeded broom sweep finds a spanning broom every time", criterion_broom_sweep},
    {"cycle-length bound and hamiltonian-connectedness, exhaustive n <= 7", criterion_classical_baselines},
    {"tight nonhamiltonian census: odd order and bipartite witness", criterion_tight_census},
    {"ring and line spacing bounds, exhaustive to length 14", criterion_spacing_sweeps},
    {"hopping chains: conclusions, reductions, K_{2,3} fixture", criterion_hopping_chains},
    {"endpoint swaps preserve both limit chains", criterion_swap_invariance},
    {"glued-clique family F: no jellyfish, no octopus", criterion_glued_cliques},
};

constexpr int kCount = static_cast<int>(sizeof(kCriteria) / sizeof(kCriteria[0]));

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 2) {
        std::fprintf(stderr, "usage: %s [criterion 1..%d]\n", argv[0], kCount);
        return 2;
    }
    if (argc == 2) {
        char* end = nullptr;
        only = static_cast<int>(std::strtol(argv[1], &end, 10));
        if (*argv[1] == '\0' || *end != '\0' || only < 1 || only > kCount) {
            std::fprintf(stderr, "usage: %s [criterion 1..%d]\n", argv[0], kCount);
            return 2;
        }
    }

    int ran = 0, passed = 0;
    for (int i = 0; i < kCount; ++i) {
        if (only != 0 && only != i + 1) continue;
        Outcome out = kCriteria[i].run();
        ++ran;
        if (out.pass) ++passed;
        std::printf("[%s] criterion %d: %s (%s)\n", out.pass ? "PASS" : "FAIL",
                    i + 1, kCriteria[i].name, out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %d/%d passed\n", passed, ran);
    return passed == ran ? 0 : 1;
}
