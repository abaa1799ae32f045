#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace jfish {

// What a run was asked to do; echoed verbatim into its report so a report
// alone is enough to rerun the experiment.
struct ExperimentSpec {
    std::string id;
    int n_lo = 13;
    int n_hi = 15;
    long long samples = 10000; // ignored when exhaustive
    uint64_t seed = 1;
    int threads = 1;
    bool exhaustive = false; // every labeled graph with n_lo <= n <= n_hi
    int cmax = 14;           // spacing sweep ceiling
};

struct Violation {
    long long index = -1; // instance index within the run
    std::string graph6;   // replay key; empty for non-graph configs
    std::string check;
    std::string detail;
};

// Instance accounting: generated counts every instance drawn or enumerated,
// eligible the ones passing the experiment's hypothesis filter, tested the
// conclusion evaluations, skipped the instances dropped by a search cap.
// Identical inputs give byte-identical reports apart from wall_ms, whatever
// the thread count.
struct VerifyReport {
    std::string schema = "jfish-report-v1";
    ExperimentSpec spec;
    std::string filter; // hypothesis side of the statement under test
    long long generated = 0;
    long long eligible = 0;
    long long tested = 0;
    long long skipped = 0;
    std::map<std::string, long long> tally;
    std::vector<Violation> violations;
    long long wall_ms = 0;

    bool ok() const { return violations.empty(); }
};

// Sampled runs draw instance i from a counter-mode stream keyed by
// (spec.seed, i): G(n, p) at p = 0.35 / 0.45 / 0.55 plus the planted
// three-blob model, n uniform in [n_lo, n_hi]. Exhaustive runs enumerate
// every labeled graph instead. Theorem conclusions are asserted at n >= 13
// (the stated range); smaller failures land in the tally, not in violations.

// 2-connected and 3 sigma2 >= 2n-3 force a spanning jellyfish.
VerifyReport verify_main_theorem(const ExperimentSpec& spec);

// connected and 3 sigma2 >= 2n-3 force a spanning broom.
VerifyReport verify_broom_theorem(const ExperimentSpec& spec);

// Two classical baselines, meant for exhaustive small-n runs: every
// 2-connected graph has a cycle of length at least min(sigma2, n), and
// sigma2 >= n+1 forces hamiltonian-connectedness.
VerifyReport verify_linial_and_ore(const ExperimentSpec& spec);

// A 2-connected nonhamiltonian graph with sigma2 exactly n-1 has odd order
// and contains K_{(n-1)/2,(n+1)/2}.
VerifyReport verify_tight_nonhamiltonian(const ExperimentSpec& spec);

// Exhaustive ring and line spacing sweeps up to spec.cmax (ring) and the
// same bound on line length, t in {2, 3}.
VerifyReport verify_spacing_bounds(const ExperimentSpec& spec);

// Cycle-neighborhood machinery on a mixed instance stream: the three
// conclusions of the hopping lemma where its hypotheses hold, endpoint-swap
// invariance of the limit chains, and height reduction of every enumerated
// hopping path. Tallies m_checked, swaps_done, reductions_done.
VerifyReport verify_hopping_suite(const ExperimentSpec& spec);

// Re-derives every violation from its replay key; true when each one still
// reproduces. Reports with no violations replay trivially.
bool replay_violations(const VerifyReport& report);

} // namespace jfish
