#include <doctest.h>

#include <bit>

#include "jfish/enumerate.hpp"
#include "jfish/families.hpp"
#include "jfish/finders.hpp"
#include "jfish/validate.hpp"
#include "oracles.hpp"

using namespace jfish;

namespace {

// Independent K_{a,b} subgraph test: all disjoint side pairs by submask scan.
bool kab_by_enumeration(const Graph& g, int a, int b) {
    const int n = g.n();
    std::vector<std::uint32_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.has_edge(u, v)) adj[u] |= 1u << v;
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    for (std::uint32_t left = 0; left <= full; ++left) {
        if (std::popcount(left) != a) continue;
        std::uint32_t common = full & ~left;
        for (int u = 0; u < n && common; ++u)
            if ((left >> u) & 1) common &= adj[u];
        if (std::popcount(common) >= b) return true;
        if (left == full) break;
    }
    return false;
}

} // namespace

TEST_CASE("spanning structure finders match the oracle on every small graph") {
    for (int n = 0; n <= 6; ++n) {
        uint64_t total = labeled_graph_count(n);
        for (uint64_t idx = 0; idx < total; ++idx) {
            Graph g = graph_from_index(n, idx);
            oracle::Answers ans = oracle::all_answers(g);

            auto jf = find_spanning_jellyfish(g);
            REQUIRE(jf.has_value() == ans.jellyfish);
            if (jf) REQUIRE(validate_jellyfish(g, *jf, true));

            auto br = find_spanning_broom(g);
            REQUIRE(br.has_value() == ans.broom);
            if (br) REQUIRE(validate_broom(g, *br, true));

            auto sp = find_spanning_spider(g);
            REQUIRE(sp.has_value() == ans.spider);
            if (sp) REQUIRE(validate_spider(g, *sp, true));

            auto oc = find_spanning_octopus(g);
            REQUIRE(oc.has_value() == ans.octopus);
            if (oc) REQUIRE(validate_octopus(g, *oc, true));
        }
    }
}

TEST_CASE("spanning structure finders match the oracle on sampled order seven") {
    StreamRng rng(21, 0);
    for (int i = 0; i < 400; ++i) {
        Graph g = sample_gnp(7, 200 + 45 * (i % 12), rng);
        oracle::Answers ans = oracle::all_answers(g);
        REQUIRE(find_spanning_jellyfish(g).has_value() == ans.jellyfish);
        REQUIRE(find_spanning_broom(g).has_value() == ans.broom);
        REQUIRE(find_spanning_spider(g).has_value() == ans.spider);
        REQUIRE(find_spanning_octopus(g).has_value() == ans.octopus);
    }
}

TEST_CASE("structure hierarchy on the shape generators") {
    // jellyfish => broom => spider, jellyfish => octopus.
    Graph jf = gen_jellyfish(5, 2);
    CHECK(find_spanning_jellyfish(jf).has_value());
    CHECK(find_spanning_broom(jf).has_value());
    CHECK(find_spanning_spider(jf).has_value());
    CHECK(find_spanning_octopus(jf).has_value());

    // A 3-leg spider carries no spanning broom or jellyfish.
    Graph sp = gen_spider({2, 2, 2});
    CHECK(find_spanning_spider(sp).has_value());
    CHECK(!find_spanning_broom(sp).has_value());
    CHECK(!find_spanning_jellyfish(sp).has_value());
    CHECK(!find_spanning_octopus(sp).has_value()); // no cycle at all

    // Hamiltonian graphs: cycle counts as tentacle-free jellyfish.
    auto ham = find_spanning_jellyfish(gen_cycle(6));
    REQUIRE(ham.has_value());
    CHECK(ham->tentacles.empty());
    CHECK(ham->cycle.length() == 6);

    // Path: broom with no extra leaves.
    auto path = find_spanning_broom(gen_path(5));
    REQUIRE(path.has_value());
    CHECK(path->leaves.empty());
}

TEST_CASE("hamiltonian connectedness matches the oracle") {
    for (int n = 2; n <= 5; ++n) {
        uint64_t total = labeled_graph_count(n);
        for (uint64_t idx = 0; idx < total; ++idx) {
            Graph g = graph_from_index(n, idx);
            REQUIRE(is_hamiltonian_connected(g) == oracle::is_ham_connected(g));
        }
    }
    StreamRng rng(22, 0);
    for (int i = 0; i < 100; ++i) {
        Graph g = sample_gnp(7, 500 + 40 * (i % 8), rng);
        REQUIRE(is_hamiltonian_connected(g) == oracle::is_ham_connected(g));
    }
    CHECK(is_hamiltonian_connected(gen_complete(4)));
    CHECK(!is_hamiltonian_connected(gen_cycle(5))); // nonadjacent pairs lack ham paths
}

TEST_CASE("complete bipartite containment") {
    CHECK(contains_complete_bipartite(gen_complete_bipartite(2, 3), 2, 3));
    CHECK(contains_complete_bipartite(gen_complete_bipartite(2, 3), 3, 2));
    CHECK(!contains_complete_bipartite(gen_complete_bipartite(2, 3), 3, 3));
    CHECK(contains_complete_bipartite(gen_complete(5), 2, 3));
    CHECK(!contains_complete_bipartite(gen_cycle(8), 2, 3));
    CHECK(contains_complete_bipartite(gen_cycle(4), 2, 2));
    CHECK(contains_complete_bipartite(gen_path(2), 1, 1));

    StreamRng rng(23, 0);
    for (int i = 0; i < 250; ++i) {
        int n = 5 + i % 3;
        Graph g = sample_gnp(n, 300 + 50 * (i % 9), rng);
        for (int a = 1; a <= 3; ++a)
            for (int b = a; b <= 3; ++b)
                REQUIRE(contains_complete_bipartite(g, a, b) == kab_by_enumeration(g, a, b));
    }
}
