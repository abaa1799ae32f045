#include <doctest.h>

#include <stdexcept>

#include "jfish/lemmas.hpp"

using namespace jfish;

namespace {

uint32_t mask(std::initializer_list<int> slots) {
    uint32_t m = 0;
    for (int s : slots) m |= uint32_t{1} << s;
    return m;
}

} // namespace

TEST_CASE("ring spacing hypotheses") {
    // Consecutive pair inside a set.
    CHECK(!check_cycle_spacing(8, 2, mask({0, 1}), mask({4})).hypothesis_ok);
    // Wraparound consecutive pair.
    CHECK(!check_cycle_spacing(8, 2, mask({0, 7}), mask({4})).hypothesis_ok);
    // Cross distance 1 <= q.
    CHECK(!check_cycle_spacing(8, 2, mask({0}), mask({2})).hypothesis_ok);
    // Singleton equal sets miss the two-vertex union requirement.
    CHECK(!check_cycle_spacing(8, 2, mask({0}), mask({0})).hypothesis_ok);
    // Empty side.
    CHECK(!check_cycle_spacing(8, 2, 0, mask({0})).hypothesis_ok);
    // q above c/2.
    CHECK(!check_cycle_spacing(7, 4, mask({0}), mask({5})).hypothesis_ok);
    // Equal slots at distance zero are allowed.
    CHECK(check_cycle_spacing(8, 2, mask({0, 4}), mask({0, 4})).hypothesis_ok);
    // Distance exactly q fails, q+1 passes.
    CHECK(!check_cycle_spacing(10, 3, mask({0}), mask({3})).hypothesis_ok);
    CHECK(check_cycle_spacing(10, 3, mask({0}), mask({4})).hypothesis_ok);
}

TEST_CASE("ring spacing equal sets bound") {
    // c >= (q+1)|A| is tight for three marks on C9 at gap 3 with q = 2.
    SpacingVerdict tight = check_cycle_spacing(9, 2, mask({0, 3, 6}), mask({0, 3, 6}));
    CHECK(tight.hypothesis_ok);
    CHECK(tight.conclusion_ok);
    // The same three marks do not fit on C8.
    // (No admissible placement exists there, so tightness is the witness.)
    SpacingVerdict q3 = check_cycle_spacing(12, 3, mask({0, 4, 8}), mask({0, 4, 8}));
    CHECK(q3.hypothesis_ok);
    CHECK(q3.conclusion_ok);
}

TEST_CASE("ring spacing mixed sets boundary") {
    // Subset-shaped pair at exact equality: segments 0->3->0 on C6 are both
    // forced long, so 2c equals the bound and the check must accept.
    SpacingVerdict v = check_cycle_spacing(6, 2, mask({0}), mask({0, 3}));
    CHECK(v.hypothesis_ok);
    CHECK(v.applicable);
    CHECK(v.conclusion_ok);
    // Same shape with the roles reversed.
    SpacingVerdict w = check_cycle_spacing(6, 2, mask({0, 3}), mask({3}));
    CHECK(w.conclusion_ok);
    // And the q = 3 analogue on C8.
    SpacingVerdict q3 = check_cycle_spacing(8, 3, mask({0}), mask({0, 4}));
    CHECK(q3.hypothesis_ok);
    CHECK(q3.conclusion_ok);
    // Disjoint pair at distance exactly q+1 both ways.
    SpacingVerdict dj = check_cycle_spacing(8, 3, mask({0}), mask({4}));
    CHECK(dj.hypothesis_ok);
    CHECK(dj.conclusion_ok);

    std::string text = describe_cycle_spacing(6, 2, mask({0}), mask({0, 3}));
    CHECK(text.find("holds") != std::string::npos);
    CHECK(text.find("VIOLATED") == std::string::npos);
}

TEST_CASE("ring spacing small gap clause") {
    // q = 2 adds c >= |A| + 2|B| + 1; A = {0,6}, B = {3,9} on C12: 12 >= 7.
    SpacingVerdict v = check_cycle_spacing(12, 2, mask({0, 6}), mask({3, 9}));
    CHECK(v.hypothesis_ok);
    CHECK(v.conclusion_ok);
    std::string text = describe_cycle_spacing(12, 2, mask({0, 6}), mask({3, 9}));
    CHECK(text.find("small-gap") != std::string::npos);
    // No small-gap clause above q = 2.
    std::string q3 = describe_cycle_spacing(10, 3, mask({0}), mask({4}));
    CHECK(q3.find("small-gap") == std::string::npos);
}

TEST_CASE("line spacing hypotheses and clauses") {
    // B may not use slot q-2.
    CHECK(!check_path_spacing(6, 2, mask({0}), mask({4})).hypothesis_ok);
    // Crossing pair with gap below t+1.
    CHECK(!check_path_spacing(8, 3, mask({5}), mask({3})).hypothesis_ok);
    // No crossing when no A slot sits right of a B slot.
    SpacingVerdict nc = check_path_spacing(7, 2, mask({0, 2}), mask({4}));
    CHECK(nc.hypothesis_ok);
    CHECK(nc.conclusion_ok);

    // Crossing with t = 2: A = {6}, B = {2}, q = 7.
    SpacingVerdict cr = check_path_spacing(7, 2, mask({6}), mask({2}));
    CHECK(cr.hypothesis_ok);
    CHECK(cr.applicable);
    CHECK(cr.conclusion_ok);

    // Crossing with t = 1 is admissible but no clause speaks to it.
    SpacingVerdict t1 = check_path_spacing(7, 1, mask({4}), mask({2}));
    CHECK(t1.hypothesis_ok);
    CHECK(!t1.applicable);
    std::string text = describe_path_spacing(7, 1, mask({4}), mask({2}));
    CHECK(text.find("no clause") != std::string::npos);
}

TEST_CASE("line spacing uncrossed bound is tight") {
    SpacingVerdict v = check_path_spacing(10, 2, mask({0, 2}), mask({4, 6}));
    CHECK(v.hypothesis_ok);
    CHECK(v.applicable);
    CHECK(v.conclusion_ok); // 10 >= 2*4 - 3 = 5

    // Shared slot 2 at line length 3 sits exactly on the bound.
    SpacingVerdict tight = check_path_spacing(3, 2, mask({0, 2}), mask({2}));
    CHECK(tight.hypothesis_ok);
    CHECK(tight.applicable);
    CHECK(tight.conclusion_ok); // 3 >= 2(2+1-1) - 1 = 3
}

TEST_CASE("position list front ends") {
    CHECK(cycle_spacing_bound_holds(9, 2, {0, 3, 6}, {0, 3, 6}));
    CHECK(cycle_spacing_bound_holds(6, 2, {0}, {0, 3}));
    CHECK(path_spacing_bound_holds(7, 2, {6}, {2}));

    // Hypothesis failures surface as errors, not booleans.
    CHECK_THROWS_AS(cycle_spacing_bound_holds(8, 2, {0, 1}, {4}), std::invalid_argument);
    CHECK_THROWS_AS(cycle_spacing_bound_holds(8, 2, {0, 8}, {4}), std::invalid_argument);
    CHECK_THROWS_AS(cycle_spacing_bound_holds(8, 2, {0, 0}, {4}), std::invalid_argument);
    CHECK_THROWS_AS(path_spacing_bound_holds(6, 2, {0}, {4}), std::invalid_argument);
    CHECK_THROWS_AS(path_spacing_bound_holds(7, 1, {4}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(cycle_spacing_bound_holds(40, 2, {0}, {3}), std::invalid_argument);
}

TEST_CASE("enumeration visits every admissible pair") {
    // Count via the independent pairwise scan.
    for (int c = 4; c <= 9; ++c)
        for (int q = 2; 2 * q <= c; ++q) {
            long long direct = 0;
            const uint32_t full = (uint32_t{1} << c) - 1;
            for (uint32_t a = 1; a <= full; ++a)
                for (uint32_t b = 1; b <= full; ++b)
                    if (check_cycle_spacing(c, q, a, b).hypothesis_ok) ++direct;
            long long visited = 0;
            long long ret = for_each_cycle_spacing(c, q, [&](uint32_t a, uint32_t b) {
                CHECK(check_cycle_spacing(c, q, a, b).hypothesis_ok);
                ++visited;
            });
            CHECK(ret == visited);
            CHECK(visited == direct);
        }

    for (int q = 2; q <= 8; ++q)
        for (int t : {2, 3}) {
            long long direct = 0;
            const uint32_t full = (uint32_t{1} << q) - 1;
            for (uint32_t a = 1; a <= full; ++a)
                for (uint32_t b = 1; b <= full; ++b)
                    if (check_path_spacing(q, t, a, b).hypothesis_ok) ++direct;
            long long visited = 0;
            long long ret = for_each_path_spacing(q, t, [&](uint32_t a, uint32_t b) {
                CHECK(check_path_spacing(q, t, a, b).hypothesis_ok);
                ++visited;
            });
            CHECK(ret == visited);
            CHECK(visited == direct);
        }
}

TEST_CASE("sweeps come back clean") {
    SpacingSweep ring = sweep_cycle_spacing(9);
    CHECK(ring.violations == 0);
    CHECK(ring.first_violation.empty());
    CHECK(ring.configs == 550);

    SpacingSweep line = sweep_path_spacing(9, {2, 3});
    CHECK(line.violations == 0);

    SpacingSweep ring12 = sweep_cycle_spacing(12);
    CHECK(ring12.violations == 0);
}
