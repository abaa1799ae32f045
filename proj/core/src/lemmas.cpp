#include "jfish/lemmas.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace jfish {

namespace {

constexpr int kMaskCap = 20;

uint32_t full_mask(int n) { return n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1; }

uint32_t ring_rot1(uint32_t m, int c) {
    return ((m << 1) | (m >> (c - 1))) & full_mask(c);
}

int ring_dist(int i, int j, int c) {
    int d = i - j;
    if (d < 0) d = -d;
    return d < c - d ? d : c - d;
}

std::string mask_str(uint32_t m) {
    std::string out = "{";
    bool first = true;
    for (int v = 0; v < 32; ++v)
        if (m >> v & 1) {
            if (!first) out += ",";
            out += std::to_string(v);
            first = false;
        }
    return out + "}";
}

} // namespace

SpacingVerdict check_cycle_spacing(int c, int q, uint32_t a, uint32_t b) {
    SpacingVerdict v;
    if (c < 3 || c > kMaskCap) return v;
    if (q < 2 || 2 * q > c) return v;
    uint32_t full = full_mask(c);
    if (!a || !b || (a & ~full) || (b & ~full)) return v;
    if ((a & ring_rot1(a, c)) || (b & ring_rot1(b, c))) return v;
    if (std::popcount(a | b) < 2) return v;
    for (int i = 0; i < c; ++i) {
        if (!(a >> i & 1)) continue;
        for (int j = 0; j < c; ++j) {
            if (!(b >> j & 1) || i == j) continue;
            if (ring_dist(i, j, c) <= q) return v;
        }
    }
    v.hypothesis_ok = true;
    v.applicable = true;

    const int na = std::popcount(a), nb = std::popcount(b);
    if (a == b) {
        v.conclusion_ok = c >= (q + 1) * na;
        return v;
    }
    const int e2 = q == 2 ? 1 : 0;
    const int jab = ((a & ~b) ? 1 : 0) + ((b & ~a) ? 1 : 0);
    // doubled to keep the q = 2 half-integer terms exact
    const long long rhs2 = (long long)(4 - e2) * (na + nb) + 4 * q - 12 + 4 * jab +
                           (e2 ? 5 - 2 * jab : 0);
    // The segment-counting argument is tight on subset-shaped pairs (c=6, q=2,
    // A={0}, B={0,3} meets every hypothesis with equality end to end), so only
    // the non-strict form of this bound holds.
    bool ok = 2LL * c >= rhs2;
    if (e2 && c < na + 2 * nb + 1) ok = false;
    v.conclusion_ok = ok;
    return v;
}

std::string describe_cycle_spacing(int c, int q, uint32_t a, uint32_t b) {
    SpacingVerdict v = check_cycle_spacing(c, q, a, b);
    std::string out = "c=" + std::to_string(c) + " q=" + std::to_string(q) +
                      " A=" + mask_str(a) + " B=" + mask_str(b);
    if (!v.hypothesis_ok) return out + " (hypotheses not met)";
    const int na = std::popcount(a), nb = std::popcount(b);
    if (a == b) {
        out += " equal-sets bound: " + std::to_string(c) + " >= " + std::to_string((q + 1) * na);
    } else {
        const int e2 = q == 2 ? 1 : 0;
        const int jab = ((a & ~b) ? 1 : 0) + ((b & ~a) ? 1 : 0);
        const long long rhs2 = (long long)(4 - e2) * (na + nb) + 4 * q - 12 + 4 * jab +
                               (e2 ? 5 - 2 * jab : 0);
        out += " mixed-sets bound: 2c=" + std::to_string(2 * c) + " >= " + std::to_string(rhs2);
        if (e2)
            out += ", small-gap bound: " + std::to_string(c) +
                   " >= " + std::to_string(na + 2 * nb + 1);
    }
    out += v.conclusion_ok ? " (holds)" : " (VIOLATED)";
    return out;
}

SpacingVerdict check_path_spacing(int q, int t, uint32_t a, uint32_t b) {
    SpacingVerdict v;
    if (q < 1 || q > kMaskCap || t < 0) return v;
    uint32_t full = full_mask(q);
    if (!a || !b || (a & ~full) || (b & ~full)) return v;
    if ((a & (a << 1)) || (b & (b << 1))) return v;
    if (q >= 2 && (b >> (q - 2) & 1)) return v;
    bool crossing = false;
    for (int i = 0; i < q; ++i) {
        if (!(a >> i & 1)) continue;
        for (int j = 0; j < i; ++j) {
            if (!(b >> j & 1)) continue;
            if (i - j < t + 1) return v;
            crossing = true;
        }
    }
    v.hypothesis_ok = true;

    const int na = std::popcount(a), nb = std::popcount(b);
    if (!crossing) {
        v.applicable = true;
        v.conclusion_ok = q >= 2 * (na + nb - 1) - 1;
        return v;
    }
    if (t < 2) return v; // no clause covers a crossing with a small gap
    v.applicable = true;
    const int end_off = (a >> (q - 1) & 1) ? 0 : 1;
    const int disjoint = (a & b) ? 0 : 1;
    v.conclusion_ok = q >= 2 * na + nb + t - 4 + end_off + disjoint;
    return v;
}

std::string describe_path_spacing(int q, int t, uint32_t a, uint32_t b) {
    SpacingVerdict v = check_path_spacing(q, t, a, b);
    std::string out = "q=" + std::to_string(q) + " t=" + std::to_string(t) +
                      " A=" + mask_str(a) + " B=" + mask_str(b);
    if (!v.hypothesis_ok) return out + " (hypotheses not met)";
    if (!v.applicable) return out + " (no clause applies)";
    const int na = std::popcount(a), nb = std::popcount(b);
    bool crossing = false;
    for (int i = 0; i < q && !crossing; ++i)
        if (a >> i & 1)
            for (int j = 0; j < i; ++j)
                if (b >> j & 1) crossing = true;
    if (!crossing) {
        out += " uncrossed bound: " + std::to_string(q) +
               " >= " + std::to_string(2 * (na + nb - 1) - 1);
    } else {
        const int end_off = (a >> (q - 1) & 1) ? 0 : 1;
        const int disjoint = (a & b) ? 0 : 1;
        out += " crossed bound: " + std::to_string(q) +
               " >= " + std::to_string(2 * na + nb + t - 4 + end_off + disjoint);
    }
    out += v.conclusion_ok ? " (holds)" : " (VIOLATED)";
    return out;
}

long long for_each_cycle_spacing(int c, int q,
                                 const std::function<void(uint32_t, uint32_t)>& fn) {
    if (c < 3 || c > kMaskCap) throw std::invalid_argument("for_each_cycle_spacing: bad c");
    if (q < 2 || 2 * q > c) return 0;
    const uint32_t full = full_mask(c);
    long long count = 0;
    for (uint32_t a = 1; a <= full; ++a) {
        if (a & ring_rot1(a, c)) continue;
        // forbid every slot within ring distance 1..q of some marked slot
        uint32_t near = 0;
        for (int i = 0; i < c; ++i) {
            if (!(a >> i & 1)) continue;
            for (int d = 1; d <= q; ++d) {
                near |= uint32_t{1} << ((i + d) % c);
                near |= uint32_t{1} << ((i - d + c) % c);
            }
        }
        const uint32_t allowed = full & ~near;
        if (!allowed) continue;
        for (uint32_t b = allowed;; b = (b - 1) & allowed) {
            if (b && !(b & ring_rot1(b, c)) && std::popcount(a | b) >= 2) {
                fn(a, b);
                ++count;
            }
            if (!b) break;
        }
    }
    return count;
}

long long for_each_path_spacing(int q, int t,
                                const std::function<void(uint32_t, uint32_t)>& fn) {
    if (q < 1 || q > kMaskCap) throw std::invalid_argument("for_each_path_spacing: bad q");
    if (t < 0) throw std::invalid_argument("for_each_path_spacing: bad t");
    const uint32_t full = full_mask(q);
    long long count = 0;
    for (uint32_t a = 1; a <= full; ++a) {
        if (a & (a << 1)) continue;
        uint32_t blocked = 0;
        for (int i = 0; i < q; ++i) {
            if (!(a >> i & 1)) continue;
            for (int d = 1; d <= t && d <= i; ++d) blocked |= uint32_t{1} << (i - d);
        }
        if (q >= 2) blocked |= uint32_t{1} << (q - 2);
        const uint32_t allowed = full & ~blocked;
        if (!allowed) continue;
        for (uint32_t b = allowed;; b = (b - 1) & allowed) {
            if (b && !(b & (b << 1))) {
                fn(a, b);
                ++count;
            }
            if (!b) break;
        }
    }
    return count;
}

namespace {

uint32_t slots_to_mask(const std::vector<int>& slots, int size, const char* which) {
    uint32_t mask = 0;
    for (int s : slots) {
        if (s < 0 || s >= size)
            throw std::invalid_argument(std::string(which) + " slot " + std::to_string(s) +
                                        " out of range 0.." + std::to_string(size - 1));
        if (mask & (uint32_t{1} << s))
            throw std::invalid_argument(std::string(which) + " slot " + std::to_string(s) +
                                        " listed twice");
        mask |= uint32_t{1} << s;
    }
    return mask;
}

} // namespace

bool cycle_spacing_bound_holds(int c, int q, const std::vector<int>& a,
                               const std::vector<int>& b) {
    uint32_t am = slots_to_mask(a, c, "A");
    uint32_t bm = slots_to_mask(b, c, "B");
    SpacingVerdict v = check_cycle_spacing(c, q, am, bm);
    if (!v.hypothesis_ok)
        throw std::invalid_argument("hypotheses fail: " + describe_cycle_spacing(c, q, am, bm));
    if (!v.applicable)
        throw std::invalid_argument("no clause applies: " + describe_cycle_spacing(c, q, am, bm));
    return v.conclusion_ok;
}

bool path_spacing_bound_holds(int q, int t, const std::vector<int>& a,
                              const std::vector<int>& b) {
    uint32_t am = slots_to_mask(a, q, "A");
    uint32_t bm = slots_to_mask(b, q, "B");
    SpacingVerdict v = check_path_spacing(q, t, am, bm);
    if (!v.hypothesis_ok)
        throw std::invalid_argument("hypotheses fail: " + describe_path_spacing(q, t, am, bm));
    if (!v.applicable)
        throw std::invalid_argument("no clause applies: " + describe_path_spacing(q, t, am, bm));
    return v.conclusion_ok;
}

SpacingSweep sweep_cycle_spacing(int cmax) {
    SpacingSweep sw;
    for (int c = 4; c <= cmax; ++c)
        for (int q = 2; 2 * q <= c; ++q)
            sw.configs += for_each_cycle_spacing(c, q, [&](uint32_t a, uint32_t b) {
                SpacingVerdict v = check_cycle_spacing(c, q, a, b);
                if (v.hypothesis_ok && v.applicable && v.conclusion_ok) return;
                ++sw.violations;
                if (sw.first_violation.empty())
                    sw.first_violation = describe_cycle_spacing(c, q, a, b);
            });
    return sw;
}

SpacingSweep sweep_path_spacing(int qmax, const std::vector<int>& ts) {
    SpacingSweep sw;
    for (int q = 1; q <= qmax; ++q)
        for (int t : ts)
            sw.configs += for_each_path_spacing(q, t, [&](uint32_t a, uint32_t b) {
                SpacingVerdict v = check_path_spacing(q, t, a, b);
                if (v.hypothesis_ok && v.applicable && v.conclusion_ok) return;
                if (v.hypothesis_ok && !v.applicable) return;
                ++sw.violations;
                if (sw.first_violation.empty())
                    sw.first_violation = describe_path_spacing(q, t, a, b);
            });
    return sw;
}

} // namespace jfish
