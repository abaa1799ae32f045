#include "jfish/certificates.hpp"

#include <algorithm>
#include <stdexcept>

namespace jfish {

CycleCert canonical_cycle(std::vector<int> order) {
    const int len = static_cast<int>(order.size());
    if (len < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    {
        std::vector<int> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("repeated vertex in cycle");
    }
    int min_pos = 0;
    for (int i = 1; i < len; ++i)
        if (order[i] < order[min_pos]) min_pos = i;

    std::vector<int> fwd(len), rev(len);
    for (int i = 0; i < len; ++i) {
        fwd[i] = order[(min_pos + i) % len];
        rev[i] = order[(min_pos - i % len + len) % len];
    }
    return CycleCert{fwd <= rev ? std::move(fwd) : std::move(rev)};
}

BroomCert broom_from_jellyfish(const JellyfishCert& jf) {
    // Walk the cycle so it ends at the center; tentacles become the star.
    const auto& cyc = jf.cycle.vertices;
    const int len = static_cast<int>(cyc.size());
    int cpos = 0;
    while (cpos < len && cyc[cpos] != jf.center) ++cpos;
    if (cpos == len) throw std::invalid_argument("center not on cycle");
    BroomCert br;
    br.path.reserve(len);
    br.path.push_back(jf.center);
    for (int i = 1; i < len; ++i) br.path.push_back(cyc[(cpos + i) % len]);
    br.leaves = jf.tentacles;
    return br;
}

OctopusCert octopus_from_jellyfish(const JellyfishCert& jf) {
    OctopusCert oc;
    oc.cycle = jf.cycle;
    oc.branch = jf.center;
    for (int t : jf.tentacles) oc.legs.push_back({t});
    return oc;
}

SpiderCert spider_from_broom(const BroomCert& br) {
    SpiderCert sp;
    for (std::size_t i = 0; i + 1 < br.path.size(); ++i)
        sp.edges.emplace_back(br.path[i], br.path[i + 1]);
    for (int leaf : br.leaves) sp.edges.emplace_back(br.center(), leaf);
    // Degree of the center decides whether there is a branch vertex.
    int center_deg = static_cast<int>(br.leaves.size()) + (br.path.size() > 1 ? 1 : 0);
    if (center_deg >= 3) sp.branch = br.center();
    return sp;
}

SpiderCert spider_from_octopus(const OctopusCert& oc) {
    // Open the cycle at the branch: the cycle minus one branch edge becomes
    // one more leg.
    const auto& cyc = oc.cycle.vertices;
    const int len = static_cast<int>(cyc.size());
    int bpos = 0;
    while (bpos < len && cyc[bpos] != oc.branch) ++bpos;
    if (bpos == len) throw std::invalid_argument("branch not on cycle");
    SpiderCert sp;
    for (int i = 0; i + 1 < len; ++i)
        sp.edges.emplace_back(cyc[(bpos + i) % len], cyc[(bpos + i + 1) % len]);
    for (const auto& leg : oc.legs) {
        int prev = oc.branch;
        for (int v : leg) {
            sp.edges.emplace_back(prev, v);
            prev = v;
        }
    }
    int branch_deg = (len > 1 ? 1 : 0) + static_cast<int>(oc.legs.size());
    if (branch_deg >= 3) sp.branch = oc.branch;
    return sp;
}

} // namespace jfish
