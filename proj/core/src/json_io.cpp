#include "jfish/json_io.hpp"

#include <json.hpp>

#include "jfish/graph_io.hpp"

namespace jfish {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json set_array(const VertexSet& s) {
    ordered_json a = ordered_json::array();
    for (int v = s.next(0); v >= 0; v = s.next(v + 1)) a.push_back(v);
    return a;
}

ordered_json height_array(const std::vector<int>& h) {
    ordered_json a = ordered_json::array();
    for (int x : h) {
        if (x < 0)
            a.push_back(nullptr);
        else
            a.push_back(x);
    }
    return a;
}

ordered_json pair_or_null(const std::pair<int, int>& p) {
    if (p.first < 0) return nullptr;
    return ordered_json::array({p.first, p.second});
}

std::string dump(const ordered_json& j) { return j.dump(2); }

ordered_json state_json(const HoppingState& st) {
    ordered_json j;
    j["cycle"] = st.cycle;
    j["iterations"] = st.iterations;
    ordered_json xs = ordered_json::array(), ys = ordered_json::array();
    for (const auto& x : st.xs) xs.push_back(set_array(x));
    for (const auto& y : st.ys) ys.push_back(set_array(y));
    j["x"] = std::move(xs);
    j["y"] = std::move(ys);
    j["limit_x"] = set_array(st.limit_x);
    j["limit_y"] = set_array(st.limit_y);
    j["height_x"] = height_array(st.height_x);
    j["height_y"] = height_array(st.height_y);
    return j;
}

} // namespace

std::string to_json(const CycleCert& c) {
    ordered_json j;
    j["kind"] = "cycle";
    j["vertices"] = c.vertices;
    return dump(j);
}

std::string to_json(const JellyfishCert& c) {
    ordered_json j;
    j["kind"] = "jellyfish";
    j["cycle"] = c.cycle.vertices;
    j["center"] = c.center;
    j["tentacles"] = c.tentacles;
    return dump(j);
}

std::string to_json(const BroomCert& c) {
    ordered_json j;
    j["kind"] = "broom";
    j["path"] = c.path;
    j["center"] = c.center();
    j["leaves"] = c.leaves;
    return dump(j);
}

std::string to_json(const SpiderCert& c) {
    ordered_json j;
    j["kind"] = "spider";
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : c.edges) edges.push_back(ordered_json::array({u, v}));
    j["edges"] = std::move(edges);
    if (c.branch)
        j["branch"] = *c.branch;
    else
        j["branch"] = nullptr;
    return dump(j);
}

std::string to_json(const OctopusCert& c) {
    ordered_json j;
    j["kind"] = "octopus";
    j["cycle"] = c.cycle.vertices;
    j["branch"] = c.branch;
    j["legs"] = c.legs;
    return dump(j);
}

std::string to_json(const HoppingState& st) { return dump(state_json(st)); }

std::string to_json(const HoppingReport& rep) {
    ordered_json j;
    j["hypothesis_ok"] = rep.hypothesis_ok;
    if (rep.hypothesis_failure.empty())
        j["hypothesis_failure"] = nullptr;
    else
        j["hypothesis_failure"] = rep.hypothesis_failure;
    j["m1"] = rep.m1;
    j["m2"] = rep.m2;
    j["m3"] = rep.m3;
    ordered_json w;
    w["m1"] = pair_or_null(rep.m1_witness);
    w["m2_overlap"] = rep.m2_overlap_witness >= 0 ? ordered_json(rep.m2_overlap_witness)
                                                  : ordered_json(nullptr);
    w["m2_edge"] = pair_or_null(rep.m2_edge_witness);
    w["m3"] = pair_or_null(rep.m3_witness);
    j["witnesses"] = std::move(w);
    j["state"] = state_json(rep.state);
    return dump(j);
}

std::string to_json(const VerifyReport& rep) {
    ordered_json j;
    j["schema"] = rep.schema;
    j["id"] = rep.spec.id;
    ordered_json sp;
    sp["n_lo"] = rep.spec.n_lo;
    sp["n_hi"] = rep.spec.n_hi;
    sp["samples"] = rep.spec.samples;
    sp["seed"] = rep.spec.seed;
    sp["threads"] = rep.spec.threads;
    sp["exhaustive"] = rep.spec.exhaustive;
    sp["cmax"] = rep.spec.cmax;
    j["spec"] = std::move(sp);
    j["filter"] = rep.filter;
    j["generated"] = rep.generated;
    j["eligible"] = rep.eligible;
    j["tested"] = rep.tested;
    j["skipped"] = rep.skipped;
    j["tally"] = rep.tally;
    ordered_json vs = ordered_json::array();
    for (const auto& v : rep.violations) {
        ordered_json e;
        e["index"] = v.index;
        e["graph6"] = v.graph6;
        e["check"] = v.check;
        e["detail"] = v.detail;
        vs.push_back(std::move(e));
    }
    j["violations"] = std::move(vs);
    j["wall_ms"] = rep.wall_ms;
    return dump(j);
}

std::string summary_json(const Graph& g, const DegreeProfile& prof, const ConditionCheck& cond) {
    ordered_json j;
    j["n"] = g.n();
    j["edges"] = g.edge_count();
    j["graph6"] = encode_graph6(g);
    j["degrees"] = prof.degrees;
    j["delta"] = prof.delta;
    if (prof.sigma2) {
        j["sigma2"] = *prof.sigma2;
        j["sigma2_witness"] = pair_or_null(prof.sigma2_witness);
    } else {
        j["sigma2"] = nullptr;
        j["sigma2_witness"] = nullptr;
    }
    j["low_set"] = set_array(prof.low_set);
    ordered_json classes = ordered_json::array();
    for (auto c : prof.classes) {
        switch (c) {
            case VertexClass::Low: classes.push_back("low"); break;
            case VertexClass::Normal: classes.push_back("normal"); break;
            case VertexClass::High: classes.push_back("high"); break;
        }
    }
    j["classes"] = std::move(classes);
    j["high_witness"] = height_array(prof.high_witness);
    j["connectivity"] = cond.connectivity;
    j["ore_main"] = cond.ore_main;
    j["dirac_cor"] = cond.dirac_cor;
    return dump(j);
}

} // namespace jfish
