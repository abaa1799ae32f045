#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jfish/degree.hpp"
#include "jfish/experiments.hpp"
#include "jfish/families.hpp"
#include "jfish/finders.hpp"
#include "jfish/graph_io.hpp"
#include "jfish/hopping.hpp"
#include "jfish/json_io.hpp"

namespace {

using namespace jfish;

std::string slurp(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

GraphFormat format_from(const std::string& name) {
    if (name == "auto") return GraphFormat::Auto;
    if (name == "graph6") return GraphFormat::Graph6;
    if (name == "edges") return GraphFormat::EdgeList;
    throw std::runtime_error("unknown input format " + name);
}

Graph load_graph(const std::string& path, const std::string& fmt) {
    return parse_graph(slurp(path), format_from(fmt));
}

std::vector<int> parse_ints(const std::string& s) {
    std::string t = s;
    for (char& ch : t)
        if (ch == ',') ch = ' ';
    std::istringstream is(t);
    std::vector<int> out;
    for (int x; is >> x;) out.push_back(x);
    if (out.empty()) throw std::runtime_error("expected a vertex list, got \"" + s + "\"");
    return out;
}

std::string list(const std::vector<int>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(xs[i]);
    }
    return s + "]";
}

std::string list(const VertexSet& vs) {
    std::vector<int> xs;
    for (int v = vs.next(0); v >= 0; v = vs.next(v + 1)) xs.push_back(v);
    return list(xs);
}

int run_check(const std::string& input, const std::string& fmt, bool json) {
    Graph g = load_graph(input, fmt);
    DegreeProfile prof = degree_profile(g);
    ConditionCheck cond = check_conditions(g);
    if (json) {
        std::cout << summary_json(g, prof, cond) << "\n";
        return 0;
    }
    std::cout << "n=" << g.n() << " edges=" << g.edge_count() << " graph6=" << encode_graph6(g)
              << "\n";
    std::cout << "degrees=" << list(prof.degrees) << " delta=" << prof.delta << "\n";
    if (prof.sigma2)
        std::cout << "sigma2=" << *prof.sigma2 << " witness=(" << prof.sigma2_witness.first
                  << "," << prof.sigma2_witness.second << ")\n";
    else
        std::cout << "sigma2=inf (no nonadjacent pair)\n";
    std::cout << "low_set=" << list(prof.low_set) << "\n";
    std::cout << "connectivity=" << cond.connectivity << " ore_main="
              << (cond.ore_main ? "yes" : "no") << " dirac_cor=" << (cond.dirac_cor ? "yes" : "no")
              << "\n";
    return 0;
}

int run_find(const std::string& what, const std::string& input, const std::string& fmt,
             bool json) {
    Graph g = load_graph(input, fmt);
    if (what == "jellyfish") {
        auto c = find_spanning_jellyfish(g);
        if (!c) {
            std::cout << "no spanning jellyfish\n";
            return 1;
        }
        if (json)
            std::cout << to_json(*c) << "\n";
        else
            std::cout << "jellyfish cycle=" << list(c->cycle.vertices) << " center=" << c->center
                      << " tentacles=" << list(c->tentacles) << "\n";
        return 0;
    }
    if (what == "broom") {
        auto c = find_spanning_broom(g);
        if (!c) {
            std::cout << "no spanning broom\n";
            return 1;
        }
        if (json)
            std::cout << to_json(*c) << "\n";
        else
            std::cout << "broom path=" << list(c->path) << " leaves=" << list(c->leaves) << "\n";
        return 0;
    }
    if (what == "spider") {
        auto c = find_spanning_spider(g);
        if (!c) {
            std::cout << "no spanning spider\n";
            return 1;
        }
        if (json) {
            std::cout << to_json(*c) << "\n";
        } else {
            std::cout << "spider edges=";
            for (auto [u, v] : c->edges) std::cout << " " << u << "-" << v;
            if (c->branch) std::cout << " branch=" << *c->branch;
            std::cout << "\n";
        }
        return 0;
    }
    if (what == "octopus") {
        auto c = find_spanning_octopus(g);
        if (!c) {
            std::cout << "no spanning octopus\n";
            return 1;
        }
        if (json) {
            std::cout << to_json(*c) << "\n";
        } else {
            std::cout << "octopus cycle=" << list(c->cycle.vertices) << " branch=" << c->branch
                      << " legs=";
            for (const auto& leg : c->legs) std::cout << list(leg);
            std::cout << "\n";
        }
        return 0;
    }
    if (what == "cycle") {
        auto c = longest_cycle(g);
        if (!c) {
            std::cout << "acyclic\n";
            return 1;
        }
        if (json)
            std::cout << to_json(*c) << "\n";
        else
            std::cout << "cycle length=" << c->length() << " vertices=" << list(c->vertices)
                      << "\n";
        return 0;
    }
    throw std::runtime_error("unknown structure " + what);
}

int run_hopping(const std::string& input, const std::string& fmt, const std::string& cycle_str,
                const std::string& path_str, bool do_reduce, bool json) {
    Graph g = load_graph(input, fmt);
    std::vector<int> cyc;
    if (cycle_str.empty()) {
        DegreeProfile prof = degree_profile(g);
        cyc = l_maximal_cycle(g, prof.low_set).cycle.vertices;
    } else {
        cyc = parse_ints(cycle_str);
    }

    if (do_reduce) {
        if (path_str.empty()) throw std::runtime_error("--reduce needs --path");
        std::vector<int> red = reduce_hopping_path(g, cyc, parse_ints(path_str));
        if (json)
            std::cout << "{\n  \"reduced\": " << to_json(CycleCert{red}) << "\n}\n";
        else
            std::cout << "reduced path=" << list(red) << "\n";
        return 0;
    }
    if (!path_str.empty()) {
        HoppingPathCheck chk = is_hopping_path(g, cyc, parse_ints(path_str));
        if (chk.ok) {
            std::cout << "hopping path\n";
            return 0;
        }
        std::cout << "not a hopping path:";
        for (const auto& v : chk.violated) std::cout << " " << v;
        std::cout << "\n";
        return 1;
    }

    HoppingReport rep = verify_hopping_lemma(g, cyc);
    if (json) {
        std::cout << to_json(rep) << "\n";
    } else {
        std::cout << "cycle=" << list(cyc) << "\n";
        if (!rep.hypothesis_ok) std::cout << "hypotheses fail: " << rep.hypothesis_failure << "\n";
        std::cout << "limit_x=" << list(rep.state.limit_x) << " limit_y="
                  << list(rep.state.limit_y) << " iterations=" << rep.state.iterations << "\n";
        std::cout << "m1=" << (rep.m1 ? "ok" : "FAIL") << " m2=" << (rep.m2 ? "ok" : "FAIL")
                  << " m3=" << (rep.m3 ? "ok" : "FAIL") << "\n";
    }
    return rep.hypothesis_ok && rep.conclusions_ok() ? 0 : 1;
}

int run_gen(const std::string& family, const std::vector<int>& params, const std::string& out) {
    Graph g;
    if (family == "path") {
        if (params.size() != 1) throw std::runtime_error("path takes {n}");
        g = gen_path(params[0]);
    } else if (family == "cycle") {
        if (params.size() != 1) throw std::runtime_error("cycle takes {n}");
        g = gen_cycle(params[0]);
    } else if (family == "complete") {
        if (params.size() != 1) throw std::runtime_error("complete takes {n}");
        g = gen_complete(params[0]);
    } else {
        FamilySpec fs;
        fs.params = params;
        if (family == "h")
            fs.family = Family::H;
        else if (family == "two-cliques")
            fs.family = Family::TwoCliques;
        else if (family == "f")
            fs.family = Family::F;
        else if (family == "kab")
            fs.family = Family::CompleteBipartite;
        else if (family == "jellyfish")
            fs.family = Family::Jellyfish;
        else if (family == "broom")
            fs.family = Family::Broom;
        else if (family == "spider")
            fs.family = Family::Spider;
        else if (family == "octopus")
            fs.family = Family::Octopus;
        else
            throw std::runtime_error("unknown family " + family);
        g = gen_named(fs);
    }
    if (out == "graph6")
        std::cout << encode_graph6(g) << "\n";
    else if (out == "edges")
        std::cout << encode_edge_list(g);
    else if (out == "dot")
        std::cout << encode_dot(g);
    else
        throw std::runtime_error("unknown output format " + out);
    return 0;
}

void print_report_text(const VerifyReport& rep) {
    std::cout << rep.spec.id << ": generated=" << rep.generated << " eligible=" << rep.eligible
              << " tested=" << rep.tested << " skipped=" << rep.skipped
              << " violations=" << rep.violations.size() << " wall_ms=" << rep.wall_ms << "\n";
    for (const auto& [k, v] : rep.tally) std::cout << "  " << k << "=" << v << "\n";
    std::size_t shown = 0;
    for (const auto& v : rep.violations) {
        if (shown++ == 10) {
            std::cout << "  ... " << rep.violations.size() - 10 << " more\n";
            break;
        }
        std::cout << "  VIOLATION #" << v.index << " " << v.check
                  << (v.graph6.empty() ? "" : " " + v.graph6) << ": " << v.detail << "\n";
    }
}

int run_verify(const std::string& name, ExperimentSpec spec, bool json, bool replay) {
    spec.id = name;
    VerifyReport rep;
    if (name == "main")
        rep = verify_main_theorem(spec);
    else if (name == "broom")
        rep = verify_broom_theorem(spec);
    else if (name == "baselines")
        rep = verify_linial_and_ore(spec);
    else if (name == "tight")
        rep = verify_tight_nonhamiltonian(spec);
    else if (name == "spacing")
        rep = verify_spacing_bounds(spec);
    else if (name == "hopping")
        rep = verify_hopping_suite(spec);
    else
        throw std::runtime_error("unknown experiment " + name);

    if (json)
        std::cout << to_json(rep) << "\n";
    else
        print_report_text(rep);
    if (replay && !rep.violations.empty()) {
        bool again = replay_violations(rep);
        if (!json)
            std::cout << (again ? "violations reproduce from graph6" : "REPLAY MISMATCH") << "\n";
        if (!again) return 1;
    }
    return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for spanning jellyfish, brooms, spiders, and octopi"};
    app.require_subcommand(1);
    int rc = 0;

    std::string input = "-", fmt = "auto";
    bool json = false;

    auto* check = app.add_subcommand("check", "degree profile and condition summary");
    check->add_option("graph", input, "graph file, - for stdin");
    check->add_option("--format", fmt, "auto|graph6|edges");
    check->add_flag("--json", json, "emit JSON");
    check->callback([&] { rc = run_check(input, fmt, json); });

    std::string structure;
    auto* find = app.add_subcommand("find", "search for a spanning structure");
    find->add_option("structure", structure, "jellyfish|broom|spider|octopus|cycle")->required();
    find->add_option("graph", input, "graph file, - for stdin");
    find->add_option("--format", fmt, "auto|graph6|edges");
    find->add_flag("--json", json, "emit JSON");
    find->callback([&] { rc = run_find(structure, input, fmt, json); });

    std::string cycle_str, path_str;
    bool do_reduce = false;
    auto* hop = app.add_subcommand("hopping", "neighborhood chains of a cycle");
    hop->add_option("graph", input, "graph file, - for stdin");
    hop->add_option("--format", fmt, "auto|graph6|edges");
    hop->add_option("--cycle", cycle_str, "cycle as v0,v1,..; default: marked longest cycle");
    hop->add_option("--path", path_str, "check this path against the chains");
    hop->add_flag("--reduce", do_reduce, "reduce --path to first-level endpoints");
    hop->add_flag("--json", json, "emit JSON");
    hop->callback([&] { rc = run_hopping(input, fmt, cycle_str, path_str, do_reduce, json); });

    std::string family, out_fmt = "graph6";
    std::vector<int> params;
    auto* gen = app.add_subcommand("gen", "generate a named graph family");
    gen->add_option("family", family,
                    "path|cycle|complete|h|two-cliques|f|kab|jellyfish|broom|spider|octopus")
        ->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("--output", out_fmt, "graph6|edges|dot");
    gen->callback([&] { rc = run_gen(family, params, out_fmt); });

    std::string experiment;
    ExperimentSpec spec;
    spec.samples = 1000;
    bool replay = false;
    auto* verify = app.add_subcommand("verify", "run a verification experiment");
    verify->add_option("experiment", experiment, "main|broom|baselines|tight|spacing|hopping")
        ->required();
    verify->add_option("--n-lo", spec.n_lo, "smallest vertex count");
    verify->add_option("--n-hi", spec.n_hi, "largest vertex count");
    verify->add_option("--samples", spec.samples, "sampled instance count");
    verify->add_option("--seed", spec.seed, "stream seed");
    verify->add_option("--threads", spec.threads, "worker count (results are identical)");
    verify->add_flag("--exhaustive", spec.exhaustive, "every labeled graph in range");
    verify->add_option("--cmax", spec.cmax, "spacing sweep ceiling");
    verify->add_flag("--json", json, "emit the JSON report");
    verify->add_flag("--replay", replay, "re-derive violations from their replay keys");
    verify->callback([&] { rc = run_verify(experiment, spec, json, replay); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
