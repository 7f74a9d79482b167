#include "bramsey/bramsey.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "bramsey/constructions.hpp"
#include "bramsey/json_io.hpp"
#include "bramsey/report.hpp"

using namespace bramsey;

struct bram_graph {
    ColoredBipartiteGraph g;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// exceptions never cross the C boundary
template <typename F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        t_last_error = e.what();
        return BRAM_EINVAL;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return BRAM_EINTERNAL;
    }
}

std::vector<int> parse_int_csv(const char* csv) {
    std::vector<int> out;
    if (!csv || !*csv) return out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw Error("empty entry in list '" + std::string(csv) + "'");
        out.push_back(std::stoi(tok));
    }
    return out;
}

GraphView view_for_colors(const ColoredBipartiteGraph& g, const char* colors_csv) {
    auto cs = parse_int_csv(colors_csv);
    if (cs.empty()) return GraphView::whole(g);
    return GraphView::colors(g, cs);
}

Budget make_budget(long long max_nodes, double max_ms) {
    Budget b;
    b.max_nodes = max_nodes;
    b.max_ms = max_ms;
    return b;
}

} // namespace

extern "C" {

const char* bram_version(void) { return "1.0.0"; }

const char* bram_last_error(void) { return t_last_error.c_str(); }

void bram_string_free(char* s) { std::free(s); }

void bram_graph_free(bram_graph* g) { delete g; }

int bram_graph_from_text(const char* text, bram_graph** out) {
    return guarded([&] {
        if (!text || !out) throw Error("null argument");
        *out = new bram_graph{ColoredBipartiteGraph::from_text(text)};
        return BRAM_OK;
    });
}

int bram_graph_from_file(const char* path, bram_graph** out) {
    return guarded([&] {
        if (!path || !out) throw Error("null argument");
        *out = new bram_graph{ColoredBipartiteGraph::load(path)};
        return BRAM_OK;
    });
}

int bram_graph_to_text(const bram_graph* g, char** out_text) {
    return guarded([&] {
        if (!g || !out_text) throw Error("null argument");
        *out_text = dup_string(g->g.to_text());
        return BRAM_OK;
    });
}

int bram_graph_save(const bram_graph* g, const char* path) {
    return guarded([&] {
        if (!g || !path) throw Error("null argument");
        g->g.save(path);
        return BRAM_OK;
    });
}

int bram_graph_build(int n1, int n2, int r, const int* triples, size_t n_triples,
                     bram_graph** out) {
    return guarded([&] {
        if (!out || (n_triples && !triples)) throw Error("null argument");
        std::vector<EdgeColor> edges;
        edges.reserve(n_triples);
        for (size_t i = 0; i < n_triples; ++i)
            edges.push_back({triples[3 * i], triples[3 * i + 1], triples[3 * i + 2]});
        *out = new bram_graph{ColoredBipartiteGraph::build(n1, n2, r, edges)};
        return BRAM_OK;
    });
}

int bram_graph_dims(const bram_graph* g, int* n1, int* n2, int* r, int* complete) {
    return guarded([&] {
        if (!g) throw Error("null graph");
        if (n1) *n1 = g->g.n1();
        if (n2) *n2 = g->g.n2();
        if (r) *r = g->g.colors();
        if (complete) *complete = g->g.complete() ? 1 : 0;
        return BRAM_OK;
    });
}

int bram_graph_min_degree(const bram_graph* g, const char* colors_csv, int* out) {
    return guarded([&] {
        if (!g || !out) throw Error("null argument");
        *out = min_degree(view_for_colors(g->g, colors_csv));
        return BRAM_OK;
    });
}

int bram_components_json(const bram_graph* g, const char* colors_csv, char** out_json) {
    return guarded([&] {
        if (!g || !out_json) throw Error("null argument");
        auto comps = components(view_for_colors(g->g, colors_csv));
        json arr = json::array();
        for (const auto& c : comps) arr.push_back(vertex_set_json(c.xs, c.ys));
        json j{{"kind", "components"}, {"count", comps.size()}, {"components", arr}};
        *out_json = dup_string(j.dump());
        return BRAM_OK;
    });
}

int bram_graph_random_complete(int n, int r, uint64_t seed, bram_graph** out) {
    return guarded([&] {
        if (!out) throw Error("null argument");
        *out = new bram_graph{random_complete_coloring(n, r, seed)};
        return BRAM_OK;
    });
}

int bram_construct_lower_bound(const char* lengths_csv, bram_graph** out) {
    return guarded([&] {
        if (!out) throw Error("null argument");
        *out = new bram_graph{lower_bound_coloring(parse_int_csv(lengths_csv))};
        return BRAM_OK;
    });
}

int bram_construct_h_tilde(int n, bram_graph** out) {
    return guarded([&] {
        if (!out) throw Error("null argument");
        *out = new bram_graph{h_tilde(n)};
        return BRAM_OK;
    });
}

int bram_cycle_find(const bram_graph* g, int color, int length, long long max_nodes,
                    double max_ms, char** out_json) {
    return guarded([&] {
        if (!g || !out_json) throw Error("null argument");
        auto res = find_cycle_of_length(GraphView::color(g->g, color), length,
                                        make_budget(max_nodes, max_ms));
        if (res.outcome == SearchOutcome::Found) {
            json j = to_json(res.certificate);
            j["kind"] = "cycle_certificate";
            j["nodes"] = res.nodes;
            *out_json = dup_string(j.dump());
            return BRAM_OK;
        }
        json j{{"kind", "cycle_search"},
               {"outcome", res.outcome == SearchOutcome::Absent ? "absent" : "unknown"},
               {"color", color},
               {"length", length},
               {"nodes", res.nodes}};
        *out_json = dup_string(j.dump());
        return res.outcome == SearchOutcome::Absent ? BRAM_NEGATIVE : BRAM_BUDGET;
    });
}

int bram_cycle_verify(const bram_graph* g, const char* certificate_json, char** out_json) {
    return guarded([&] {
        if (!g || !certificate_json || !out_json) throw Error("null argument");
        json in = json::parse(certificate_json);
        CycleCertificate cert = cycle_from_json(in);
        auto res = verify_cycle(g->g, cert);
        json j{{"kind", "cycle_verify"}, {"valid", res.ok}};
        if (!res.ok) j["reason"] = res.reason;
        *out_json = dup_string(j.dump());
        return res.ok ? BRAM_OK : BRAM_NEGATIVE;
    });
}

int bram_circumference(const bram_graph* g, int color, int* out_length) {
    return guarded([&] {
        if (!g || !out_length) throw Error("null argument");
        *out_length = circumference(GraphView::color(g->g, color));
        return BRAM_OK;
    });
}

int bram_matching_best(const bram_graph* g, char** out_json) {
    return guarded([&] {
        if (!g || !out_json) throw Error("null argument");
        auto certs = best_connected_matchings(g->g);
        json arr = json::array();
        for (const auto& c : certs) arr.push_back(to_json(c));
        json j{{"kind", "matching_best"}, {"per_color", arr}};
        *out_json = dup_string(j.dump());
        return BRAM_OK;
    });
}

int bram_matching_max(const bram_graph* g, const char* colors_csv, char** out_json) {
    return guarded([&] {
        if (!g || !out_json) throw Error("null argument");
        Matching m = max_matching(view_for_colors(g->g, colors_csv));
        json j = to_json(m);
        j["kind"] = "matching_max";
        *out_json = dup_string(j.dump());
        return BRAM_OK;
    });
}

int bram_tutte(const bram_graph* g, int color, long long alpha, char** out_json) {
    return guarded([&] {
        if (!g || !out_json) throw Error("null argument");
        GraphView v = GraphView::color(g->g, color);
        auto res = tutte_partition(v, alpha);
        json j;
        if (auto* m = std::get_if<Matching>(&res)) {
            j = to_json(*m);
            j["kind"] = "matching";
        } else {
            auto& d = std::get<TutteDecomposition>(res);
            auto chk = verify_tutte(v, d);
            j = to_json(d);
            j["kind"] = "tutte_decomposition";
            j["verified"] = chk.ok;
        }
        j["color"] = color;
        j["alpha"] = alpha;
        *out_json = dup_string(j.dump());
        return BRAM_OK;
    });
}

int bram_density(const bram_graph* g, const char* colors_csv, const char* xs_csv,
                 const char* ys_csv, char** out_json) {
    return guarded([&] {
        if (!g || !out_json) throw Error("null argument");
        GraphView v = view_for_colors(g->g, colors_csv);
        Bits a = Bits::of(g->g.n1(), parse_int_csv(xs_csv));
        Bits b = Bits::of(g->g.n2(), parse_int_csv(ys_csv));
        Rat d = density(v, a, b);
        json j{{"kind", "density"}, {"num", d.num}, {"den", d.den},
               {"value", d.to_double()}};
        *out_json = dup_string(j.dump());
        return BRAM_OK;
    });
}

int bram_regularity_check(const bram_graph* g, const char* partition_text, const char* eps,
                          uint64_t seed, char** out_json) {
    return guarded([&] {
        if (!g || !partition_text || !eps || !out_json) throw Error("null argument");
        auto part = ClusterPartition::from_text(partition_text);
        Rat e = Rat::parse(eps);
        auto pairs = check_partition_regularity(g->g, part, e, seed);
        int reg = 0, irr = 0, unk = 0;
        json arr = json::array();
        for (const auto& pr : pairs) {
            const char* st = pr.status == RegStatus::Regular    ? "regular"
                             : pr.status == RegStatus::Irregular ? "irregular"
                                                                  : "unknown";
            if (pr.status == RegStatus::Regular) ++reg;
            else if (pr.status == RegStatus::Irregular) ++irr;
            else ++unk;
            arr.push_back(json{{"i", pr.i},
                               {"j", pr.j},
                               {"color", pr.color},
                               {"status", st},
                               {"density", to_json(pr.density)}});
        }
        json j{{"kind", "regularity_check"},
               {"k", part.k()},
               {"m", part.m()},
               {"mode", part.m() <= 14 ? "exact" : "witness"},
               {"eps", to_json(e)},
               {"regular", reg},
               {"irregular", irr},
               {"unknown", unk},
               {"pairs", arr}};
        *out_json = dup_string(j.dump());
        return BRAM_OK;
    });
}

int bram_reduced_graph(const bram_graph* g, const char* partition_text, const char* rule,
                       const char* eps, const char* d, char** out_json) {
    return guarded([&] {
        if (!g || !partition_text || !rule || !out_json) throw Error("null argument");
        auto part = ClusterPartition::from_text(partition_text);
        ReducedRule rr;
        std::string rs(rule);
        if (rs == "degree-form") rr = ReducedRule::DegreeFormD;
        else if (rs == "majority") rr = ReducedRule::MajorityHalfEps;
        else throw Error("rule must be 'degree-form' or 'majority'");
        Rat re = eps && *eps ? Rat::parse(eps) : Rat(0);
        Rat rd = d && *d ? Rat::parse(d) : Rat(0);
        auto h = reduced_graph(g->g, part, re, rd, rr);
        json edges = json::array();
        for (int i = 0; i < h.k; ++i)
            for (int j2 = 0; j2 < h.k; ++j2)
                if (h.color_at(i, j2))
                    edges.push_back(json{{"i", i},
                                         {"j", j2},
                                         {"color", h.color_at(i, j2)},
                                         {"density_1", to_json(h.densities_at(i, j2)[0])},
                                         {"density_2", to_json(h.densities_at(i, j2)[1])}});
        json j{{"kind", "reduced_graph"},
               {"k", h.k},
               {"rule", rs},
               {"cluster_graph", h.to_cluster_graph().to_text()},
               {"edges", edges}};
        *out_json = dup_string(j.dump());
        return BRAM_OK;
    });
}

int bram_partition_uniform(int n, int k, char** out_text) {
    return guarded([&] {
        if (!out_text) throw Error("null argument");
        *out_text = dup_string(ClusterPartition::uniform(n, k).to_text());
        return BRAM_OK;
    });
}

int bram_partition_random(int n, int k, uint64_t seed, char** out_text) {
    return guarded([&] {
        if (!out_text) throw Error("null argument");
        *out_text = dup_string(ClusterPartition::random(n, k, seed).to_text());
        return BRAM_OK;
    });
}

int bram_pipeline_run(const bram_graph* g, const char* alphas_csv, const char* xi, int clusters,
                      uint64_t seed, int min_degree_flag, int explicit_n, long long max_nodes,
                      double max_ms, char** out_json) {
    return guarded([&] {
        if (!g || !alphas_csv || !xi || !out_json) throw Error("null argument");
        std::stringstream ss(alphas_csv);
        std::string tok;
        std::vector<Rat> alphas;
        while (std::getline(ss, tok, ',')) alphas.push_back(Rat::parse(tok));
        if (alphas.size() != 2) throw Error("need exactly two alphas, e.g. --alpha 1,1");
        PipelineOptions opt;
        opt.clusters = clusters;
        opt.seed = seed;
        opt.min_degree_route = min_degree_flag != 0;
        if (explicit_n > 0) opt.explicit_n = explicit_n;
        opt.budget = make_budget(max_nodes, max_ms);
        auto res = find_long_mono_cycle(g->g, alphas[0], alphas[1], Rat::parse(xi), opt);
        *out_json = dup_string(to_json(res).dump());
        return res.success ? BRAM_OK : BRAM_NEGATIVE;
    });
}

int bram_ramsey_decide(int N, const char* lengths_csv, long long max_nodes, double max_ms,
                       const char* resume_state, int jobs, char** out_json) {
    return guarded([&] {
        if (!lengths_csv || !out_json) throw Error("null argument");
        auto v = decide_arrowing(N, parse_int_csv(lengths_csv), make_budget(max_nodes, max_ms),
                                 resume_state ? resume_state : "", jobs);
        *out_json = dup_string(to_json(v).dump());
        switch (v.outcome) {
            case RamseyOutcome::AllColoringsHit: return BRAM_OK;
            case RamseyOutcome::GoodColoring: return BRAM_NEGATIVE;
            default: return BRAM_BUDGET;
        }
    });
}

int bram_ramsey_value(const char* lengths_csv, int nmax, long long max_nodes, double max_ms,
                      int jobs, char** out_json) {
    return guarded([&] {
        if (!lengths_csv || !out_json) throw Error("null argument");
        auto res =
            ramsey_value(parse_int_csv(lengths_csv), nmax, make_budget(max_nodes, max_ms), jobs);
        *out_json = dup_string(to_json(res).dump());
        return res.value ? BRAM_OK : BRAM_BUDGET;
    });
}

int bram_report_build(const char* run_dir, const char* out_dir, char** out_summary) {
    return guarded([&] {
        if (!run_dir) throw Error("null argument");
        auto tables = build_report(run_dir);
        if (out_dir && *out_dir) write_report(tables, out_dir);
        if (out_summary) *out_summary = dup_string(tables.summary);
        return BRAM_OK;
    });
}

} // extern "C"
