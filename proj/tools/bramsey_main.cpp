// bramsey command line front end. Links the C API only; all structured
// results are line-delimited JSON (the machine-readable source of truth),
// with --format table rendering a human view of the same object.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bramsey/bramsey.h"

namespace {

using nlohmann::json;

struct GlobalOpts {
    uint64_t seed = 0;
    int jobs = 1;
    double budget_ms = -1;
    long long budget_nodes = -1;
    std::string output; // empty = stdout
    std::string format = "json";
};

// flags fall back to BRAMSEY_* environment overrides
void apply_env(GlobalOpts& g, const CLI::App& app) {
    auto env = [](const char* name) -> const char* { return std::getenv(name); };
    if (!app.count("--seed"))
        if (const char* v = env("BRAMSEY_SEED")) g.seed = std::strtoull(v, nullptr, 10);
    if (!app.count("--jobs"))
        if (const char* v = env("BRAMSEY_JOBS")) g.jobs = std::atoi(v);
    if (!app.count("--budget-ms"))
        if (const char* v = env("BRAMSEY_BUDGET_MS")) g.budget_ms = std::atof(v);
    if (!app.count("--budget-nodes"))
        if (const char* v = env("BRAMSEY_BUDGET_NODES"))
            g.budget_nodes = std::strtoll(v, nullptr, 10);
    if (!app.count("--output"))
        if (const char* v = env("BRAMSEY_OUTPUT")) g.output = v;
    if (!app.count("--format"))
        if (const char* v = env("BRAMSEY_FORMAT")) g.format = v;
}

struct GraphHandle {
    bram_graph* g = nullptr;
    ~GraphHandle() { bram_graph_free(g); }
};

struct CStr {
    char* s = nullptr;
    ~CStr() { bram_string_free(s); }
};

[[noreturn]] void fail(int code) {
    std::cerr << "error: " << bram_last_error() << "\n";
    std::exit(code < 0 ? 2 : code);
}

void render_table(const json& j, std::ostream& out, int indent = 0) {
    std::string pad(size_t(indent) * 2, ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& v = it.value();
        if (v.is_object()) {
            out << pad << it.key() << ":\n";
            render_table(v, out, indent + 1);
        } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
            out << pad << it.key() << ": [" << v.size() << " entries]\n";
        } else if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
            out << pad << it.key() << ": |\n";
            std::istringstream ss(v.get<std::string>());
            std::string line;
            while (std::getline(ss, line)) out << pad << "  " << line << "\n";
        } else {
            out << pad << it.key() << " = " << v.dump() << "\n";
        }
    }
}

// every artifact goes out as one JSON line (or a table view of it)
void emit(const GlobalOpts& opts, const std::string& json_line) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!opts.output.empty()) {
        file.open(opts.output, std::ios::binary | std::ios::app);
        if (!file) {
            std::cerr << "error: cannot open output file '" << opts.output << "'\n";
            std::exit(2);
        }
        out = &file;
    }
    if (opts.format == "table") {
        render_table(json::parse(json_line), *out);
    } else {
        *out << json_line << "\n";
    }
}

GraphHandle load_graph(const std::string& path) {
    GraphHandle h;
    int rc = bram_graph_from_file(path.c_str(), &h.g);
    if (rc != BRAM_OK) fail(rc);
    return h;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open '" << path << "'\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_graph(const GlobalOpts& opts, bram_graph* g, const std::string& out_file) {
    if (!out_file.empty()) {
        int rc = bram_graph_save(g, out_file.c_str());
        if (rc != BRAM_OK) fail(rc);
        return;
    }
    CStr text;
    int rc = bram_graph_to_text(g, &text.s);
    if (rc != BRAM_OK) fail(rc);
    if (!opts.output.empty()) {
        std::ofstream f(opts.output, std::ios::binary);
        f << text.s;
    } else {
        std::cout << text.s;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bramsey: exact experiments on bipartite Ramsey numbers of even cycles"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--seed", opts.seed, "seed for all randomized procedures (default 0)");
    app.add_option("--jobs", opts.jobs, "worker threads for the ramsey search (default 1)");
    app.add_option("--budget-ms", opts.budget_ms, "wall-clock budget in milliseconds");
    app.add_option("--budget-nodes", opts.budget_nodes,
                   "deterministic node budget for searches");
    app.add_option("--output", opts.output, "write artifacts to this file instead of stdout");
    app.add_option("--format", opts.format, "json (default) or table")
        ->check(CLI::IsMember({"json", "table"}));

    // construct
    auto* construct = app.add_subcommand("construct", "generate the extremal colorings");
    std::string c_lengths;
    int c_n = 1;
    std::string c_out;
    auto* c_lower = construct->add_subcommand("lower-bound", "windowed coloring of K_{N,N}");
    c_lower->add_option("--lengths", c_lengths, "cycle parameters n_1,..,n_r (each >= 2)")
        ->required();
    c_lower->add_option("-o,--out", c_out, "output graph file");
    auto* c_ht = construct->add_subcommand("h-tilde", "3/4-degree graph without C_{4n}");
    c_ht->add_option("--n", c_n, "block size n >= 1")->required();
    c_ht->add_option("-o,--out", c_out, "output graph file");

    // cycle
    auto* cycle = app.add_subcommand("cycle", "exact-length cycle search and verification");
    int cy_color = 1, cy_length = 4;
    std::string cy_graph, cy_cert;
    auto* cy_find = cycle->add_subcommand("find", "find a cycle of exact even length");
    cy_find->add_option("--color", cy_color, "color class")->required();
    cy_find->add_option("--length", cy_length, "even target length")->required();
    cy_find->add_option("graph", cy_graph, "graph file")->required();
    auto* cy_verify = cycle->add_subcommand("verify", "re-check a certificate");
    cy_verify->add_option("--certificate", cy_cert, "certificate JSON file")->required();
    cy_verify->add_option("graph", cy_graph, "graph file")->required();
    auto* cy_circ = cycle->add_subcommand("circumference", "longest cycle length per color");
    cy_circ->add_option("--color", cy_color, "color class")->required();
    cy_circ->add_option("graph", cy_graph, "graph file")->required();

    // matching
    auto* matching = app.add_subcommand("matching", "matchings and connected matchings");
    std::string m_graph, m_colors;
    auto* m_best = matching->add_subcommand("best", "largest connected matching per color");
    m_best->add_option("--graph", m_graph, "graph file")->required();
    auto* m_max = matching->add_subcommand("max", "maximum matching of a color view");
    m_max->add_option("--graph", m_graph, "graph file")->required();
    m_max->add_option("--colors", m_colors, "restrict to these colors (default all)");

    // decomp
    auto* decomp = app.add_subcommand("decomp", "matching or separator decomposition");
    int d_color = 1;
    long long d_alpha = 1;
    std::string d_graph;
    auto* d_tutte = decomp->add_subcommand("tutte", "matching saturating alpha or {S,T,U}");
    d_tutte->add_option("--color", d_color, "color class")->required();
    d_tutte->add_option("--alpha", d_alpha, "saturation threshold")->required();
    d_tutte->add_option("graph", d_graph, "graph file")->required();

    // regularity
    auto* regularity = app.add_subcommand("regularity", "density and regularity checks");
    std::string r_eps = "0.05", r_clusters, r_graph;
    auto* r_check = regularity->add_subcommand("check", "per-pair regularity sweep");
    r_check->add_option("--eps", r_eps, "epsilon (decimal or fraction)");
    r_check->add_option("--clusters", r_clusters, "partition file")->required();
    r_check->add_option("graph", r_graph, "graph file")->required();

    // pipeline
    auto* pipeline = app.add_subcommand("pipeline", "regularity-method cycle embedding");
    std::string p_alpha = "1,1", p_xi = "0.05", p_graph;
    int p_clusters = 6, p_random = 0, p_n = 0;
    bool p_mindeg = false;
    auto* p_run = pipeline->add_subcommand("run", "end-to-end monochromatic cycle run");
    p_run->add_option("--alpha", p_alpha, "alpha_1,alpha_2 (default 1,1)");
    p_run->add_option("--xi", p_xi, "slack parameter (default 0.05)");
    p_run->add_option("--clusters", p_clusters, "clusters per side (default 6)");
    p_run->add_option("--n", p_n, "explicit cycle parameter n (default derived)");
    p_run->add_flag("--min-degree", p_mindeg, "use the minimum-degree route");
    p_run->add_option("--random", p_random, "run on a seeded random 2-coloring of K_{N,N}");
    p_run->add_option("graph", p_graph, "graph file (omit when --random is given)");

    // ramsey
    auto* ramsey = app.add_subcommand("ramsey", "exact bipartite Ramsey decisions");
    int ra_N = 1, ra_nmax = 1;
    std::string ra_lengths, ra_state;
    auto* ra_decide = ramsey->add_subcommand("decide", "does every coloring contain a cycle?");
    ra_decide->add_option("--N", ra_N, "side size")->required();
    ra_decide->add_option("--lengths", ra_lengths, "forbidden cycle lengths per color")
        ->required();
    ra_decide->add_option("--state", ra_state, "resume/checkpoint file");
    auto* ra_value = ramsey->add_subcommand("value", "smallest N with the arrowing property");
    ra_value->add_option("--lengths", ra_lengths, "forbidden cycle lengths per color")
        ->required();
    ra_value->add_option("--nmax", ra_nmax, "scan cap")->required();

    // report
    auto* report = app.add_subcommand("report", "aggregate run artifacts into tables");
    std::string rep_dir, rep_out;
    report->add_option("run-dir", rep_dir, "directory of run JSON artifacts")->required();
    report->add_option("--out", rep_out, "directory for CSV tables (default <run-dir>/tables)");

    // global flags (--seed, --format, ...) may appear after subcommand
    // arguments; let unmatched options fall back to the parent parser
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (auto* sub : a->get_subcommands({})) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the usage text
        return 2;
    }
    apply_env(opts, app);

    if (c_lower->parsed()) {
        GraphHandle h;
        int rc = bram_construct_lower_bound(c_lengths.c_str(), &h.g);
        if (rc != BRAM_OK) fail(rc);
        write_graph(opts, h.g, c_out);
        return 0;
    }
    if (c_ht->parsed()) {
        GraphHandle h;
        int rc = bram_construct_h_tilde(c_n, &h.g);
        if (rc != BRAM_OK) fail(rc);
        write_graph(opts, h.g, c_out);
        return 0;
    }
    if (cy_find->parsed()) {
        GraphHandle h = load_graph(cy_graph);
        CStr out;
        int rc = bram_cycle_find(h.g, cy_color, cy_length, opts.budget_nodes, opts.budget_ms,
                                 &out.s);
        if (rc < 0) fail(rc);
        emit(opts, out.s);
        return rc;
    }
    if (cy_verify->parsed()) {
        GraphHandle h = load_graph(cy_graph);
        CStr out;
        std::string cert = read_file(cy_cert);
        int rc = bram_cycle_verify(h.g, cert.c_str(), &out.s);
        if (rc < 0) fail(rc);
        emit(opts, out.s);
        return rc;
    }
    if (cy_circ->parsed()) {
        GraphHandle h = load_graph(cy_graph);
        int len = 0;
        int rc = bram_circumference(h.g, cy_color, &len);
        if (rc != BRAM_OK) fail(rc);
        emit(opts, json{{"kind", "circumference"}, {"color", cy_color}, {"length", len}}.dump());
        return 0;
    }
    if (m_best->parsed()) {
        GraphHandle h = load_graph(m_graph);
        CStr out;
        int rc = bram_matching_best(h.g, &out.s);
        if (rc < 0) fail(rc);
        emit(opts, out.s);
        return 0;
    }
    if (m_max->parsed()) {
        GraphHandle h = load_graph(m_graph);
        CStr out;
        int rc = bram_matching_max(h.g, m_colors.c_str(), &out.s);
        if (rc < 0) fail(rc);
        emit(opts, out.s);
        return 0;
    }
    if (d_tutte->parsed()) {
        GraphHandle h = load_graph(d_graph);
        CStr out;
        int rc = bram_tutte(h.g, d_color, d_alpha, &out.s);
        if (rc < 0) fail(rc);
        emit(opts, out.s);
        return 0;
    }
    if (r_check->parsed()) {
        GraphHandle h = load_graph(r_graph);
        CStr out;
        std::string part = read_file(r_clusters);
        int rc = bram_regularity_check(h.g, part.c_str(), r_eps.c_str(), opts.seed, &out.s);
        if (rc < 0) fail(rc);
        emit(opts, out.s);
        return 0;
    }
    if (p_run->parsed()) {
        GraphHandle h;
        if (p_random > 0) {
            int rc = bram_graph_random_complete(p_random, 2, opts.seed, &h.g);
            if (rc != BRAM_OK) fail(rc);
        } else if (!p_graph.empty()) {
            h = load_graph(p_graph);
        } else {
            std::cerr << "error: pipeline run needs a graph file or --random N\n";
            return 2;
        }
        CStr out;
        int rc = bram_pipeline_run(h.g, p_alpha.c_str(), p_xi.c_str(), p_clusters, opts.seed,
                                   p_mindeg ? 1 : 0, p_n, opts.budget_nodes, opts.budget_ms,
                                   &out.s);
        if (rc < 0) fail(rc);
        emit(opts, out.s);
        return rc;
    }
    if (ra_decide->parsed()) {
        std::string resume;
        if (!ra_state.empty()) {
            std::ifstream f(ra_state);
            if (f) {
                std::ostringstream ss;
                ss << f.rdbuf();
                resume = ss.str();
            }
        }
        CStr out;
        int rc = bram_ramsey_decide(ra_N, ra_lengths.c_str(), opts.budget_nodes, opts.budget_ms,
                                    resume.c_str(), opts.jobs, &out.s);
        if (rc < 0) fail(rc);
        if (rc == BRAM_BUDGET && !ra_state.empty()) {
            json j = json::parse(std::string(out.s));
            if (j.contains("resume_state")) {
                std::ofstream f(ra_state, std::ios::binary | std::ios::trunc);
                f << j["resume_state"].get<std::string>();
            }
        }
        emit(opts, out.s);
        return rc;
    }
    if (ra_value->parsed()) {
        CStr out;
        int rc = bram_ramsey_value(ra_lengths.c_str(), ra_nmax, opts.budget_nodes,
                                   opts.budget_ms, opts.jobs, &out.s);
        if (rc < 0) fail(rc);
        emit(opts, out.s);
        return rc;
    }
    if (report->parsed()) {
        std::string outdir = rep_out.empty() ? rep_dir + "/tables" : rep_out;
        CStr summary;
        int rc = bram_report_build(rep_dir.c_str(), outdir.c_str(), &summary.s);
        if (rc < 0) fail(rc);
        std::cout << summary.s;
        return 0;
    }
    std::cerr << app.help();
    return 2;
}
