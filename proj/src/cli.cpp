#include "starforest/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "starforest/bounds.hpp"
#include "starforest/constructions.hpp"
#include "starforest/io.hpp"
#include "starforest/search.hpp"
#include "starforest/verify.hpp"

namespace starforest {

namespace {

using json = nlohmann::ordered_json;

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

// Thrown for anything that should end in exit code 2.
struct UsageError : Error {
    using Error::Error;
};

DecompositionFile load(const std::string& path, Io& io) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << io.in.rdbuf();
        text = ss.str();
    } else {
        try {
            text = read_file(path);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }
    try {
        return parse(text);
    } catch (const ParseError& e) {
        throw UsageError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
    }
}

void emit(const std::string& path, const std::string& text, Io& io) {
    if (path.empty() || path == "-") {
        io.out << text;
    } else {
        write_file_atomic(path, text);
    }
}

json edges_json(const std::vector<Edge>& edges) {
    json a = json::array();
    for (const Edge& e : edges) a.push_back({e.u, e.v});
    return a;
}

// ---- construct ----

struct ConstructArgs {
    std::string family;
    int n = 0, m = 0, t = 0, k = 0;
    std::string in = "-", out = "-";
};

ConstructionOutput build(const ConstructArgs& a, Io& io) {
    auto need = [&](int v, const char* flag) {
        if (v <= 0) throw UsageError("--family " + a.family + " needs " + flag);
        return v;
    };
    if (a.family == "bds") return broken_double_star_completion(a.t > 0 ? a.t : need(a.n, "--t or --n") / 2);
    if (a.family == "f2") return f2_construction(need(a.n, "--n"));
    if (a.family == "conjecture") return conjecture_construction(need(a.n, "--n"), need(a.k, "--k"));
    if (a.family == "k27") return k27();
    if (a.family == "f3") return f3_construction(need(a.n, "--n"));
    if (a.family == "k16") return k16();
    if (a.family == "k4gen") return k4_construction(a.m > 0 ? a.m : (need(a.n, "--m or --n") - 4) / 12);
    if (a.family == "stars") return star_decomposition(need(a.n, "--n"));
    if (a.family == "blowup") {
        auto base = load(a.in, io);
        auto out = blowup(base.decomposition, need(a.t, "--t"));
        if (auto it = base.meta.find("provenance"); it != base.meta.end()) {
            std::istringstream names(it->second);
            std::vector<std::string> base_names;
            for (std::string s; names >> s;) base_names.push_back(s);
            for (auto& name : out.provenance) {
                auto tilde = name.find('~');
                auto j = std::stoul(name.substr(2, tilde - 2));
                if (j < base_names.size()) name = base_names[j] + name.substr(tilde);
            }
        }
        return out;
    }
    throw UsageError("unknown family " + a.family);
}

int cmd_construct(const ConstructArgs& a, Io& io) {
    if ((a.family == "f3" && a.n % 27 != 0) || (a.family == "k4gen" && a.m <= 0 && a.n % 12 != 4)) {
        throw UsageError("--n does not fit family " + a.family);
    }
    auto out = build(a, io);
    emit(a.out, serialize(to_file(out)), io);
    return kExitOk;
}

// ---- verify ----

int cmd_verify(const std::string& path, bool as_json, Io& io) {
    auto file = load(path, io);
    const Decomposition& d = file.decomposition;
    auto r = validate_decomposition(d);
    if (as_json) {
        json j;
        j["verdict"] = to_string(r.verdict);
        j["n"] = d.n;
        j["k"] = d.k;
        j["forests"] = d.forests.size();
        j["problems"] = r.problems;
        if (r.coverage) {
            j["total_edges"] = r.coverage->total_edges;
            j["covered_slots"] = r.coverage->covered_slots();
            j["missing"] = edges_json(r.coverage->missing);
            json dup = json::array();
            for (const auto& [e, c] : r.coverage->duplicated) dup.push_back({{"edge", {e.u, e.v}}, {"count", c}});
            j["duplicated"] = dup;
        }
        io.out << j.dump(2) << '\n';
    } else {
        io.out << "verdict: " << to_string(r.verdict) << '\n';
        io.out << "n: " << d.n << "  k: " << d.k << "  forests: " << d.forests.size() << '\n';
        if (r.coverage) {
            const auto& c = *r.coverage;
            io.out << "edges: " << c.total_edges << "  covered slots: " << c.covered_slots() << '\n';
            io.out << "missing (" << c.missing.size() << "):";
            for (const Edge& e : c.missing) io.out << ' ' << to_string(e);
            io.out << '\n';
            io.out << "duplicated (" << c.duplicated.size() << "):";
            for (const auto& [e, n] : c.duplicated) io.out << ' ' << to_string(e) << 'x' << n;
            io.out << '\n';
        }
        for (const auto& p : r.problems) io.out << "problem: " << p << '\n';
    }
    return r.ok() ? kExitOk : kExitInvalid;
}

// ---- analyze ----

int cmd_analyze(const std::string& path, bool as_json, Io& io) {
    auto file = load(path, io);
    const Decomposition& d = file.decomposition;
    auto valid = validate_decomposition(d);
    auto rh = root_hypergraph(d);
    const int m = static_cast<int>(d.forests.size());
    auto iso = check_no_isolated(rh, m);
    auto prof = degree_profile(rh);
    auto b1 = check_b1_inequality(rh);
    auto l3 = check_lemma3(d);
    auto bds = is_broken_double_star(d);

    if (as_json) {
        json j;
        j["verdict"] = to_string(valid.verdict);
        j["n"] = d.n;
        j["m"] = m;
        j["hyperedges"] = rh.hyperedges;
        j["isolation"] = {{"applicable", iso.applicable}, {"isolated", iso.isolated}, {"holds", iso.holds()}};
        json p = json::object();
        for (const auto& [deg, cnt] : prof.p) p[std::to_string(deg)] = cnt;
        j["degree_profile"] = {{"r", prof.r},
                               {"p", p},
                               {"degree_sum", prof.degree_sum},
                               {"vertex_count_identity", prof.vertex_count_identity},
                               {"degree_sum_applicable", prof.degree_sum_applicable},
                               {"degree_sum_identity", prof.degree_sum_identity}};
        j["b1"] = {{"applicable", b1.applicable},     {"lhs", b1.b1_lhs},
                   {"rhs", b1.b1_rhs},                {"slack", b1.b1_slack},
                   {"edge_count_bound", b1.edge_count_bound},
                   {"counting_lhs", b1.counting_lhs}, {"counting_rhs", b1.counting_rhs},
                   {"counting_slack", b1.counting_slack}, {"holds", b1.holds()}};
        j["lemma3"] = {{"applicable", l3.applicable},
                       {"reason", l3.reason},
                       {"pair_witnesses", l3.pair_witnesses},
                       {"degree_two_witnesses", l3.degree_two_witnesses},
                       {"holds", l3.holds()}};
        j["broken_double_star"] = to_string(bds);
        io.out << j.dump(2) << '\n';
        return kExitOk;
    }

    auto name = [&](Vertex v) { return d.labels ? d.labels->label(v) : std::to_string(v); };
    io.out << "verdict: " << to_string(valid.verdict) << '\n';
    io.out << "root hypergraph (" << m << " hyperedges):\n";
    for (std::size_t i = 0; i < rh.hyperedges.size(); ++i) {
        io.out << "  " << i << ": {";
        for (std::size_t j = 0; j < rh.hyperedges[i].size(); ++j) io.out << (j ? ", " : "") << name(rh.hyperedges[i][j]);
        io.out << "}\n";
    }
    io.out << "no isolated vertex: " << (iso.applicable ? (iso.holds() ? "holds" : "FAILS") : "n/a (m >= n-1)") << '\n';
    io.out << "degree profile: r=" << prof.r;
    for (const auto& [deg, cnt] : prof.p) io.out << " p" << deg << '=' << cnt;
    io.out << "  sum=" << prof.degree_sum << '\n';
    io.out << "  vertex count identity: " << (prof.vertex_count_identity ? "holds" : "fails") << '\n';
    io.out << "  degree sum identity: "
           << (prof.degree_sum_applicable ? (prof.degree_sum_identity ? "holds" : "FAILS") : "n/a") << '\n';
    if (b1.applicable) {
        io.out << "B1 inequality: " << b1.b1_lhs << " <= " << b1.b1_rhs << " (slack " << b1.b1_slack << ")\n";
        io.out << "counting inequality: " << b1.counting_lhs << " <= " << b1.counting_rhs << " (slack "
               << b1.counting_slack << ")\n";
    } else {
        io.out << "B1 inequality: n/a (hyperedge larger than 3)\n";
    }
    io.out << "lemma 3: ";
    if (!l3.applicable) {
        io.out << "n/a (" << l3.reason << ")\n";
    } else {
        io.out << (l3.holds() ? "holds" : "FAILS") << '\n';
    }
    io.out << "broken double star: " << to_string(bds) << '\n';
    return kExitOk;
}

// ---- search ----

struct SearchArgs {
    int n = 0, k = 0, max_forests = 0, threads = 1;
    std::int64_t max_nodes = SearchBudget{}.max_nodes;
    double timeout = 60.0;
    std::string out;
    bool trivial_start = false;
};

int cmd_search(const SearchArgs& a, bool as_json, Io& io) {
    SearchBudget b;
    b.max_nodes = a.max_nodes;
    b.wall_time = std::chrono::milliseconds(static_cast<std::int64_t>(a.timeout * 1000));
    b.parallelism_hint = a.threads;
    if (b.max_nodes <= 0 || b.wall_time.count() <= 0 || b.parallelism_hint <= 0) {
        throw UsageError("--max-nodes, --timeout and --threads must be positive");
    }
    std::optional<Decomposition> cert;
    int code = kExitOk;
    json j;
    j["n"] = a.n;
    j["k"] = a.k;
    if (a.max_forests > 0) {
        auto r = exists_decomposition(a.n, a.k, a.max_forests, b);
        j["max_forests"] = a.max_forests;
        j["status"] = to_string(r.status);
        j["nodes"] = r.nodes_explored;
        cert = r.certificate;
        if (r.status == SearchStatus::exhausted_not_found) code = kExitInvalid;
        if (r.status == SearchStatus::budget_exceeded) code = kExitBudget;
        if (!as_json) {
            io.out << "status: " << to_string(r.status) << " (n=" << a.n << ", k=" << a.k << ", m<=" << a.max_forests
                   << ", nodes " << r.nodes_explored << ")\n";
        }
    } else {
        auto r = f_exact(a.n, a.k, b, !a.trivial_start);
        cert = r.certificate;
        j["complete"] = r.complete;
        if (r.value) j["value"] = *r.value;
        j["lower"] = r.lower;
        j["upper"] = r.upper;
        j["start"] = r.start;
        json ex = json::array();
        for (const auto& t : r.exhausted) ex.push_back({{"m", t.m}, {"nodes", t.nodes}});
        j["exhausted"] = ex;
        j["nodes"] = r.nodes_explored;
        if (!r.complete) code = kExitBudget;
        if (!as_json) {
            if (r.complete) {
                io.out << "F_" << a.k << "(" << a.n << ") = " << *r.value << '\n';
            } else {
                io.out << "budget exceeded: " << r.lower << " <= F_" << a.k << "(" << a.n << ") <= " << r.upper << '\n';
            }
            for (const auto& t : r.exhausted) {
                io.out << "  m=" << t.m << ": ExhaustedNotFound (" << t.nodes << " nodes)\n";
            }
        }
    }
    if (cert && !a.out.empty()) {
        DecompositionFile f;
        f.decomposition = *cert;
        f.meta["family"] = "search";
        emit(a.out, serialize(f), io);
    }
    if (as_json) io.out << j.dump(2) << '\n';
    return code;
}

// ---- bounds ----

int cmd_bounds(int n, int k, bool with_search, double timeout, bool as_json, Io& io) {
    SearchBudget b;
    b.wall_time = std::chrono::milliseconds(static_cast<std::int64_t>(timeout * 1000));
    if (b.wall_time.count() <= 0) throw UsageError("--timeout must be positive");
    auto r = bound_report(n, k, with_search, b);
    if (as_json) {
        json j;
        j["n"] = r.n;
        j["k"] = r.k;
        j["lower"] = {{"value", r.lower.value}, {"source", r.lower.source}};
        j["upper"] = {{"value", r.upper.value}, {"source", r.upper.source}};
        j["conjecture"] = r.conjecture ? json(*r.conjecture) : json(nullptr);
        j["conjecture_refuted_here"] = r.conjecture_refuted_here;
        j["notes"] = r.notes;
        io.out << j.dump(2) << '\n';
        return kExitOk;
    }
    io.out << "n=" << r.n << " k=" << r.k << "  lower " << r.lower.value << " (" << r.lower.source << ")  upper "
           << r.upper.value << " (" << r.upper.source << ")  conjecture ";
    if (r.conjecture) {
        io.out << *r.conjecture << "  " << (r.conjecture_refuted_here ? "REFUTED" : "not refuted");
    } else {
        io.out << "n/a";
    }
    io.out << '\n';
    for (const auto& note : r.notes) io.out << "note: " << note << '\n';
    return kExitOk;
}

// ---- export ----

int cmd_export(const std::string& path, const std::string& format, const std::string& out, Io& io) {
    auto file = load(path, io);
    if (format == "dot") {
        emit(out, export_dot(file.decomposition), io);
        return kExitOk;
    }
    auto graphs = export_dot_per_forest(file.decomposition);
    if (out.empty() || out == "-") {
        for (const auto& g : graphs) io.out << g;
        return kExitOk;
    }
    std::filesystem::create_directories(out);
    const int width = static_cast<int>(std::to_string(graphs.size()).size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        std::ostringstream name;
        name << "forest_" << std::setw(width) << std::setfill('0') << i << ".dot";
        write_file_atomic((std::filesystem::path(out) / name.str()).string(), graphs[i]);
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Io io{in, out, err};
    CLI::App app{"Star-forest decompositions of complete graphs", "starforest"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Structured JSON output");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Generate a decomposition from a construction family");
    construct->add_option("--family", ca.family, "Construction family")
        ->required()
        ->check(CLI::IsMember({"bds", "f2", "conjecture", "k27", "f3", "k16", "k4gen", "blowup", "stars"}));
    construct->add_option("--n", ca.n, "Number of vertices");
    construct->add_option("--m", ca.m, "Block count for k4gen (n = 12m + 4)");
    construct->add_option("--t", ca.t, "Half size for bds, blow-up factor for blowup");
    construct->add_option("--k", ca.k, "Components per forest (conjecture)");
    construct->add_option("--in", ca.in, "Base decomposition for blowup ('-' = stdin)");
    construct->add_option("-o,--out", ca.out, "Output file ('-' = stdout)");

    std::string verify_in = "-";
    auto* verify = app.add_subcommand("verify", "Check that a file decomposes K_n into k-star-forests");
    verify->add_option("--in", verify_in, "Decomposition file ('-' = stdin)");
    verify->add_flag("--json", as_json, "Structured JSON output");

    std::string analyze_in = "-";
    auto* analyze = app.add_subcommand("analyze", "Root-hypergraph diagnostics");
    analyze->add_option("--in", analyze_in, "Decomposition file ('-' = stdin)");
    analyze->add_flag("--json", as_json, "Structured JSON output");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "Exact value of F_k(n) by exhaustive search");
    search->add_option("--n", sa.n, "Number of vertices")->required()->check(CLI::PositiveNumber);
    search->add_option("--k", sa.k, "Components per forest")->required()->check(CLI::PositiveNumber);
    search->add_option("--max-forests", sa.max_forests, "Only decide whether m forests suffice");
    search->add_option("--max-nodes", sa.max_nodes, "Node budget");
    search->add_option("--timeout", sa.timeout, "Wall-clock budget in seconds");
    search->add_option("--threads", sa.threads, "Worker threads");
    search->add_option("-o,--out", sa.out, "Write the certificate here");
    search->add_flag("--trivial-start", sa.trivial_start, "Start from ceil(n/2) instead of the known lower bound");
    search->add_flag("--json", as_json, "Structured JSON output");

    int bn = 0, bk = 0;
    bool with_search = false;
    double btimeout = 60.0;
    auto* bounds = app.add_subcommand("bounds", "Lower/upper bounds against the conjectured value");
    bounds->add_option("--n", bn, "Number of vertices")->required()->check(CLI::PositiveNumber);
    bounds->add_option("--k", bk, "Components per forest")->required()->check(CLI::PositiveNumber);
    bounds->add_flag("--with-search", with_search, "Tighten with exact search");
    bounds->add_option("--timeout", btimeout, "Search budget in seconds");
    bounds->add_flag("--json", as_json, "Structured JSON output");

    std::string export_in = "-", format = "dot", export_out;
    auto* exp = app.add_subcommand("export", "Render as Graphviz DOT");
    exp->add_option("--in", export_in, "Decomposition file ('-' = stdin)");
    exp->add_option("--format", format, "dot or dot-per-forest")->check(CLI::IsMember({"dot", "dot-per-forest"}));
    exp->add_option("-o,--out", export_out, "Output file (dot) or directory (dot-per-forest)");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("starforest");
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*construct) return cmd_construct(ca, io);
        if (*verify) return cmd_verify(verify_in, as_json, io);
        if (*analyze) return cmd_analyze(analyze_in, as_json, io);
        if (*search) return cmd_search(sa, as_json, io);
        if (*bounds) return cmd_bounds(bn, bk, with_search, btimeout, as_json, io);
        if (*exp) return cmd_export(export_in, format, export_out, io);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace starforest
