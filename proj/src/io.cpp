#include "starforest/io.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

namespace starforest {

ParseError::ParseError(int line, const std::string& what)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

std::string format_edges(const std::vector<Edge>& edges) {
    std::string out;
    for (const Edge& e : edges) {
        if (!out.empty()) out += ' ';
        out += to_string(e);
    }
    return out;
}

std::vector<Edge> parse_edges(const std::string& text) {
    std::vector<Edge> out;
    std::istringstream in(text);
    for (std::string tok; in >> tok;) {
        auto dash = tok.find('-');
        if (dash == std::string::npos) throw ParseError(0, "bad edge '" + tok + "'");
        try {
            std::size_t a = 0, b = 0;
            int u = std::stoi(tok.substr(0, dash), &a);
            int v = std::stoi(tok.substr(dash + 1), &b);
            if (a != dash || b != tok.size() - dash - 1) throw std::invalid_argument(tok);
            out.push_back(make_edge(u, v));
        } catch (const std::logic_error&) {
            throw ParseError(0, "bad edge '" + tok + "'");
        }
    }
    return out;
}

std::string serialize(const DecompositionFile& f) {
    const Decomposition& d = f.decomposition;
    std::ostringstream out;
    out << "starforest " << f.version << '\n';
    out << "n " << d.n << '\n';
    out << "k " << d.k << '\n';
    if (d.labels) out << "labels " << d.labels->name() << ' ' << d.labels->param << '\n';
    for (const auto& [key, value] : f.meta) {
        out << "meta " << key;
        if (!value.empty()) out << ' ' << value;
        out << '\n';
    }
    for (const StarForest& forest : d.forests) {
        out << "forest\n";
        for (const Star& s : forest.stars) {
            out << "star " << s.center << " :";
            for (Vertex l : s.leaves) out << ' ' << l;
            out << '\n';
        }
    }
    return out.str();
}

namespace {

int parse_int(const std::string& tok, int line, const std::string& field) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used == tok.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw ParseError(line, "expected an integer for " + field + ", got '" + tok + "'");
}

std::string star_text(const Star& s) {
    std::string out = "S(" + std::to_string(s.center) + ";";
    for (std::size_t i = 0; i < s.leaves.size(); ++i) out += (i ? "," : "") + std::to_string(s.leaves[i]);
    return out + ")";
}

}  // namespace

DecompositionFile parse(const std::string& text) {
    DecompositionFile f;
    Decomposition& d = f.decomposition;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    bool have_header = false, have_n = false, have_k = false;
    std::vector<int> forest_line;
    std::vector<std::vector<int>> star_line;

    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::istringstream ls(raw);
        std::string key;
        if (!(ls >> key) || key[0] == '#') continue;
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);

        if (!have_header) {
            if (key != "starforest" || toks.size() != 1) throw ParseError(line, "expected header 'starforest <version>'");
            f.version = parse_int(toks[0], line, "version");
            if (f.version != kFormatVersion) {
                throw ParseError(line, "unsupported format version " + toks[0] + " (expected " +
                                           std::to_string(kFormatVersion) + ")");
            }
            have_header = true;
        } else if (key == "n" || key == "k") {
            if (toks.size() != 1) throw ParseError(line, "expected '" + key + " <integer>'");
            if (!d.forests.empty()) throw ParseError(line, "'" + key + "' must precede the forests");
            int v = parse_int(toks[0], line, key);
            if (v < 1) throw ParseError(line, key + " must be positive");
            (key == "n" ? d.n : d.k) = v;
            (key == "n" ? have_n : have_k) = true;
        } else if (key == "labels") {
            if (toks.size() != 2) throw ParseError(line, "expected 'labels <scheme> <param>'");
            try {
                d.labels = parse_label_scheme(toks[0], parse_int(toks[1], line, "labels param"));
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(line, e.what());
            }
        } else if (key == "meta") {
            if (toks.empty()) throw ParseError(line, "meta line needs a key");
            std::string value;
            for (std::size_t i = 1; i < toks.size(); ++i) value += (i > 1 ? " " : "") + toks[i];
            if (!f.meta.emplace(toks[0], value).second) throw ParseError(line, "duplicate meta key '" + toks[0] + "'");
        } else if (key == "forest") {
            if (!toks.empty()) throw ParseError(line, "'forest' takes no arguments");
            d.forests.emplace_back();
            forest_line.push_back(line);
            star_line.emplace_back();
        } else if (key == "star") {
            if (d.forests.empty()) throw ParseError(line, "star before any 'forest' line");
            if (toks.size() < 2 || toks[1] != ":") throw ParseError(line, "expected 'star <center> : <leaves...>'");
            Star s{parse_int(toks[0], line, "star center"), {}};
            for (std::size_t i = 2; i < toks.size(); ++i) s.leaves.push_back(parse_int(toks[i], line, "leaf"));
            d.forests.back().stars.push_back(std::move(s));
            star_line.back().push_back(line);
        } else {
            throw ParseError(line, "unknown record '" + key + "'");
        }
    }
    if (!have_header) throw ParseError(line, "empty input, expected header 'starforest <version>'");
    if (!have_n) throw ParseError(0, "missing 'n' record");
    if (!have_k) throw ParseError(0, "missing 'k' record");
    if (d.labels && d.labels->n() != d.n) {
        throw ParseError(0, "labels " + d.labels->name() + " describe " + std::to_string(d.labels->n()) +
                                " vertices, but n = " + std::to_string(d.n));
    }

    for (std::size_t fi = 0; fi < d.forests.size(); ++fi) {
        std::set<Vertex> seen;
        const auto& stars = d.forests[fi].stars;
        for (std::size_t si = 0; si < stars.size(); ++si) {
            const Star& s = stars[si];
            int at = star_line[fi][si];
            std::string where = "forest " + std::to_string(fi) + ", star " + star_text(s) + ": ";
            if (s.leaves.empty()) throw ParseError(at, where + "star has no leaves");
            auto check = [&](Vertex v) {
                if (v < 0 || v >= d.n) throw ParseError(at, where + "vertex " + std::to_string(v) + " out of range");
                if (!seen.insert(v).second) {
                    throw ParseError(at, where + "vertex " + std::to_string(v) + " used twice in the forest");
                }
            };
            for (Vertex l : s.leaves) {
                if (l == s.center) throw ParseError(at, where + "center " + std::to_string(l) + " listed as its own leaf");
            }
            check(s.center);
            for (Vertex l : s.leaves) check(l);
        }
        if (stars.empty()) throw ParseError(forest_line[fi], "forest " + std::to_string(fi) + " is empty");
    }
    return f;
}

DecompositionFile to_file(const ConstructionOutput& out) {
    DecompositionFile f;
    f.decomposition = out.decomposition;
    f.meta["family"] = out.family;
    std::string names;
    for (const auto& p : out.provenance) names += (names.empty() ? "" : " ") + p;
    f.meta["provenance"] = names;
    f.meta["raw_duplicates"] = format_edges(out.raw_duplicates);
    if (!out.leftover.empty()) f.meta["leftover"] = format_edges(out.leftover);
    if (!out.reseated.empty()) f.meta["reseated"] = format_edges(out.reseated);
    return f;
}

namespace {

// Fixed palette, cycled when there are more forests than colors.
constexpr const char* kPalette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#393b79", "#637939", "#8c6d31", "#843c39", "#7b4173", "#3182bd",
};

std::string node_name(const Decomposition& d, Vertex v) {
    std::string label = d.labels ? d.labels->label(v) : std::to_string(v);
    return "  " + std::to_string(v) + " [label=\"" + label + "\"];\n";
}

}  // namespace

std::string export_dot(const Decomposition& d) {
    std::ostringstream out;
    out << "graph decomposition {\n";
    out << "  node [shape=circle];\n";
    for (Vertex v = 0; v < d.n; ++v) out << node_name(d, v);
    for (std::size_t f = 0; f < d.forests.size(); ++f) {
        const char* color = kPalette[f % std::size(kPalette)];
        for (const Star& s : d.forests[f].stars) {
            for (Vertex l : s.leaves) {
                out << "  " << s.center << " -- " << l << " [color=\"" << color << "\"];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

std::vector<std::string> export_dot_per_forest(const Decomposition& d) {
    std::vector<std::string> out;
    for (std::size_t f = 0; f < d.forests.size(); ++f) {
        std::ostringstream g;
        g << "graph forest_" << f << " {\n";
        g << "  node [shape=circle];\n";
        std::set<Vertex> used;
        for (const Star& s : d.forests[f].stars) {
            used.insert(s.center);
            used.insert(s.leaves.begin(), s.leaves.end());
        }
        for (Vertex v : used) g << node_name(d, v);
        for (const Star& s : d.forests[f].stars) {
            g << "  " << s.center << " [style=filled];\n";
            for (Vertex l : s.leaves) g << "  " << s.center << " -- " << l << ";\n";
        }
        g << "}\n";
        out.push_back(g.str());
    }
    return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
        if (!o) throw Error("cannot write " + tmp.string());
        o << content;
        o.flush();
        if (!o) throw Error("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("cannot rename onto " + path + ": " + ec.message());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace starforest
