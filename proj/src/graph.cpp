#include "starforest/graph.hpp"

#include <algorithm>
#include <numeric>

namespace starforest {

namespace {

int mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

Edge make_edge(Vertex a, Vertex b) {
    if (a == b) {
        throw MalformedError("self-loop at vertex " + std::to_string(a));
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

std::size_t edge_count(int n) {
    return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
}

std::size_t edge_index(const Edge& e, int n) {
    // Rows 0..u-1 contribute (n-1) + (n-2) + ... + (n-u) edges.
    auto u = static_cast<std::size_t>(e.u);
    auto row_start = u * (2 * static_cast<std::size_t>(n) - u - 1) / 2;
    return row_start + static_cast<std::size_t>(e.v - e.u - 1);
}

std::size_t StarForest::edge_count() const {
    std::size_t total = 0;
    for (const auto& s : stars) total += s.leaves.size();
    return total;
}

std::size_t Decomposition::edge_slots() const {
    std::size_t total = 0;
    for (const auto& f : forests) total += f.edge_count();
    return total;
}

int LabelScheme::n() const {
    switch (kind) {
        case Kind::plain: return param;
        case Kind::f3cube: return 27;
        case Kind::block12m4: return 12 * param + 4;
    }
    return 0;
}

std::string LabelScheme::name() const {
    switch (kind) {
        case Kind::plain: return "plain";
        case Kind::f3cube: return "f3cube";
        case Kind::block12m4: return "block12m4";
    }
    return "plain";
}

std::string LabelScheme::label(Vertex v) const {
    switch (kind) {
        case Kind::plain:
            return std::to_string(v);
        case Kind::f3cube:
            return "(" + std::to_string(v / 9) + "," + std::to_string(v / 3 % 3) + "," +
                   std::to_string(v % 3) + ")";
        case Kind::block12m4: {
            int block = v / 4;
            int index = v % 4;
            int subscript = block / 3;
            const char* letter = "ABC";
            return std::string(1, letter[block % 3]) + "_" + std::to_string(subscript) + "(" +
                   std::to_string(index) + ")";
        }
    }
    return std::to_string(v);
}

LabelScheme parse_label_scheme(const std::string& name, int param) {
    if (name == "plain") {
        if (param < 1) throw PreconditionError("plain labels need n >= 1");
        return LabelScheme::plain(param);
    }
    if (name == "f3cube") return LabelScheme::f3cube();
    if (name == "block12m4") {
        if (param < 1) throw PreconditionError("block12m4 labels need m >= 1");
        return LabelScheme::block12m4(param);
    }
    throw PreconditionError("unknown label scheme '" + name + "'");
}

Vertex cube_vertex(int i, int j, int k) {
    return 9 * mod(i, 3) + 3 * mod(j, 3) + mod(k, 3);
}

Vertex block_vertex(Block block, int subscript, int index) {
    int offset = 0;
    switch (block) {
        case Block::A: offset = 0; break;
        case Block::B: offset = 4; break;
        case Block::C: offset = 8; break;
    }
    return 12 * subscript + offset + mod(index, 4);
}

std::vector<Edge> complete_graph_edges(int n) {
    if (n < 1) throw PreconditionError("complete graph needs n >= 1 (empty graph)");
    std::vector<Edge> edges;
    edges.reserve(edge_count(n));
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return edges;
}

std::optional<std::string> forest_defect(const StarForest& f, int n) {
    std::vector<Vertex> seen;
    for (std::size_t s = 0; s < f.stars.size(); ++s) {
        const Star& star = f.stars[s];
        auto where = "star " + std::to_string(s) + " (center " + std::to_string(star.center) + ")";
        if (star.leaves.empty()) return where + " has no leaves";
        if (star.center < 0 || star.center >= n) return where + " has out-of-range center";
        seen.push_back(star.center);
        for (Vertex leaf : star.leaves) {
            if (leaf < 0 || leaf >= n) {
                return where + " has out-of-range leaf " + std::to_string(leaf);
            }
            if (leaf == star.center) return where + " lists its center as a leaf";
            seen.push_back(leaf);
        }
    }
    std::sort(seen.begin(), seen.end());
    auto dup = std::adjacent_find(seen.begin(), seen.end());
    if (dup != seen.end()) {
        return "vertex " + std::to_string(*dup) + " is used twice within the forest";
    }
    return std::nullopt;
}

std::vector<Edge> forest_edges(const StarForest& f) {
    int bound = 0;
    for (const auto& s : f.stars) {
        bound = std::max(bound, s.center + 1);
        for (Vertex leaf : s.leaves) bound = std::max(bound, leaf + 1);
    }
    if (auto defect = forest_defect(f, bound)) throw MalformedError("malformed forest: " + *defect);
    std::vector<Edge> edges;
    edges.reserve(f.edge_count());
    for (const auto& s : f.stars) {
        for (Vertex leaf : s.leaves) edges.push_back(make_edge(s.center, leaf));
    }
    return edges;
}

Decomposition relabel(const Decomposition& d, const LabelScheme& scheme) {
    if (scheme.n() != d.n) {
        throw PreconditionError("label scheme " + scheme.name() + " describes n = " +
                                std::to_string(scheme.n()) + " but decomposition has n = " +
                                std::to_string(d.n));
    }
    Decomposition out = d;
    out.labels = scheme;
    return out;
}

Decomposition permute(const Decomposition& d, const std::vector<Vertex>& perm) {
    if (static_cast<int>(perm.size()) != d.n) {
        throw PreconditionError("permutation size does not match n");
    }
    std::vector<Vertex> check = perm;
    std::sort(check.begin(), check.end());
    std::vector<Vertex> identity(perm.size());
    std::iota(identity.begin(), identity.end(), 0);
    if (check != identity) throw PreconditionError("not a permutation of 0..n-1");

    Decomposition out = d;
    out.labels.reset();
    for (auto& f : out.forests) {
        for (auto& s : f.stars) {
            s.center = perm[s.center];
            for (auto& leaf : s.leaves) leaf = perm[leaf];
        }
    }
    return out;
}

}  // namespace starforest
