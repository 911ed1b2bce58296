#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "starforest/constructions.hpp"

namespace starforest {

void ForestBuilder::add(Vertex center, std::initializer_list<Vertex> leaves) {
    for (Vertex leaf : leaves) add(center, leaf);
}

void ForestBuilder::add(Vertex center, Vertex leaf) {
    auto it = std::find_if(stars_.begin(), stars_.end(),
                           [&](const Star& s) { return s.center == center; });
    if (it == stars_.end()) {
        stars_.push_back({center, {leaf}});
    } else {
        it->leaves.push_back(leaf);
    }
}

StarForest ForestBuilder::build() const {
    return StarForest{stars_};
}

std::vector<Edge> drop_duplicate_edges(std::vector<StarForest>& forests) {
    std::set<Edge> seen;
    std::set<Edge> repeated;
    for (auto& f : forests) {
        for (auto& s : f.stars) {
            std::erase_if(s.leaves, [&](Vertex leaf) {
                Edge e = make_edge(s.center, leaf);
                if (seen.insert(e).second) return false;
                repeated.insert(e);
                return true;
            });
        }
        std::erase_if(f.stars, [](const Star& s) { return s.leaves.empty(); });
    }
    return {repeated.begin(), repeated.end()};
}

std::vector<Edge> reseat_edges(std::vector<StarForest>& forests,
                               const std::vector<std::vector<Vertex>>& centers, int n) {
    const auto m = static_cast<int>(forests.size());
    if (static_cast<int>(centers.size()) != m) throw PreconditionError("reseat: one center list per forest");
    std::vector<std::vector<char>> is_center(m, std::vector<char>(n, 0));
    for (int f = 0; f < m; ++f) {
        for (Vertex c : centers[f]) is_center[f][c] = 1;
    }

    // An edge sits in slot (f, leaf) with its other endpoint as center.
    struct Placed { Edge e; int f; Vertex leaf; };
    std::vector<Placed> edges;
    for (int f = 0; f < m; ++f) {
        for (const Star& s : forests[f].stars) {
            for (Vertex l : s.leaves) edges.push_back({make_edge(s.center, l), f, l});
        }
    }
    const auto E = static_cast<int>(edges.size());
    auto slot_id = [n](int f, Vertex v) { return f * n + v; };
    std::vector<int> owner(static_cast<std::size_t>(m) * n, -1);
    std::vector<int> slot(E, -1);
    std::vector<int> pending;
    for (int e = 0; e < E; ++e) {
        const auto& p = edges[e];
        Vertex c = p.e.u == p.leaf ? p.e.v : p.e.u;
        int sid = slot_id(p.f, p.leaf);
        if (is_center[p.f][c] && !is_center[p.f][p.leaf] && owner[sid] < 0) {
            owner[sid] = e;
            slot[e] = sid;
        } else {
            pending.push_back(e);
        }
    }

    auto options = [&](int e) {
        std::vector<int> out;
        const Edge& ed = edges[e].e;
        for (int f = 0; f < m; ++f) {
            if (is_center[f][ed.u] && !is_center[f][ed.v]) out.push_back(slot_id(f, ed.v));
            if (is_center[f][ed.v] && !is_center[f][ed.u]) out.push_back(slot_id(f, ed.u));
        }
        return out;
    };

    std::vector<Edge> moved;
    for (int start : pending) {
        // BFS over edges; parent_slot[e] is the slot e would move into.
        std::vector<int> prev_edge(E, -2), via_slot(E, -1);
        std::deque<int> queue{start};
        prev_edge[start] = -1;
        int free_slot = -1, last = -1;
        while (!queue.empty() && free_slot < 0) {
            int e = queue.front();
            queue.pop_front();
            for (int sid : options(e)) {
                if (sid == slot[e]) continue;
                int o = owner[sid];
                if (o < 0) {
                    free_slot = sid;
                    last = e;
                    break;
                }
                if (prev_edge[o] == -2) {
                    prev_edge[o] = e;
                    via_slot[o] = sid;
                    queue.push_back(o);
                }
            }
        }
        if (free_slot < 0) throw Error("reseat: no forest can take edge " + to_string(edges[start].e));
        for (int e = last, sid = free_slot; e >= 0;) {
            if (slot[e] >= 0 && owner[slot[e]] == e) owner[slot[e]] = -1;
            owner[sid] = e;
            slot[e] = sid;
            sid = via_slot[e];
            e = prev_edge[e];
        }
    }

    for (int e = 0; e < E; ++e) {
        const auto& p = edges[e];
        if (slot[e] != slot_id(p.f, p.leaf)) moved.push_back(p.e);
    }

    // Rebuild each forest with centers in their original order; edges that
    // stayed keep their leaf order and moved ones are appended.
    std::vector<std::vector<std::pair<Vertex, Vertex>>> by_forest(m);  // (center, leaf)
    for (int e = 0; e < E; ++e) {
        int f = slot[e] / n;
        Vertex leaf = slot[e] % n;
        Vertex c = edges[e].e.u == leaf ? edges[e].e.v : edges[e].e.u;
        by_forest[f].push_back({c, leaf});
    }
    for (int f = 0; f < m; ++f) {
        std::vector<std::pair<Vertex, Vertex>> kept, extra;
        std::set<std::pair<Vertex, Vertex>> here(by_forest[f].begin(), by_forest[f].end());
        for (const Star& s : forests[f].stars) {
            for (Vertex l : s.leaves) {
                if (here.erase({s.center, l})) kept.push_back({s.center, l});
            }
        }
        for (auto [c, l] : by_forest[f]) {
            if (here.count({c, l})) extra.push_back({c, l});
        }
        std::vector<Star> stars;
        for (Vertex c : centers[f]) {
            Star s{c, {}};
            for (auto [cc, l] : kept) if (cc == c) s.leaves.push_back(l);
            for (auto [cc, l] : extra) if (cc == c) s.leaves.push_back(l);
            if (!s.leaves.empty() && std::none_of(stars.begin(), stars.end(),
                                                  [c](const Star& t) { return t.center == c; })) {
                stars.push_back(std::move(s));
            }
        }
        forests[f].stars = std::move(stars);
    }
    std::sort(moved.begin(), moved.end());
    return moved;
}

ConstructionOutput finish_construction(std::string family, int n, int k,
                                       std::vector<StarForest> raw,
                                       std::vector<std::string> provenance) {
    ConstructionOutput out;
    out.family = std::move(family);
    out.provenance = std::move(provenance);
    out.raw_forests = raw;
    out.raw_duplicates = drop_duplicate_edges(raw);
    out.decomposition.n = n;
    out.decomposition.k = k;
    out.decomposition.forests = std::move(raw);
    return out;
}

namespace {

// Stars S(v_i; v_{i+t}) of the antipodal matching, i = 1..t.
std::vector<Star> antipodal_matching(int t) {
    const int n = 2 * t;
    std::vector<Star> out;
    for (int i = 0; i < t; ++i) out.push_back({i, {(i + t) % n}});
    return out;
}

}  // namespace

ConstructionOutput broken_double_star(int t) {
    if (t < 2) throw PreconditionError("broken double star needs t >= 2");
    const int n = 2 * t;
    auto v = [n](int i) { return ((i - 1) % n + n) % n; };  // v_i, 1-indexed, mod 2t

    std::vector<StarForest> raw;
    std::vector<std::string> names;
    for (int i = 1; i <= t; ++i) {
        ForestBuilder fb;
        for (int j = 1; j <= t - 1; ++j) fb.add(v(i), v(i + j));
        for (int j = 1; j <= t - 1; ++j) fb.add(v(i + t), v(i + t + j));
        raw.push_back(fb.build());
        names.push_back("S_" + std::to_string(i));
    }
    auto out = finish_construction("bds", n, 2, std::move(raw), std::move(names));
    for (const Star& s : antipodal_matching(t)) out.leftover.push_back(make_edge(s.center, s.leaves[0]));
    std::sort(out.leftover.begin(), out.leftover.end());
    return out;
}

ConstructionOutput broken_double_star_completion(int t) {
    auto bds = broken_double_star(t);
    auto raw = bds.raw_forests;
    auto names = bds.provenance;
    raw.push_back({antipodal_matching(t)});
    names.push_back("S_M");
    auto out = finish_construction("bds", 2 * t, t, std::move(raw), std::move(names));
    return out;
}

ConstructionOutput conjecture_construction(int n, int k) {
    if (n % 2 != 0) throw PreconditionError("only even n is supported");
    if (k < 2) throw PreconditionError("conjecture construction needs k >= 2");
    if (n < 2 * k) throw PreconditionError("conjecture construction needs n >= 2k");
    const int t = n / 2;
    auto bds = broken_double_star(t);

    std::vector<StarForest> raw = bds.raw_forests;
    std::vector<std::string> names = bds.provenance;
    const auto matching = antipodal_matching(t);
    for (int start = 0, group = 1; start < t; start += k, ++group) {
        StarForest f;
        for (int i = start; i < std::min(t, start + k); ++i) f.stars.push_back(matching[i]);
        raw.push_back(std::move(f));
        names.push_back("S_M" + std::to_string(group));
    }
    return finish_construction("conjecture", n, k, std::move(raw), std::move(names));
}

ConstructionOutput f2_construction(int n) {
    if (n < 4 || n % 2 != 0) throw PreconditionError("f2 construction needs even n >= 4");
    auto out = conjecture_construction(n, 2);
    out.family = "f2";
    return out;
}

ConstructionOutput star_decomposition(int n) {
    if (n < 2) throw PreconditionError("star decomposition needs n >= 2");
    std::vector<StarForest> raw;
    std::vector<std::string> names;
    for (Vertex c = 0; c + 1 < n; ++c) {
        Star s{c, {}};
        for (Vertex leaf = c + 1; leaf < n; ++leaf) s.leaves.push_back(leaf);
        raw.push_back(StarForest{{s}});
        names.push_back("S_" + std::to_string(c));
    }
    return finish_construction("stars", n, 1, std::move(raw), std::move(names));
}

ConstructionOutput f3_construction(int n) {
    if (n < 27 || n % 27 != 0) throw PreconditionError("f3 construction needs n a positive multiple of 27");
    auto out = blowup(k27(), n / 27);
    out.family = "f3";
    return out;
}

}  // namespace starforest
