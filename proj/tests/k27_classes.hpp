#pragma once

// Per-class edge attribution of the 27-vertex construction: for a fixed
// column (i, j), which forests cover the edges from (i,j,a) to layer b.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "starforest/constructions.hpp"

namespace k27check {

using starforest::ConstructionOutput;
using starforest::cube_vertex;
using starforest::Vertex;

inline int mod3(int x) { return ((x % 3) + 3) % 3; }
inline std::string S(int i, int j) { return "S_" + std::to_string(mod3(i)) + std::to_string(mod3(j)); }
inline std::string X(int j) { return "S_X" + std::to_string(mod3(j)); }
inline std::string Y(int i) { return "S_Y" + std::to_string(mod3(i)); }

struct Rule {
    int from_layer;
    int to_layer;
    std::vector<std::string> main;    // forests sharing `main_count` edges
    int main_count;
    std::vector<std::string> others;  // one edge each
};

inline std::vector<Rule> rules(int i, int j) {
    return {
        {0, 0, {S(i, j)}, 4, {S(i, j - 1), S(i - 1, j), S(i - 1, j + 1), S(i + 1, j + 1)}},
        {0, 1, {S(i, j)}, 4, {S(i + 1, j), S(i - 1, j - 1), X(j), X(j + 1), X(j - 1)}},
        {0, 2, {S(i, j)}, 4, {S(i, j + 1), S(i + 1, j - 1), Y(i), Y(i + 1), Y(i - 1)}},
        {1, 1, {S(i, j), X(j)}, 4, {S(i - 1, j), S(i + 1, j + 1), X(j + 1), X(j - 1)}},
        {1, 2, {S(i, j), X(j)}, 5, {S(i - 1, j + 1), S(i, j - 1), Y(i + 1), Y(i - 1)}},
        {2, 2, {S(i, j), Y(i)}, 4, {S(i, j - 1), S(i - 1, j + 1), Y(i + 1), Y(i - 1)}},
    };
}

// Forest name covering each edge, keyed by the sorted vertex pair.
inline std::map<std::pair<Vertex, Vertex>, std::string> owners(const ConstructionOutput& out) {
    std::map<std::pair<Vertex, Vertex>, std::string> owner;
    const auto& forests = out.decomposition.forests;
    for (std::size_t f = 0; f < forests.size(); ++f) {
        for (const auto& s : forests[f].stars) {
            for (Vertex l : s.leaves) owner[{std::min(s.center, l), std::max(s.center, l)}] = out.provenance[f];
        }
    }
    return owner;
}

// Empty when every rule holds for every column; otherwise one message per failure.
inline std::vector<std::string> check(const ConstructionOutput& out) {
    std::vector<std::string> failures;
    auto owner = owners(out);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (const Rule& r : rules(i, j)) {
                Vertex u = cube_vertex(i, j, r.from_layer);
                int in_main = 0;
                std::vector<std::string> rest;
                for (int a = 0; a < 3; ++a) {
                    for (int b = 0; b < 3; ++b) {
                        Vertex v = cube_vertex(a, b, r.to_layer);
                        if (v == u) continue;
                        auto it = owner.find({std::min(u, v), std::max(u, v)});
                        std::string name = it == owner.end() ? "<missing>" : it->second;
                        if (std::find(r.main.begin(), r.main.end(), name) != r.main.end()) {
                            ++in_main;
                        } else {
                            rest.push_back(name);
                        }
                    }
                }
                auto want = r.others;
                std::sort(rest.begin(), rest.end());
                std::sort(want.begin(), want.end());
                if (in_main != r.main_count || rest != want) {
                    std::string msg = "column (" + std::to_string(i) + "," + std::to_string(j) + ") layers " +
                                      std::to_string(r.from_layer) + "-" + std::to_string(r.to_layer) + ": " +
                                      std::to_string(in_main) + " in main, others";
                    for (const auto& s : rest) msg += " " + s;
                    failures.push_back(msg);
                }
            }
        }
    }
    return failures;
}

}  // namespace k27check
