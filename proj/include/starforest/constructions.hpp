#pragma once

#include <string>
#include <vector>

#include "starforest/graph.hpp"

namespace starforest {

struct ConstructionOutput {
    Decomposition decomposition;
    std::string family;
    // Edges covered more than once before deduplication, sorted.
    std::vector<Edge> raw_duplicates;
    // Name of each forest in decomposition order, e.g. "S_X0_2" or "S_B1".
    std::vector<std::string> provenance;
    // Forests as generated, before duplicate edges were dropped.
    std::vector<StarForest> raw_forests;
    // Edges deliberately left out of the forests (broken double star only).
    std::vector<Edge> leftover;
    // Edges moved to a different forest to resolve vertex conflicts, sorted.
    std::vector<Edge> reseated;
};

// Incrementally builds one forest; stars are merged per center and kept in
// first-appearance order.
class ForestBuilder {
public:
    void add(Vertex center, std::initializer_list<Vertex> leaves);
    void add(Vertex center, Vertex leaf);
    StarForest build() const;

private:
    std::vector<Star> stars_;
};

// Drops repeated edges keeping the first occurrence in canonical order
// (forest, then star, then leaf). Stars left without leaves are removed.
// Returns the sorted list of edges that occurred more than once.
std::vector<Edge> drop_duplicate_edges(std::vector<StarForest>& forests);

// Moves edges between forests so that every forest becomes a star forest
// whose centers are a subset of centers[f]. Edges already in a legal
// position stay put where possible; the rest are placed by augmenting paths
// over (forest, leaf) slots. Returns the moved edges, sorted. Throws Error if
// no assignment with these centers exists.
std::vector<Edge> reseat_edges(std::vector<StarForest>& forests,
                               const std::vector<std::vector<Vertex>>& centers, int n);

// Assembles a ConstructionOutput from raw forests: records duplicates, dedups
// and fills in the decomposition.
ConstructionOutput finish_construction(std::string family, int n, int k,
                                       std::vector<StarForest> raw,
                                       std::vector<std::string> provenance);

// The t two-star forests S_1..S_t on v_1..v_{2t} (v_i -> i-1). They cover
// every edge except the antipodal matching v_i v_{i+t}, which is returned in
// `leftover`. Requires t >= 2.
ConstructionOutput broken_double_star(int t);

// The same t forests followed by the matching forest S_M = {S(v_i; v_{i+t})}:
// a decomposition of K_{2t} into t + 1 star-forests.
ConstructionOutput broken_double_star_completion(int t);

// Broken double star plus the antipodal matching split into ceil(n/2k)
// groups of at most k edges. Requires even n >= 2k and k >= 2.
ConstructionOutput conjecture_construction(int n, int k);

// ceil(3n/4) two-star forests for even n >= 4.
ConstructionOutput f2_construction(int n);

// n - 1 single stars S(v; v+1..n-1), valid for every k >= 1 and n >= 2.
ConstructionOutput star_decomposition(int n);

// Fifteen three-star forests on F_3^3.
ConstructionOutput k27();

// Lifts a decomposition of K_n into m <= n-2 forests to one of K_{tn} into
// tm forests. Vertex (a, b) of the blown-up graph is a*t + b.
ConstructionOutput blowup(const Decomposition& base, int t);
ConstructionOutput blowup(const ConstructionOutput& base, int t);

// blowup(k27(), n / 27) for n a positive multiple of 27.
ConstructionOutput f3_construction(int n);

// Ten four-star forests on K_16.
ConstructionOutput k16();

// n/2 + 2 = 6m + 4 four-star forests on n = 12m + 4 vertices. A 4-star-forest
// is also a k-star-forest for every k >= 4.
ConstructionOutput k4_construction(int m);

}  // namespace starforest
