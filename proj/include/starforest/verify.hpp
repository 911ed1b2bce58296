#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starforest/graph.hpp"

namespace starforest {

struct CoverageReport {
    int n = 0;
    std::size_t total_edges = 0;
    // Indexed by edge_index(e, n).
    std::vector<int> multiplicity;
    std::vector<Edge> missing;
    std::vector<std::pair<Edge, int>> duplicated;

    int count(const Edge& e) const;
    std::size_t covered_slots() const;
};

enum class Verdict { valid, invalid, malformed };

std::string to_string(Verdict v);

struct ValidationResult {
    Verdict verdict = Verdict::malformed;
    // Structural defects (malformed) or component-bound violations (invalid).
    std::vector<std::string> problems;
    // Present unless the input is malformed.
    std::optional<CoverageReport> coverage;

    bool ok() const { return verdict == Verdict::valid; }
};

// Counts how many times each edge of K_n is covered; forests must already be
// well-formed on {0..n-1}.
CoverageReport coverage(const Decomposition& d);

// Valid iff every forest is a well-formed star-forest with at most d.k stars
// and every edge of K_n is covered exactly once.
ValidationResult validate_decomposition(const Decomposition& d);

struct RootHypergraph {
    int n = 0;
    // Sorted centers of forest i.
    std::vector<std::vector<Vertex>> hyperedges;

    std::vector<int> degrees() const;
};

RootHypergraph root_hypergraph(const Decomposition& d);

struct IsolationCheck {
    // Only meaningful when the number of forests is below n - 1.
    bool applicable = false;
    std::vector<Vertex> isolated;

    bool holds() const { return !applicable || isolated.empty(); }
};

IsolationCheck check_no_isolated(const RootHypergraph& rh, int forest_count);

struct DegreeProfile {
    int m = 0;
    // Number of hyperedges of size 2.
    int r = 0;
    // Vertex count per degree, including degree 0.
    std::map<int, int> p;
    long degree_sum = 0;

    // Every vertex has degree >= 1, i.e. sum_{j>=1} p_j = n.
    bool vertex_count_identity = false;
    // All hyperedge sizes lie in {2, 3}, so the degree-sum identity applies.
    bool degree_sum_applicable = false;
    // sum_j j * p_j = 3m - r.
    bool degree_sum_identity = false;

    int count(int degree) const;
};

DegreeProfile degree_profile(const RootHypergraph& rh);

struct B1Graph {
    // (P, Q) with deg(P) = 1 and deg(Q) >= 2 sharing a hyperedge.
    std::vector<std::pair<Vertex, Vertex>> edges;
    int v1_size = 0;
};

struct B1Report {
    // False unless every hyperedge has 2 or 3 vertices: a single-star forest
    // breaks the pairing argument behind both inequalities.
    bool applicable = false;
    B1Graph graph;
    // 2 p_1 - r <= p_2 + sum_{j>=3} j p_j, reported as rhs - lhs.
    long b1_lhs = 0;
    long b1_rhs = 0;
    long b1_slack = 0;
    // |E(B_1)| >= 2 p_1 - r, the lower count used on the V_1 side.
    bool edge_count_bound = false;
    // 5n - 9m + 2r <= -sum_{j>=3} (2j - 5) p_j, reported as rhs - lhs.
    long counting_lhs = 0;
    long counting_rhs = 0;
    long counting_slack = 0;

    bool holds() const { return !applicable || (b1_slack >= 0 && edge_count_bound); }
};

B1Report check_b1_inequality(const RootHypergraph& rh);

struct Lemma3Report {
    bool applicable = false;
    std::string reason;
    // Hyperedges containing two degree-1 vertices.
    std::vector<int> pair_witnesses;
    // Degree-2 vertices whose two hyperedges both contain a degree-1 vertex.
    std::vector<Vertex> degree_two_witnesses;

    bool holds() const {
        return !applicable || (pair_witnesses.empty() && degree_two_witnesses.empty());
    }
};

// Requires a valid decomposition with fewer than n - 1 forests whose
// hyperedges all have at least two vertices; otherwise not applicable.
Lemma3Report check_lemma3(const Decomposition& d);

enum class Recognition { yes, no, not_applicable };

std::string to_string(Recognition r);

// Recognizes the broken double star object on n = 2t vertices: either the
// t two-star forests alone (covering all but a perfect matching) or those t
// forests together with a matching forest, in any order.
Recognition is_broken_double_star(const Decomposition& d);

}  // namespace starforest
