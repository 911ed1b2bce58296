#include "starforest/verify.hpp"

#include <algorithm>
#include <set>

namespace starforest {

int CoverageReport::count(const Edge& e) const {
    return multiplicity.at(edge_index(e, n));
}

std::size_t CoverageReport::covered_slots() const {
    std::size_t total = 0;
    for (int c : multiplicity) total += static_cast<std::size_t>(c);
    return total;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::valid: return "valid";
        case Verdict::invalid: return "invalid";
        case Verdict::malformed: return "malformed";
    }
    return "malformed";
}

std::string to_string(Recognition r) {
    switch (r) {
        case Recognition::yes: return "yes";
        case Recognition::no: return "no";
        case Recognition::not_applicable: return "not-applicable";
    }
    return "not-applicable";
}

CoverageReport coverage(const Decomposition& d) {
    CoverageReport report;
    report.n = d.n;
    report.total_edges = edge_count(d.n);
    report.multiplicity.assign(report.total_edges, 0);
    for (const auto& f : d.forests) {
        for (const auto& s : f.stars) {
            for (Vertex leaf : s.leaves) ++report.multiplicity[edge_index(make_edge(s.center, leaf), d.n)];
        }
    }
    if (d.n >= 1) {
        std::size_t idx = 0;
        for (const Edge& e : complete_graph_edges(d.n)) {
            int c = report.multiplicity[idx++];
            if (c == 0) report.missing.push_back(e);
            if (c > 1) report.duplicated.emplace_back(e, c);
        }
    }
    return report;
}

ValidationResult validate_decomposition(const Decomposition& d) {
    ValidationResult result;
    if (d.n < 1) {
        result.problems.push_back("n must be at least 1");
        return result;
    }
    if (d.k < 1) {
        result.problems.push_back("k must be at least 1");
        return result;
    }
    for (std::size_t i = 0; i < d.forests.size(); ++i) {
        if (auto defect = forest_defect(d.forests[i], d.n)) {
            result.problems.push_back("forest " + std::to_string(i) + ": " + *defect);
        }
    }
    if (!result.problems.empty()) return result;

    for (std::size_t i = 0; i < d.forests.size(); ++i) {
        auto stars = d.forests[i].stars.size();
        if (stars > static_cast<std::size_t>(d.k)) {
            result.problems.push_back("forest " + std::to_string(i) + " has " + std::to_string(stars) +
                                      " stars, more than k = " + std::to_string(d.k));
        }
    }
    result.coverage = coverage(d);
    bool exact = result.coverage->missing.empty() && result.coverage->duplicated.empty();
    result.verdict = result.problems.empty() && exact ? Verdict::valid : Verdict::invalid;
    return result;
}

std::vector<int> RootHypergraph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const auto& e : hyperedges) {
        for (Vertex v : e) ++deg[v];
    }
    return deg;
}

RootHypergraph root_hypergraph(const Decomposition& d) {
    RootHypergraph rh;
    rh.n = d.n;
    rh.hyperedges.reserve(d.forests.size());
    for (const auto& f : d.forests) {
        std::vector<Vertex> centers;
        for (const auto& s : f.stars) centers.push_back(s.center);
        std::sort(centers.begin(), centers.end());
        rh.hyperedges.push_back(std::move(centers));
    }
    return rh;
}

IsolationCheck check_no_isolated(const RootHypergraph& rh, int forest_count) {
    IsolationCheck check;
    check.applicable = forest_count < rh.n - 1;
    auto deg = rh.degrees();
    for (Vertex v = 0; v < rh.n; ++v) {
        if (deg[v] == 0) check.isolated.push_back(v);
    }
    return check;
}

int DegreeProfile::count(int degree) const {
    auto it = p.find(degree);
    return it == p.end() ? 0 : it->second;
}

DegreeProfile degree_profile(const RootHypergraph& rh) {
    DegreeProfile profile;
    profile.m = static_cast<int>(rh.hyperedges.size());
    profile.degree_sum_applicable = true;
    for (const auto& e : rh.hyperedges) {
        profile.degree_sum += static_cast<long>(e.size());
        if (e.size() == 2) ++profile.r;
        if (e.size() != 2 && e.size() != 3) profile.degree_sum_applicable = false;
    }
    for (int deg : rh.degrees()) ++profile.p[deg];

    long positive = 0;
    long weighted = 0;
    for (auto [j, count] : profile.p) {
        if (j >= 1) positive += count;
        weighted += static_cast<long>(j) * count;
    }
    profile.vertex_count_identity = positive == rh.n;
    profile.degree_sum_identity =
        profile.degree_sum_applicable && weighted == 3L * profile.m - profile.r;
    return profile;
}

B1Report check_b1_inequality(const RootHypergraph& rh) {
    B1Report report;
    report.applicable = std::all_of(rh.hyperedges.begin(), rh.hyperedges.end(),
                                    [](const auto& e) { return e.size() >= 2 && e.size() <= 3; });
    if (!report.applicable) return report;

    auto deg = rh.degrees();
    auto profile = degree_profile(rh);
    long p1 = profile.count(1);
    long p2 = profile.count(2);
    long heavy = 0;
    long heavy_weight = 0;
    for (auto [j, count] : profile.p) {
        if (j >= 3) {
            heavy += static_cast<long>(j) * count;
            heavy_weight += static_cast<long>(2 * j - 5) * count;
        }
    }

    std::set<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : rh.hyperedges) {
        for (Vertex p : e) {
            if (deg[p] != 1) continue;
            for (Vertex q : e) {
                if (deg[q] >= 2) edges.emplace(p, q);
            }
        }
    }
    report.graph.edges.assign(edges.begin(), edges.end());
    report.graph.v1_size = static_cast<int>(p1);

    report.b1_lhs = 2 * p1 - profile.r;
    report.b1_rhs = p2 + heavy;
    report.b1_slack = report.b1_rhs - report.b1_lhs;
    report.edge_count_bound = static_cast<long>(edges.size()) >= report.b1_lhs;

    report.counting_lhs = 5L * rh.n - 9L * profile.m + 2L * profile.r;
    report.counting_rhs = -heavy_weight;
    report.counting_slack = report.counting_rhs - report.counting_lhs;
    return report;
}

Lemma3Report check_lemma3(const Decomposition& d) {
    Lemma3Report report;
    if (!validate_decomposition(d).ok()) {
        report.reason = "decomposition is not valid";
        return report;
    }
    auto forests = static_cast<int>(d.forests.size());
    if (forests >= d.n - 1) {
        report.reason = "needs fewer than n - 1 forests";
        return report;
    }
    auto rh = root_hypergraph(d);
    for (const auto& e : rh.hyperedges) {
        if (e.size() < 2) {
            report.reason = "needs every hyperedge to have at least two vertices";
            return report;
        }
    }
    report.applicable = true;

    auto deg = rh.degrees();
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(d.n));
    for (int i = 0; i < forests; ++i) {
        const auto& e = rh.hyperedges[i];
        for (Vertex v : e) incident[v].push_back(i);
        auto ones = std::count_if(e.begin(), e.end(), [&](Vertex v) { return deg[v] == 1; });
        if (ones >= 2) report.pair_witnesses.push_back(i);
    }
    auto touches_v1 = [&](int edge, Vertex except) {
        const auto& e = rh.hyperedges[edge];
        return std::any_of(e.begin(), e.end(),
                           [&](Vertex v) { return v != except && deg[v] == 1; });
    };
    for (Vertex v = 0; v < d.n; ++v) {
        if (deg[v] != 2) continue;
        if (touches_v1(incident[v][0], v) && touches_v1(incident[v][1], v)) {
            report.degree_two_witnesses.push_back(v);
        }
    }
    return report;
}

namespace {

using LeafSet = std::set<Vertex>;

struct Shape {
    std::vector<std::pair<Vertex, LeafSet>> stars;
};

// Tries to read off the cyclic order v_1..v_{2t} from one two-star forest
// whose stars have t-1 leaves each.
std::optional<std::vector<Vertex>> cyclic_order(const std::vector<Shape>& doubles, int t) {
    std::map<Vertex, LeafSet> out;
    for (const auto& s : doubles) {
        for (const auto& [center, leaves] : s.stars) out[center] = leaves;
    }
    const auto& seed = doubles.front().stars;
    std::vector<Vertex> order;
    for (const auto& [center, leaves] : seed) {
        // Leaf v_{i+j} shares t-1-j leaves with v_i, which orders them.
        std::vector<std::pair<int, Vertex>> ranked;
        for (Vertex x : leaves) {
            auto it = out.find(x);
            if (it == out.end()) return std::nullopt;
            int shared = 0;
            for (Vertex y : it->second) shared += static_cast<int>(leaves.count(y));
            ranked.emplace_back(-shared, x);
        }
        std::sort(ranked.begin(), ranked.end());
        order.push_back(center);
        for (auto [neg, x] : ranked) order.push_back(x);
    }
    if (static_cast<int>(order.size()) != 2 * t) return std::nullopt;
    return order;
}

}  // namespace

Recognition is_broken_double_star(const Decomposition& d) {
    if (d.n % 2 != 0 || d.n < 4) return Recognition::not_applicable;
    const int t = d.n / 2;
    for (const auto& f : d.forests) {
        if (forest_defect(f, d.n)) return Recognition::no;
    }
    auto forests = static_cast<int>(d.forests.size());
    if (forests != t && forests != t + 1) return Recognition::no;

    auto cov = coverage(d);
    if (!cov.duplicated.empty()) return Recognition::no;
    if (forests == t + 1 && !cov.missing.empty()) return Recognition::no;
    if (forests == t && static_cast<int>(cov.missing.size()) != t) return Recognition::no;

    auto is_matching_forest = [&](const StarForest& f) {
        return static_cast<int>(f.stars.size()) == t &&
               std::all_of(f.stars.begin(), f.stars.end(),
                           [](const Star& s) { return s.leaves.size() == 1; });
    };

    // On K_4 every forest is a perfect matching and star orientation is free,
    // so any such family is the pattern under a suitable labeling.
    if (t == 2) {
        bool all_matchings = std::all_of(d.forests.begin(), d.forests.end(), is_matching_forest);
        return all_matchings ? Recognition::yes : Recognition::no;
    }

    std::vector<Shape> doubles;
    std::vector<std::set<Edge>> matchings;
    for (const auto& f : d.forests) {
        bool two_star = f.stars.size() == 2 &&
                        static_cast<int>(f.stars[0].leaves.size()) == t - 1 &&
                        static_cast<int>(f.stars[1].leaves.size()) == t - 1;
        if (two_star && static_cast<int>(doubles.size()) < t) {
            Shape shape;
            for (const auto& s : f.stars) {
                shape.stars.emplace_back(s.center, LeafSet(s.leaves.begin(), s.leaves.end()));
            }
            doubles.push_back(std::move(shape));
        } else if (is_matching_forest(f)) {
            auto edges = forest_edges(f);
            matchings.emplace_back(edges.begin(), edges.end());
        } else {
            return Recognition::no;
        }
    }
    if (static_cast<int>(doubles.size()) != t) return Recognition::no;

    auto order = cyclic_order(doubles, t);
    if (!order) return Recognition::no;
    const auto& v = *order;
    {
        auto sorted = v;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return Recognition::no;
    }

    // Expected forest i: S(v_i; v_{i+1..i+t-1}), S(v_{i+t}; v_{i+t+1..i+2t-1}).
    std::set<std::set<std::pair<Vertex, LeafSet>>> expected;
    for (int i = 0; i < t; ++i) {
        std::set<std::pair<Vertex, LeafSet>> forest;
        for (int base : {i, i + t}) {
            LeafSet leaves;
            for (int j = 1; j < t; ++j) leaves.insert(v[(base + j) % (2 * t)]);
            forest.emplace(v[base], std::move(leaves));
        }
        expected.insert(std::move(forest));
    }
    std::set<std::set<std::pair<Vertex, LeafSet>>> actual;
    for (const auto& shape : doubles) {
        actual.emplace(shape.stars.begin(), shape.stars.end());
    }
    if (actual != expected) return Recognition::no;

    std::set<Edge> antipodal;
    for (int i = 0; i < t; ++i) antipodal.insert(make_edge(v[i], v[i + t]));
    for (const auto& m : matchings) {
        if (m != antipodal) return Recognition::no;
    }
    if (forests == t) {
        std::set<Edge> missing(cov.missing.begin(), cov.missing.end());
        if (missing != antipodal) return Recognition::no;
    }
    return Recognition::yes;
}

}  // namespace starforest
