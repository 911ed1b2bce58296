#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "starforest/constructions.hpp"
#include "starforest/graph.hpp"

using namespace starforest;

TEST_CASE("make_edge canonicalizes and rejects self-loops") {
    CHECK(make_edge(5, 2) == Edge{2, 5});
    CHECK(make_edge(2, 5) == Edge{2, 5});
    CHECK_THROWS_AS(make_edge(3, 3), MalformedError);
    CHECK(to_string(make_edge(7, 1)) == "1-7");
}

TEST_CASE("complete_graph_edges") {
    CHECK(complete_graph_edges(1).empty());
    CHECK(complete_graph_edges(3) == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(complete_graph_edges(27).size() == 27 * 26 / 2);
    CHECK_THROWS_AS(complete_graph_edges(0), PreconditionError);
    CHECK_THROWS_AS(complete_graph_edges(-4), PreconditionError);

    SUBCASE("length and order for every n up to 200") {
        for (int n = 1; n <= 200; ++n) {
            auto edges = complete_graph_edges(n);
            REQUIRE(edges.size() == static_cast<std::size_t>(n) * (n - 1) / 2);
            REQUIRE(edge_count(n) == edges.size());
            REQUIRE(std::is_sorted(edges.begin(), edges.end()));
        }
    }
    SUBCASE("edge_index is the position in the list") {
        auto edges = complete_graph_edges(13);
        for (std::size_t i = 0; i < edges.size(); ++i) CHECK(edge_index(edges[i], 13) == i);
    }
}

TEST_CASE("forest_edges") {
    CHECK(forest_edges({{{0, {1, 2}}}}) == std::vector<Edge>{{0, 1}, {0, 2}});
    CHECK(forest_edges({{{0, {1}}, {2, {3}}}}) == std::vector<Edge>{{0, 1}, {2, 3}});
    // Orientation lives in the star, never in the edge.
    CHECK(forest_edges({{{3, {1}}}}) == std::vector<Edge>{{1, 3}});

    SUBCASE("malformed forests are rejected") {
        CHECK_THROWS_AS(forest_edges({{{0, {0, 1}}}}), MalformedError);
        CHECK_THROWS_AS(forest_edges({{{0, {1}}, {1, {2}}}}), MalformedError);
        CHECK_THROWS_AS(forest_edges({{{0, {1, 1}}}}), MalformedError);
        CHECK_THROWS_AS(forest_edges({{{0, {}}}}), MalformedError);
        CHECK_THROWS_AS(forest_edges({{{0, {-1}}}}), MalformedError);
    }
    SUBCASE("each S_ij of the 27-vertex construction has 24 edges") {
        auto out = k27();
        for (int f = 0; f < 9; ++f) CHECK(forest_edges(out.decomposition.forests[f]).size() == 12 + 6 + 6);
    }
}

TEST_CASE("forest_defect names the problem") {
    CHECK_FALSE(forest_defect({{{0, {1, 2}}, {3, {4}}}}, 5));
    CHECK(forest_defect({{{0, {1}}}}, 1)->find("out-of-range") != std::string::npos);
    CHECK(forest_defect({{{0, {0}}}}, 2)->find("center as a leaf") != std::string::npos);
    CHECK(forest_defect({{{0, {1}}, {2, {1}}}}, 3)->find("used twice") != std::string::npos);
    CHECK(forest_defect({{{0, {}}}}, 3)->find("no leaves") != std::string::npos);
}

TEST_CASE("label schemes") {
    CHECK(LabelScheme::f3cube().n() == 27);
    CHECK(LabelScheme::block12m4(1).n() == 16);
    CHECK(LabelScheme::block12m4(3).n() == 40);
    CHECK(LabelScheme::plain(9).n() == 9);

    SUBCASE("f3cube is (i,j,k) -> 9i+3j+k with indices mod 3") {
        std::set<Vertex> seen;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                for (int k = 0; k < 3; ++k) {
                    Vertex v = cube_vertex(i, j, k);
                    CHECK(v == 9 * i + 3 * j + k);
                    CHECK(LabelScheme::f3cube().label(v) ==
                          "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
                    seen.insert(v);
                }
            }
        }
        CHECK(seen.size() == 27);
        CHECK(cube_vertex(-1, 3, 4) == cube_vertex(2, 0, 1));
    }
    SUBCASE("block12m4 layout") {
        const int m = 2;
        auto scheme = LabelScheme::block12m4(m);
        for (int x = 0; x <= m; ++x) {
            for (int i = 0; i < 4; ++i) {
                CHECK(block_vertex(Block::A, x, i) == 12 * x + i);
                CHECK(scheme.label(12 * x + i) == "A_" + std::to_string(x) + "(" + std::to_string(i) + ")");
            }
        }
        for (int x = 0; x < m; ++x) {
            for (int i = 0; i < 4; ++i) {
                CHECK(block_vertex(Block::B, x, i) == 12 * x + 4 + i);
                CHECK(block_vertex(Block::C, x, i) == 12 * x + 8 + i);
                CHECK(scheme.label(12 * x + 4 + i) == "B_" + std::to_string(x) + "(" + std::to_string(i) + ")");
                CHECK(scheme.label(12 * x + 8 + i) == "C_" + std::to_string(x) + "(" + std::to_string(i) + ")");
            }
        }
        // Parenthesized indices wrap mod 4, subscripts do not.
        CHECK(block_vertex(Block::B, 1, 5) == block_vertex(Block::B, 1, 1));
        CHECK(block_vertex(Block::C, 0, -1) == block_vertex(Block::C, 0, 3));
    }
    SUBCASE("parse_label_scheme") {
        CHECK(parse_label_scheme("f3cube", 0) == LabelScheme::f3cube());
        CHECK(parse_label_scheme("block12m4", 2) == LabelScheme::block12m4(2));
        CHECK(parse_label_scheme("plain", 5) == LabelScheme::plain(5));
        CHECK_THROWS_AS(parse_label_scheme("hex", 1), PreconditionError);
        CHECK_THROWS_AS(parse_label_scheme("block12m4", 0), PreconditionError);
    }
}

TEST_CASE("relabel is metadata only") {
    auto k27_out = k27();
    Decomposition plain = k27_out.decomposition;
    plain.labels.reset();
    auto cube = relabel(plain, LabelScheme::f3cube());
    CHECK(cube.forests == plain.forests);
    REQUIRE(cube.labels);
    CHECK(cube.labels->label(cube_vertex(1, 2, 0)) == "(1,2,0)");

    auto k16_out = k16();
    auto blocks = relabel(k16_out.decomposition, LabelScheme::block12m4(1));
    CHECK(blocks.forests == k16_out.decomposition.forests);
    CHECK(blocks.labels->label(0) == "A_0(0)");
    CHECK(blocks.labels->label(4) == "B_0(0)");
    CHECK(blocks.labels->label(8) == "C_0(0)");
    CHECK(blocks.labels->label(12) == "A_1(0)");

    CHECK_THROWS_AS(relabel(k16_out.decomposition, LabelScheme::f3cube()), PreconditionError);
}

TEST_CASE("permute") {
    Decomposition d{4, 2, {{{{0, {1, 2}}}}, {{{1, {2}}, {3, {0}}}}}, std::nullopt};
    auto p = permute(d, {3, 2, 1, 0});
    CHECK(p.forests[0].stars[0].center == 3);
    CHECK(p.forests[0].stars[0].leaves == std::vector<Vertex>{2, 1});
    CHECK_THROWS_AS(permute(d, {0, 1, 2}), PreconditionError);
    CHECK_THROWS_AS(permute(d, {0, 0, 1, 2}), PreconditionError);

    SUBCASE("permuting a valid decomposition keeps it valid") {
        auto base = k16().decomposition;
        std::vector<Vertex> perm(base.n);
        std::iota(perm.begin(), perm.end(), 0);
        std::mt19937 rng(7);
        for (int round = 0; round < 5; ++round) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(oracle::is_valid(permute(base, perm)));
        }
    }
}

TEST_CASE("forest_edges never repeats an edge or a vertex (generated forests)") {
    std::mt19937 rng(11);
    for (int round = 0; round < 200; ++round) {
        const int n = 2 + static_cast<int>(rng() % 12);
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        // Cut a random prefix into stars of size >= 2.
        StarForest f;
        std::size_t pos = 0;
        while (pos + 1 < order.size() && rng() % 4 != 0) {
            std::size_t size = 2 + rng() % 3;
            if (pos + size > order.size()) break;
            Star s{order[pos], {}};
            for (std::size_t i = 1; i < size; ++i) s.leaves.push_back(order[pos + i]);
            f.stars.push_back(s);
            pos += size;
        }
        auto edges = forest_edges(f);
        std::set<Edge> unique(edges.begin(), edges.end());
        CHECK(unique.size() == edges.size());
        CHECK(edges.size() == f.edge_count());
        CHECK(oracle::is_star_forest(oracle::pairs(f), n, static_cast<int>(f.stars.size())));
    }
}
