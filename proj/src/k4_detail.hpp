#pragma once

#include <array>

#include "starforest/constructions.hpp"

namespace starforest::detail {

// Edges between the end blocks A_0 and A_m, which no symmetric rule covers.
// Read off the figure covering A_0-A_1 edges of K_16: each entry is
// (A_0 index, A_m index) and the forest it belongs to.
struct EndEdge {
    bool from_a0;  // center in A_0 (S_Y) or in A_m (S_Z)
    int forest;    // i of S_Yi / S_Zi
    int center;    // parenthesized index of the center
    std::array<int, 2> leaves;
};

inline constexpr std::array<EndEdge, 8> kEndBlockStars{{
    {true, 1, 3, {2, 3}},
    {true, 1, 2, {0, 1}},
    {true, 0, 1, {2, 3}},
    {true, 0, 0, {0, 1}},
    {false, 1, 3, {0, 2}},
    {false, 1, 1, {1, 3}},
    {false, 0, 2, {0, 2}},
    {false, 0, 0, {1, 3}},
}};

inline void add_end_block_edges(std::array<ForestBuilder, 2>& y, std::array<ForestBuilder, 2>& z, int m) {
    for (const auto& e : kEndBlockStars) {
        int center_block = e.from_a0 ? 0 : m;
        int leaf_block = e.from_a0 ? m : 0;
        auto& fb = e.from_a0 ? y[e.forest] : z[e.forest];
        for (int leaf : e.leaves) {
            fb.add(block_vertex(Block::A, center_block, e.center), block_vertex(Block::A, leaf_block, leaf));
        }
    }
}

// Forests exactly as the short-distance, long-distance and boundary rules
// produce them, deduplicated but not yet reseated.
ConstructionOutput k4_raw(int m);

}  // namespace starforest::detail
