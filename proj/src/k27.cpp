#include "starforest/constructions.hpp"

namespace starforest {

ConstructionOutput k27() {
    auto P = [](int i, int j, int k) { return cube_vertex(i, j, k); };
    std::vector<StarForest> raw;
    std::vector<std::string> names;

    // S_ij, centered on the column {(i,j,0), (i,j,1), (i,j,2)}.
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            ForestBuilder fb;
            fb.add(P(i, j, 0), {P(i, j + 1, 0), P(i + 1, j, 0), P(i + 1, j - 1, 0), P(i - 1, j - 1, 0),
                                P(i, j - 1, 1), P(i - 1, j, 1), P(i - 1, j + 1, 1), P(i + 1, j + 1, 1),
                                P(i, j - 1, 2), P(i - 1, j, 2), P(i - 1, j + 1, 2), P(i + 1, j + 1, 2)});
            fb.add(P(i, j, 1), {P(i + 1, j, 1), P(i - 1, j - 1, 1),
                                P(i + 1, j, 2), P(i - 1, j - 1, 2),
                                P(i - 1, j, 0), P(i + 1, j + 1, 0)});
            fb.add(P(i, j, 2), {P(i, j + 1, 2), P(i + 1, j - 1, 2),
                                P(i, j + 1, 1), P(i + 1, j - 1, 1),
                                P(i, j - 1, 0), P(i - 1, j + 1, 0)});
            raw.push_back(fb.build());
            names.push_back("S_" + std::to_string(i) + std::to_string(j));
        }
    }

    // S_Xj, centered on X_j = {(i,j,1) : i}.
    for (int j = 0; j < 3; ++j) {
        ForestBuilder fb;
        for (int i = 0; i < 3; ++i) {
            fb.add(P(i, j, 1), {P(i + 1, j - 1, 1), P(i, j + 1, 1),
                                P(i + 1, j - 1, 2), P(i, j + 1, 2), P(i, j, 2),
                                P(i - 1, j + 1, 0), P(i, j - 1, 0), P(i, j, 0)});
        }
        raw.push_back(fb.build());
        names.push_back("S_X" + std::to_string(j));
    }

    // S_Yi, centered on Y_i = {(i,j,2) : j}.
    for (int i = 0; i < 3; ++i) {
        ForestBuilder fb;
        for (int j = 0; j < 3; ++j) {
            fb.add(P(i, j, 2), {P(i + 1, j, 2), P(i - 1, j - 1, 2),
                                P(i + 1, j, 1), P(i - 1, j - 1, 1),
                                P(i - 1, j, 0), P(i + 1, j + 1, 0), P(i, j, 0)});
        }
        raw.push_back(fb.build());
        names.push_back("S_Y" + std::to_string(i));
    }

    auto out = finish_construction("k27", 27, 3, std::move(raw), std::move(names));
    out.decomposition.labels = LabelScheme::f3cube();
    return out;
}

}  // namespace starforest
