#include "starforest/constructions.hpp"
#include "k4_detail.hpp"

namespace starforest {

ConstructionOutput k16() {
    auto A0 = [](int i) { return block_vertex(Block::A, 0, i); };
    auto B = [](int i) { return block_vertex(Block::B, 0, i); };
    auto C = [](int i) { return block_vertex(Block::C, 0, i); };
    auto A1 = [](int i) { return block_vertex(Block::A, 1, i); };

    std::vector<StarForest> raw;
    std::vector<std::string> names;

    ForestBuilder sb;
    for (int i = 0; i < 4; ++i) sb.add(B(i), {A0(i), C(i + 2), A1(i)});
    ForestBuilder sc;
    for (int i = 0; i < 4; ++i) sc.add(C(i), {A0(i - 1), B(i), A1(i)});

    for (int i = 0; i < 4; ++i) {
        ForestBuilder fb;
        fb.add(A0(i), {A0(i - 1)});
        fb.add(B(i), {A0(i + 2), B(i - 1), B(i + 2), C(i + 1), A1(i + 1)});
        fb.add(C(i), {A0(i + 1), B(i + 1), C(i - 1), C(i + 2), A1(i - 1)});
        fb.add(A1(i), {A1(i + 2)});
        raw.push_back(fb.build());
        names.push_back("S_X0_" + std::to_string(i));
    }
    raw.push_back(sb.build());
    names.push_back("S_B0");
    raw.push_back(sc.build());
    names.push_back("S_C0");

    std::array<ForestBuilder, 2> y;
    std::array<ForestBuilder, 2> z;
    for (int i = 0; i < 2; ++i) {
        for (int j : {2 * i, 2 * i + 1}) y[i].add(A0(j), {B(j - 1), B(j + 1), C(j), C(j + 2), A0(j + 2)});
        for (int j : {i, i + 2}) z[i].add(A1(j), {B(j + 1), B(j + 2), C(j - 1), C(j + 2), A1(j + 1)});
    }
    detail::add_end_block_edges(y, z, 1);
    for (int i = 0; i < 2; ++i) {
        raw.push_back(y[i].build());
        names.push_back("S_Y" + std::to_string(i));
    }
    for (int i = 0; i < 2; ++i) {
        raw.push_back(z[i].build());
        names.push_back("S_Z" + std::to_string(i));
    }

    auto out = finish_construction("k16", 16, 4, std::move(raw), std::move(names));
    out.decomposition.labels = LabelScheme::block12m4(1);
    return out;
}

}  // namespace starforest
