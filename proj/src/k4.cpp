#include "k4_detail.hpp"

namespace starforest {

namespace detail {

ConstructionOutput k4_raw(int m) {
    if (m < 1) throw PreconditionError("k4 construction needs m >= 1");
    const int n = 12 * m + 4;
    auto A = [](int k, int i) { return block_vertex(Block::A, k, i); };
    auto B = [](int k, int i) { return block_vertex(Block::B, k, i); };
    auto C = [](int k, int i) { return block_vertex(Block::C, k, i); };

    std::vector<std::vector<ForestBuilder>> x(m, std::vector<ForestBuilder>(4));
    std::vector<ForestBuilder> sb(m), sc(m);
    std::array<ForestBuilder, 2> y, z;

    // Short-distance rule.
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < 4; ++i) {
            sb[k].add(B(k, i), {A(k, i), C(k, i + 2), A(k + 1, i)});
            sc[k].add(C(k, i), {A(k, i - 1), B(k, i), A(k + 1, i)});

            auto& f = x[k][i];
            f.add(A(k, i), A(k, i - 1));
            if (k >= 1) f.add(A(k, i), {B(k - 1, i + 1), B(k - 1, i + 2), C(k - 1, i - 1), C(k - 1, i + 2)});
            f.add(B(k, i), {A(k, i + 2), B(k, i - 1), B(k, i + 2), C(k, i + 1), A(k + 1, i + 1)});
            f.add(C(k, i), {A(k, i + 1), B(k, i + 1), C(k, i - 1), C(k, i + 2), A(k + 1, i - 1)});
            f.add(A(k + 1, i), A(k + 1, i + 2));
            if (k + 1 <= m - 1) {
                f.add(A(k + 1, i), {B(k + 1, i - 1), B(k + 1, i + 1), C(k + 1, i), C(k + 1, i + 2)});
            }
        }
    }
    for (int i = 0; i < 2; ++i) {
        for (int j : {2 * i, 2 * i + 1}) {
            y[i].add(A(0, j), {B(0, j - 1), B(0, j + 1), C(0, j), C(0, j + 2), A(0, j + 2)});
        }
        // A_m(j+1) as in K_16 rather than A_m(j-1); both cover the same A_m
        // cycle edges, this keeps m = 1 identical to k16().
        for (int j : {i, i + 2}) {
            z[i].add(A(m, j), {B(m - 1, j + 1), B(m - 1, j + 2), C(m - 1, j - 1), C(m - 1, j + 2), A(m, j + 1)});
        }
    }

    // Long-distance rule.
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < 4; ++i) {
            auto& f = x[k][i];
            for (int j = 0; j <= k - 1; ++j) f.add(A(k, i), {A(j, i + 1), A(j, i - 1)});
            for (int j = 0; j <= k - 2; ++j) f.add(A(k, i), {B(j, i - 1), B(j, i), C(j, i), C(j, i + 2)});

            for (int j = 0; j <= k - 1; ++j) f.add(B(k, i), {A(j, i), B(j, i + 1), C(j, i + 1)});
            for (int l = k + 1; l <= m - 1; ++l) f.add(B(k, i), {A(l + 1, i - 1), B(l, i), C(l, i)});

            // This star is centered at C_k(i+2), so it lives in X_{k,i+2}.
            auto& fc = x[k][(i + 2) % 4];
            Vertex c_center = C(k, i + 2);
            for (int j = 0; j <= k - 1; ++j) fc.add(c_center, {A(j, i), B(j, i), C(j, i + 1)});
            for (int l = k + 1; l <= m - 1; ++l) fc.add(c_center, {A(l + 1, i - 1), B(l, i), C(l, i)});

            for (int l = k + 2; l <= m - 1; ++l) {
                f.add(A(k + 1, i), {A(l, i), A(l, i + 2), B(l, i - 1), B(l, i + 1), C(l, i - 1), C(l, i + 1)});
            }
            if (k + 1 <= m - 1) f.add(A(k + 1, i), {A(m, i), A(m, i + 1)});
        }

        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j <= k - 1; ++j) sb[k].add(B(k, i), {A(j, i + 2), B(j, i + 2), C(j, i - 1)});
            for (int l = k + 1; l <= m - 1; ++l) sb[k].add(B(k, i), {B(l, i + 1), C(l, i + 1)});
            for (int l = k + 2; l <= m - 1; ++l) sb[k].add(B(k, i), A(l, i + 2));
            if (k + 1 <= m - 1) sb[k].add(B(k, i), A(m, i));

            for (int j = 0; j <= k - 1; ++j) sc[k].add(C(k, i), {A(j, i), B(j, i + 1), C(j, i)});
            for (int l = k + 1; l <= m - 1; ++l) sc[k].add(C(k, i), {B(l, i), C(l, i - 1)});
            for (int l = k + 2; l <= m - 1; ++l) sc[k].add(C(k, i), A(l, i - 1));
            if (k + 1 <= m - 1) sc[k].add(C(k, i), A(m, i + 2));
        }
    }

    // Boundary rule. Blocks adjacent to an end block are short-distance and
    // A_0 / A_m never pair with themselves here, so A_0 reaches blocks 1..m-1
    // and A_m reaches A_1..A_{m-1} and B/C blocks 0..m-2.
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j <= 1; ++j) {
            int c = 2 * i + j;
            for (int l = 1; l <= m - 1; ++l) {
                y[i].add(A(0, c), {A(l, c), A(l, c + 2), B(l, c + 1), B(l, c - 1), C(l, c + 1), C(l, c - 1)});
            }
            int d = i + 2 * j;
            for (int l = 1; l <= m - 1; ++l) z[i].add(A(m, d), {A(l, d + 1), A(l, d + 2)});
            for (int l = 0; l <= m - 2; ++l) z[i].add(A(m, d), {B(l, d + 2), B(l, d - 1), C(l, d), C(l, d + 1)});
        }
    }
    add_end_block_edges(y, z, m);

    std::vector<StarForest> raw;
    std::vector<std::string> names;
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < 4; ++i) {
            raw.push_back(x[k][i].build());
            names.push_back("S_X" + std::to_string(k) + "_" + std::to_string(i));
        }
    }
    for (int k = 0; k < m; ++k) {
        raw.push_back(sb[k].build());
        names.push_back("S_B" + std::to_string(k));
    }
    for (int k = 0; k < m; ++k) {
        raw.push_back(sc[k].build());
        names.push_back("S_C" + std::to_string(k));
    }
    for (int i = 0; i < 2; ++i) {
        raw.push_back(y[i].build());
        names.push_back("S_Y" + std::to_string(i));
    }
    for (int i = 0; i < 2; ++i) {
        raw.push_back(z[i].build());
        names.push_back("S_Z" + std::to_string(i));
    }
    auto out = finish_construction("k4gen", n, 4, std::move(raw), std::move(names));
    out.decomposition.labels = LabelScheme::block12m4(m);
    return out;
}

}  // namespace detail

ConstructionOutput k4_construction(int m) {
    auto out = detail::k4_raw(m);
    std::vector<std::vector<Vertex>> centers;
    for (const auto& f : out.raw_forests) {
        std::vector<Vertex> c;
        for (const auto& s : f.stars) c.push_back(s.center);
        centers.push_back(std::move(c));
    }
    out.reseated = reseat_edges(out.decomposition.forests, centers, out.decomposition.n);
    return out;
}

}  // namespace starforest
