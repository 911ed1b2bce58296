#include "starforest/bounds.hpp"

#include <functional>

#include "starforest/constructions.hpp"
#include "starforest/verify.hpp"

namespace starforest {

int lb_star_forest(int n) {
    if (n < 2) throw PreconditionError("lb_star_forest needs n >= 2");
    return (n + 1) / 2 + 1;
}

std::optional<int> lb_bds(int n, int k) {
    // The uniqueness argument needs t = n/2 >= 3: K_4 splits into the three
    // stars S(0;1,2,3), S(1;2,3), S(2;3), which is no broken double star.
    if (n % 2 != 0 || n <= 2 * k || n < 6) return std::nullopt;
    return n / 2 + 2;
}

int lb_f3(int n) {
    if (n < 3) throw PreconditionError("lb_f3 needs n >= 3");
    return (5 * n + 8) / 9;
}

bool f3_equality_feasible(int n) {
    if (n <= 0 || n % 9 != 0) throw PreconditionError("f3_equality_feasible needs a positive multiple of 9");
    long long nn = n;
    return (nn - 3) * (5 * nn / 9) >= nn * (nn - 1) / 2;
}

int conjecture_value(int n, int k) {
    if (k < 2 || n < k) throw PreconditionError("conjecture_value needs n >= k >= 2");
    long long num = static_cast<long long>(k + 1) * n;
    return static_cast<int>((num + 2 * k - 1) / (2 * k));
}

Bound lower_bound(int n, int k) {
    if (n < 1 || k < 1) throw PreconditionError("lower_bound needs n, k >= 1");
    // Star arboricity of K_n; below 4 vertices the closed form overshoots.
    static constexpr int small[] = {0, 0, 1, 2};
    Bound best{n < 4 ? small[n] : lb_star_forest(n), "akiyama-kano"};
    if (auto b = lb_bds(n, k); b && *b >= best.value) best = {*b, "bds-uniqueness"};
    if (k <= 3 && n >= 3 && lb_f3(n) >= best.value) best = {lb_f3(n), "f3-counting"};
    return best;
}

BoundReport bound_report(int n, int k, bool use_search, const SearchBudget& budget) {
    if (k < 1 || n < k) throw PreconditionError("bound_report needs n >= k >= 1");
    BoundReport rep;
    rep.n = n;
    rep.k = k;
    rep.lower = lower_bound(n, k);
    rep.upper = {n - 1, "construction:stars"};
    if (n == 1) rep.upper_certificate = Decomposition{1, k, {}, std::nullopt};

    auto consider = [&](const std::string& family, const std::function<ConstructionOutput()>& make) {
        auto out = make();
        Decomposition d = out.decomposition;
        d.k = k;  // a k'-star-forest with k' <= k is also a k-star-forest
        if (!validate_decomposition(d).ok()) {
            rep.notes.push_back(family + " construction failed validation; ignored");
            return;
        }
        int size = static_cast<int>(d.forests.size());
        if (size < rep.upper.value || !rep.upper_certificate) {
            rep.upper = {size, "construction:" + family};
            rep.upper_certificate = std::move(d);
        }
    };

    if (n >= 2) consider("stars", [&] { return star_decomposition(n); });
    if (n % 2 == 0 && n >= 4 && k >= 2) {
        consider("f2", [&] { return f2_construction(n); });
        int kk = std::min(k, n / 2);
        consider("conjecture", [&] { return conjecture_construction(n, kk); });
    }
    if (n % 27 == 0 && k >= 3) consider("f3", [&] { return f3_construction(n); });
    if (n % 12 == 4 && n >= 16 && k >= 4) consider("k4gen", [&] { return k4_construction((n - 4) / 12); });

    if (use_search) {
        auto r = f_exact(n, k, budget);
        if (r.lower > rep.lower.value) rep.lower = {r.lower, "search"};
        if (r.complete) {
            if (*r.value < rep.upper.value) {
                rep.upper = {*r.value, "search"};
                rep.upper_certificate = r.certificate;
            }
        } else {
            rep.notes.push_back("search budget exceeded; bracket [" + std::to_string(r.lower) + ", " +
                                std::to_string(rep.upper.value) + "]");
        }
    }

    if (k >= 2) {
        rep.conjecture = conjecture_value(n, k);
        rep.conjecture_refuted_here = rep.upper.value < *rep.conjecture;
    }
    return rep;
}

}  // namespace starforest
