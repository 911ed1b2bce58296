#include "starforest/constructions.hpp"
#include "starforest/verify.hpp"

namespace starforest {

ConstructionOutput blowup(const Decomposition& base, int t) {
    if (t < 1) throw PreconditionError("blowup needs t >= 1");
    const int n = base.n;
    const auto m = static_cast<int>(base.forests.size());
    if (m > n - 2) {
        throw PreconditionError("blowup needs m <= n - 2 forests (m = " + std::to_string(m) +
                                ", n = " + std::to_string(n) + ")");
    }
    if (!validate_decomposition(base).ok()) throw PreconditionError("blowup base is not a valid decomposition");

    auto Q = [t](Vertex a, int b) { return a * t + b; };
    std::vector<StarForest> raw;
    std::vector<std::string> names;
    raw.reserve(static_cast<std::size_t>(m) * t);
    for (int j = 0; j < m; ++j) {
        for (int b = 0; b < t; ++b) {
            StarForest f;
            for (const Star& s : base.forests[j].stars) {
                Star lifted{Q(s.center, b), {}};
                for (Vertex u : s.leaves) {
                    for (int b2 = 0; b2 < t; ++b2) lifted.leaves.push_back(Q(u, b2));
                }
                for (int b2 = 0; b2 < t; ++b2) {
                    if (b2 != b) lifted.leaves.push_back(Q(s.center, b2));
                }
                if (!lifted.leaves.empty()) f.stars.push_back(std::move(lifted));
            }
            raw.push_back(std::move(f));
            names.push_back("S_" + std::to_string(j) + "~" + std::to_string(b));
        }
    }
    auto out = finish_construction("blowup", n * t, base.k, std::move(raw), std::move(names));
    return out;
}

ConstructionOutput blowup(const ConstructionOutput& base, int t) {
    auto out = blowup(base.decomposition, t);
    for (auto& name : out.provenance) {
        auto tilde = name.find('~');
        auto j = std::stoul(name.substr(2, tilde - 2));
        if (j < base.provenance.size()) name = base.provenance[j] + name.substr(tilde);
    }
    return out;
}

}  // namespace starforest
