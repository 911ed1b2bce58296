#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starforest/graph.hpp"

namespace starforest {

struct SearchBudget {
    std::int64_t max_nodes = 2'000'000'000;
    std::chrono::milliseconds wall_time{60'000};
    int parallelism_hint = 1;
};

enum class SearchStatus { found, exhausted_not_found, budget_exceeded };

std::string to_string(SearchStatus s);

struct SearchResult {
    SearchStatus status = SearchStatus::budget_exceeded;
    std::optional<Decomposition> certificate;  // present iff found
    std::int64_t nodes_explored = 0;
};

// Is there a decomposition of K_n into at most m k-star-forests?
// Edges are assigned to forests in canonical order. With parallelism_hint = 1
// the certificate is the first one in that order; with more workers the
// subtree split keeps the same answer (lowest-index solution wins).
SearchResult exists_decomposition(int n, int k, int m, const SearchBudget& budget = {});

// Proof that no decomposition into `m` forests exists.
struct ExhaustedToken {
    int m;
    std::int64_t nodes;
};

struct FExactResult {
    bool complete = false;             // value known exactly
    int lower = 0;                     // F_k(n) >= lower
    int upper = 0;                     // F_k(n) <= upper
    std::optional<int> value;          // set iff complete
    std::optional<Decomposition> certificate;
    std::vector<ExhaustedToken> exhausted;  // ascending m, starting at the start point
    int start = 0;                     // first m tried
    std::int64_t nodes_explored = 0;
};

// F_k(n) by ascending m. The start point is the best bound from the bounds
// module, or ceil(n/2) (edge counting only) when use_known_bounds is false.
// A budget overrun leaves complete = false with the bracket [lower, upper].
FExactResult f_exact(int n, int k, const SearchBudget& budget = {}, bool use_known_bounds = true);

}  // namespace starforest
