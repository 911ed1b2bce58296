#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starforest/graph.hpp"
#include "starforest/search.hpp"

namespace starforest {

// ceil(n/2) + 1: star arboricity of K_n for n >= 4. Requires n >= 2; for
// n = 2, 3 the formula overshoots (F(2) = 1, F(3) = 2).
int lb_star_forest(int n);

// n/2 + 2 for even n > 2k with n >= 6, none otherwise.
std::optional<int> lb_bds(int n, int k);

// ceil(5n/9), a lower bound on F_3(n) and hence on F_1, F_2. Requires n >= 3.
int lb_f3(int n);

// Whether (n-3) * 5n/9 >= n(n-1)/2, i.e. edge counting alone does not rule
// out F_3(n) = 5n/9. Requires n a positive multiple of 9.
bool f3_equality_feasible(int n);

// ceil((k+1)n / 2k). Requires n >= k >= 2.
int conjecture_value(int n, int k);

struct Bound {
    int value = 0;
    std::string source;  // akiyama-kano, bds-uniqueness, f3-counting, construction:<family>, search
};

// Strongest closed-form lower bound on F_k(n), for n >= 1, k >= 1. Ties go to
// the more specific result (f3-counting, then bds-uniqueness).
Bound lower_bound(int n, int k);

struct BoundReport {
    int n = 0;
    int k = 0;
    Bound lower;
    Bound upper;
    std::optional<Decomposition> upper_certificate;
    std::optional<int> conjecture;  // absent for k < 2 or n < k
    bool conjecture_refuted_here = false;
    std::vector<std::string> notes;
};

// Lower bound from the formulas above, upper bound from every applicable
// construction after validation, both tightened by exact search if asked.
BoundReport bound_report(int n, int k, bool use_search = false, const SearchBudget& budget = {});

}  // namespace starforest
