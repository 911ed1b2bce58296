#include <doctest.h>

#include "oracles.hpp"
#include "starforest/bounds.hpp"
#include "starforest/search.hpp"
#include "starforest/verify.hpp"

using namespace starforest;

namespace {

void check_certificate(const SearchResult& r, int n, int k, int m) {
    REQUIRE(r.status == SearchStatus::found);
    REQUIRE(r.certificate);
    CHECK(r.certificate->n == n);
    CHECK(r.certificate->k == k);
    CHECK(r.certificate->forests.size() <= static_cast<std::size_t>(m));
    CHECK(validate_decomposition(*r.certificate).ok());
    CHECK(oracle::is_valid(*r.certificate));
}

}  // namespace

TEST_CASE("exists_decomposition examples") {
    auto k3 = exists_decomposition(3, 1, 2);
    check_certificate(k3, 3, 1, 2);
    CHECK(k3.certificate->forests[0].stars == std::vector<Star>{{0, {1, 2}}});
    CHECK(k3.certificate->forests[1].stars == std::vector<Star>{{1, {2}}});

    auto none = exists_decomposition(4, 2, 2);
    CHECK(none.status == SearchStatus::exhausted_not_found);
    CHECK_FALSE(none.certificate);
    CHECK(none.nodes_explored > 0);

    check_certificate(exists_decomposition(4, 2, 3), 4, 2, 3);
    // A single star has at most n - 1 = 2 of the 3 edges.
    CHECK(exists_decomposition(3, 1, 1).status == SearchStatus::exhausted_not_found);
    CHECK(exists_decomposition(2, 1, 1).status == SearchStatus::found);
    check_certificate(exists_decomposition(1, 1, 1), 1, 1, 1);
}

TEST_CASE("status strings") {
    CHECK(to_string(SearchStatus::found) == "Found");
    CHECK(to_string(SearchStatus::exhausted_not_found) == "ExhaustedNotFound");
    CHECK(to_string(SearchStatus::budget_exceeded) == "BudgetExceeded");
}

TEST_CASE("budgets") {
    SearchBudget tiny;
    tiny.max_nodes = 5;
    auto r = exists_decomposition(7, 2, 5, tiny);
    CHECK(r.status == SearchStatus::budget_exceeded);
    CHECK_FALSE(r.certificate);

    auto f = f_exact(7, 2, tiny);
    CHECK_FALSE(f.complete);
    CHECK_FALSE(f.value);
    CHECK(f.lower <= f.upper);
    CHECK(f.lower >= lower_bound(7, 2).value);

    SearchBudget bad;
    bad.max_nodes = 0;
    CHECK_THROWS_AS(exists_decomposition(4, 2, 3, bad), PreconditionError);
    bad = {};
    bad.parallelism_hint = 0;
    CHECK_THROWS_AS(exists_decomposition(4, 2, 3, bad), PreconditionError);
    bad = {};
    bad.wall_time = std::chrono::milliseconds(0);
    CHECK_THROWS_AS(exists_decomposition(4, 2, 3, bad), PreconditionError);
}

TEST_CASE("f_exact examples") {
    struct Case {
        int n, k, value;
    };
    for (auto c : {Case{4, 3, 3}, Case{5, 2, 4}, Case{6, 2, 5}, Case{4, 2, 3}, Case{3, 3, 2}}) {
        CAPTURE(c.n);
        CAPTURE(c.k);
        auto r = f_exact(c.n, c.k);
        REQUIRE(r.complete);
        CHECK(r.value == c.value);
        CHECK(r.lower == c.value);
        CHECK(r.upper == c.value);
        REQUIRE(r.certificate);
        CHECK(r.certificate->forests.size() == static_cast<std::size_t>(c.value));
        CHECK(oracle::is_valid(*r.certificate));
        // One exhaustion token per m below the value, from the start point up.
        CHECK(r.exhausted.size() == static_cast<std::size_t>(c.value - r.start));
        for (std::size_t i = 0; i < r.exhausted.size(); ++i) CHECK(r.exhausted[i].m == r.start + static_cast<int>(i));
    }
    SUBCASE("the value below is exhausted explicitly") {
        CHECK(exists_decomposition(5, 2, 3).status == SearchStatus::exhausted_not_found);
        CHECK(exists_decomposition(4, 3, 2).status == SearchStatus::exhausted_not_found);
    }
    SUBCASE("trivial start agrees and records every smaller m") {
        auto r = f_exact(5, 2, {}, false);
        CHECK(r.start == 3);
        CHECK(r.value == 4);
        CHECK(r.exhausted.size() == 1);
    }
    SUBCASE("edge cases") {
        auto one = f_exact(1, 1);
        CHECK(one.complete);
        CHECK(one.value == 0);
        CHECK(f_exact(2, 1).value == 1);
        CHECK(f_exact(2, 5).value == 1);
    }
}

TEST_CASE("F_1(n) = n - 1") {
    for (int n = 2; n <= 6; ++n) CHECK(f_exact(n, 1).value == n - 1);
}

TEST_CASE("parallel search keeps the value") {
    SearchBudget par;
    par.parallelism_hint = 3;
    for (int n = 4; n <= 6; ++n) {
        for (int k = 1; k <= 3; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            auto a = f_exact(n, k);
            auto b = f_exact(n, k, par);
            CHECK(a.value == b.value);
            REQUIRE(b.certificate);
            CHECK(oracle::is_valid(*b.certificate));
        }
    }
    auto r = exists_decomposition(4, 2, 2, par);
    CHECK(r.status == SearchStatus::exhausted_not_found);
}

TEST_CASE("single-threaded certificates are reproducible") {
    auto a = exists_decomposition(6, 2, 5);
    auto b = exists_decomposition(6, 2, 5);
    REQUIRE(a.certificate);
    CHECK(*a.certificate == *b.certificate);
    CHECK(a.nodes_explored == b.nodes_explored);
}
