#include <catch2/catch_amalgamated.hpp>

#include "burnkit/bounds.hpp"
#include "burnkit/generators.hpp"

using namespace burnkit;

TEST_CASE("bound report at the k=3 threshold") {
    BoundReport r = bound_report(118, 3);
    REQUIRE(r.branching);
    REQUIRE(r.leafstrip);
    CHECK(*r.branching == 11);
    CHECK(*r.leafstrip == 11);
    CHECK(r.smallest_tree_bound == "tie");
}

TEST_CASE("bound report at the k=4 threshold") {
    BoundReport r = bound_report(52, 4);
    CHECK(*r.branching == 7);
    CHECK(*r.leafstrip == 7);
}

TEST_CASE("bound report on a single vertex") {
    BoundReport r = bound_report(1, 3);
    REQUIRE(r.branching);
    CHECK(*r.branching == 1);
}

TEST_CASE("bound report omits out-of-range fields") {
    BoundReport r = bound_report(30, 2);
    CHECK_FALSE(r.branching.has_value());
    CHECK_FALSE(r.leafstrip.has_value());
    REQUIRE(r.power);
    CHECK(*r.power == 6); // ceil(sqrt(30)) at k = 2
    REQUIRE(r.caterpillar_lb);
    CHECK(*r.caterpillar_lb == 6);
    CHECK_THROWS_AS(bound_report(0, 3), std::invalid_argument);
}

TEST_CASE("threshold values match the reference row") {
    const std::vector<int> ks{3, 4, 5, 6, 7, 8, 9, 10, 20, 50, 100, 200};
    const std::vector<long long> expected{118, 52, 48, 49, 53, 57, 62, 67, 121, 288, 567, 1127};
    for (size_t i = 0; i < ks.size(); ++i) CHECK(threshold_n(ks[i]) == expected[i]);
    CHECK_THROWS_AS(threshold_n(2), std::invalid_argument);
}

TEST_CASE("threshold boundary is sharp") {
    for (int k : comparison_table_ks()) {
        long long t = threshold_n(k);
        CHECK(branching_beats_leafstrip(t, k));
        CHECK_FALSE(branching_beats_leafstrip(t + 1, k));
    }
}

TEST_CASE("comparison table is complete") {
    auto rows = comparison_table();
    REQUIRE(rows.size() == 12);
    CHECK(rows.front() == std::pair<int, long long>{3, 118});
    CHECK(rows.back() == std::pair<int, long long>{200, 1127});
}

TEST_CASE("caterpillar lower bound values") {
    CHECK(caterpillar_lower_bound(25, 2) == 5);
    CHECK(caterpillar_lower_bound(25, 4) == 3);  // 2^2*3 = 12 < 25 <= 3^2*3
    CHECK(caterpillar_lower_bound(1, 3) == 1);
}

TEST_CASE("branch number of fixed families") {
    CHECK(branch_number(star_graph(6)).value == 5);
    CHECK(branch_number(path_graph(6)).value == 2);
    BranchResult sq = branch_number(graph_power(path_graph(6), 2));
    CHECK(sq.value == 3);
    CHECK(sq.exact);
    REQUIRE(sq.branching_bound);
    CHECK(sq.combined_bound == std::min(*sq.branching_bound, sq.leafstrip_bound));
    CHECK_THROWS_AS(branch_number(path_graph(2)), std::domain_error);
}

TEST_CASE("branch result degrades to a flagged lower bound when out of budget") {
    Graph g = random_connected_graph(20, 40, 5);
    BranchResult r = branch_number(g, 10, 1000);
    CHECK(r.value >= 2);
    CHECK_FALSE(r.exact);
}

TEST_CASE("combined bound omits the branching term at branch 2") {
    BranchResult r = branch_number(path_graph(6));
    CHECK_FALSE(r.branching_bound.has_value());
    CHECK(r.combined_bound == r.leafstrip_bound);
}
