#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "burnkit/exact.hpp"
#include "burnkit/generators.hpp"
#include "burnkit/verify.hpp"

using namespace burnkit;

TEST_CASE("example tree has burning number 3") {
    Tree t = nine_vertex_example();
    auto res = exact_burning_number(t.g, 5);
    REQUIRE(res);
    CHECK(res->rounds == 3);
    CHECK(is_valid_schedule(t.g, res->witness));
    CHECK(static_cast<int>(res->witness.sources.size()) == 3);
}

TEST_CASE("stars burn in two rounds") {
    auto res = exact_burning_number(star_graph(6), 4);
    REQUIRE(res);
    CHECK(res->rounds == 2);
}

TEST_CASE("five-cycle needs three rounds") {
    Graph c5(5);
    for (int i = 0; i < 5; ++i) c5.add_edge_unchecked(i, (i + 1) % 5);
    c5.finalize();
    // oracle: no pair of centers with radii {1,0} covers all five vertices
    CHECK(no_schedule_of_length(c5, 2));
    auto res = exact_burning_number(c5, 4);
    REQUIRE(res);
    CHECK(res->rounds == 3);
}

TEST_CASE("paths burn in ceil(sqrt(n)) rounds") {
    for (int n : {1, 2, 3, 4, 5, 9, 10, 16, 17}) {
        auto res = exact_burning_number(path_graph(n), default_exact_budget(n));
        REQUIRE(res);
        int m = 0;
        while (m * m < n) ++m;
        CHECK(res->rounds == m);
    }
}

TEST_CASE("witness is the lexicographically smallest optimum") {
    auto p3 = exact_burning_number(path_graph(3), 3);
    REQUIRE(p3);
    CHECK(p3->witness.sources == std::vector<int>{0, 2});
    auto s6 = exact_burning_number(star_graph(6), 3);
    REQUIRE(s6);
    CHECK(s6->witness.sources == std::vector<int>{0, 0});
}

TEST_CASE("budget exhaustion is reported, not guessed") {
    CHECK_FALSE(exact_burning_number(path_graph(9), 2).has_value());
    CHECK(exact_burning_number(path_graph(9), 3).has_value());
}

TEST_CASE("modified burning with the whole vertex set burns in one round") {
    Graph g = path_graph(6);
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    auto res = exact_modified_burning_number(g, all, 3);
    REQUIRE(res);
    CHECK(res->rounds == 1);
}

TEST_CASE("modified burning on a 3-path with the center free") {
    Graph g = path_graph(3);
    auto res = exact_modified_burning_number(g, {1}, 3);
    REQUIRE(res);
    CHECK(res->rounds == 2);
    // oracle: every single-round choice x_1 leaves an endpoint unburned
    for (int x1 = 0; x1 < 3; ++x1) {
        BurnSchedule s;
        s.sources = {x1};
        s.initial_set = {1};
        CHECK_FALSE(is_valid_schedule(g, s));
    }
}

TEST_CASE("modified burning on the example tree with v4 free") {
    Tree t = nine_vertex_example();
    auto res = exact_modified_burning_number(t.g, {3}, 4);
    REQUIRE(res);
    CHECK(res->rounds == 3);
    // exhaustive check that no two-round modified sequence works
    bool any = false;
    for (int x1 = 0; x1 < 9 && !any; ++x1)
        for (int x2 = 0; x2 < 9 && !any; ++x2) {
            BurnSchedule s;
            s.sources = {x1, x2};
            s.initial_set = {3};
            any = is_valid_schedule(t.g, s);
        }
    CHECK_FALSE(any);
}

TEST_CASE("modified search validates its input") {
    Graph g = path_graph(3);
    CHECK_THROWS_AS(exact_modified_burning_number(g, {}, 3), std::invalid_argument);
    CHECK_THROWS_AS(exact_modified_burning_number(g, {9}, 3), std::invalid_argument);
}

TEST_CASE("vertex cap rejects oversized inputs clearly") {
    Graph big = path_graph(kExactWidth + 1);
    CHECK_THROWS_AS(exact_burning_number(big, 3), std::domain_error);
    setenv("BURNKIT_EXACT_CAP", "10", 1);
    CHECK_THROWS_AS(exact_burning_number(path_graph(11), 3), std::domain_error);
    CHECK(exact_burning_number(path_graph(9), 3).has_value());
    unsetenv("BURNKIT_EXACT_CAP");
}

TEST_CASE("disconnected graphs are rejected") {
    CHECK_THROWS_AS(exact_burning_number(Graph(3), 2), std::domain_error);
}
