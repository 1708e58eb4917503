#include <catch2/catch_amalgamated.hpp>

#include "burnkit/bounds.hpp"
#include "burnkit/exact.hpp"
#include "burnkit/generators.hpp"
#include "burnkit/power.hpp"
#include "burnkit/verify.hpp"

using namespace burnkit;

TEST_CASE("extraction on a short path is the star around the center") {
    ExtractionResult ex = extract_branching_spanning_tree(path_tree(5), 2);
    CHECK(ex.log.levels.empty());
    CHECK(ex.log.star_center == 2);
    CHECK(ex.spanning_tree.degree(2) == 4);
    auto dist = bfs_distances(path_graph(5), 2);
    for (int v : {0, 1, 3, 4}) CHECK(dist[v] <= 2);
}

TEST_CASE("extraction on the 8-path square peels then rebuilds") {
    Tree p8 = path_tree(8);
    ExtractionResult ex = extract_branching_spanning_tree(p8, 2);
    const Tree& s = ex.spanning_tree;
    CHECK(s.n() == 8);
    CHECK(is_k_branching(s, 3));
    for (auto [u, v] : s.g.edges()) {
        auto dist = bfs_distances(p8.g, u);
        CHECK(dist[v] <= 2);
    }
    for (const auto& level : ex.log.levels) CHECK(level.removed.size() >= 2);
}

TEST_CASE("extraction accepts the diameter boundary") {
    // diam(P_4) = 3, so k = 2 = diam - 1 is admissible
    ExtractionResult ex = extract_branching_spanning_tree(path_tree(4), 2);
    CHECK(is_k_branching(ex.spanning_tree, 3));
}

TEST_CASE("extraction rejects out-of-range k") {
    CHECK_THROWS_AS(extract_branching_spanning_tree(path_tree(4), 3), std::domain_error);
    CHECK_THROWS_AS(extract_branching_spanning_tree(path_tree(4), 0), std::invalid_argument);
}

TEST_CASE("extraction invariants across random trees") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        int n = 5 + static_cast<int>(seed * 7 % 50);
        Tree t = random_tree(n, seed + 500);
        int d = diameter(t.g);
        for (int k = 2; k <= 4; ++k) {
            if (k > d - 1) continue;
            ExtractionResult ex = extract_branching_spanning_tree(t, k);
            CHECK(ex.spanning_tree.n() == n);
            CHECK(is_k_branching(ex.spanning_tree, k + 1));
            CHECK(static_cast<long long>(ex.log.levels.size()) * k <= n);
            for (const auto& level : ex.log.levels)
                CHECK(static_cast<int>(level.removed.size()) >= k);
        }
    }
}

TEST_CASE("power schedule at the diameter uses the complete graph") {
    Graph g = path_graph(5);
    ScheduleCertificate cert = burn_graph_power(g, 4);
    CHECK(cert.claimed_rounds == 2);
    CHECK(simulate(graph_power(g, 4), cert.schedule).complete());
}

TEST_CASE("square of a random 30-vertex tree burns within six rounds") {
    Tree t = random_tree(30, 17);
    if (diameter(t.g) >= 3) {
        ScheduleCertificate cert = burn_graph_power(t.g, 2);
        CHECK(cert.claimed_rounds <= 6); // ceil(sqrt(30))
        CHECK(simulate(graph_power(t.g, 2), cert.schedule).complete());
    }
}

TEST_CASE("cube of a random connected graph meets the power bound") {
    Graph g = random_connected_graph(25, 40, 3);
    if (diameter(g) > 3) {
        ScheduleCertificate cert = burn_graph_power(g, 3);
        CHECK(cert.claimed_rounds <= 5); // least m with 9 m^2 >= 200
        CHECK(simulate(graph_power(g, 3), cert.schedule).complete());
        auto exact = exact_burning_number(graph_power(g, 3), 6);
        REQUIRE(exact);
        CHECK(exact->rounds <= cert.claimed_rounds);
    }
}

TEST_CASE("power schedule rejects out-of-range k") {
    Graph g = path_graph(5);
    CHECK_THROWS_AS(burn_graph_power(g, 1), std::invalid_argument);
    CHECK_THROWS_AS(burn_graph_power(g, 5), std::invalid_argument);
}

TEST_CASE("no overly dense spanning trees in path powers") {
    Graph p6sq = graph_power(path_graph(6), 2);
    CHECK(verify_no_branching_spanning_tree(p6sq, 4));
    CHECK_FALSE(verify_no_branching_spanning_tree(p6sq, 3));
    Graph p8cube = graph_power(path_graph(8), 3);
    CHECK(verify_no_branching_spanning_tree(p8cube, 5));
    CHECK_FALSE(verify_no_branching_spanning_tree(star_graph(6), 5));
}

TEST_CASE("spanning tree search respects its budget") {
    Graph g = random_connected_graph(20, 30, 1);
    CHECK_THROWS_AS(verify_no_branching_spanning_tree(g, 4, 16), budget_exceeded_error);
}

TEST_CASE("degree-constrained search agrees with full enumeration on small graphs") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        int n = 5 + static_cast<int>(seed % 3);
        long long maxm = std::min<long long>(static_cast<long long>(n) * (n - 1) / 2, n + 4);
        Graph g = random_connected_graph(n, (n - 1) + static_cast<long long>(seed % (maxm - n + 2)),
                                         seed + 900);
        for (int k = 3; k <= 5; ++k) {
            bool found = false;
            for (const Tree& t : all_spanning_trees(g))
                if (is_k_branching(t, k)) { found = true; break; }
            CHECK(verify_no_branching_spanning_tree(g, k) == !found);
        }
    }
}
