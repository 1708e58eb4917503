#include <catch2/catch_amalgamated.hpp>

#include "burnkit/generators.hpp"
#include "burnkit/graph.hpp"

using namespace burnkit;

TEST_CASE("fixed families") {
    CHECK(path_graph(4).edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    Graph s = star_graph(6);
    CHECK(s.degree(0) == 5);
    CHECK(is_k_branching(Tree(s), 5));
    Tree sp = spider(3, 2);
    CHECK(sp.n() == 7);
    CHECK(sp.degree(0) == 3);
    CHECK(sp.leaf_count() == 3);
}

TEST_CASE("random tree is deterministic per seed and satisfies handshake") {
    Tree a = random_tree(25, 11);
    Tree b = random_tree(25, 11);
    CHECK(a.g.edges() == b.g.edges());
    long long degsum = 0;
    for (int v = 0; v < a.n(); ++v) degsum += a.degree(v);
    CHECK(degsum == 2 * (a.n() - 1));
    CHECK(random_tree(25, 12).g.edges() != a.g.edges());
}

TEST_CASE("random branching tree meets its degree bound") {
    Tree t = random_branching_tree(20, 3, 7);
    CHECK(t.n() == 20);
    for (int v = 0; v < t.n(); ++v) {
        int d = t.degree(v);
        CHECK((d == 1 || d >= 3));
    }
    for (int k = 3; k <= 6; ++k)
        for (uint64_t seed = 0; seed < 20; ++seed) {
            int n = k + 1 + static_cast<int>(seed * 3 % 40);
            Tree r = random_branching_tree(n, k, seed);
            CHECK(r.n() == n);
            CHECK(is_k_branching(r, k));
        }
}

TEST_CASE("infeasible branching order is rejected with the smallest feasible n") {
    CHECK_THROWS_WITH(random_branching_tree(4, 5, 1),
                      Catch::Matchers::ContainsSubstring("6"));
    CHECK_NOTHROW(random_branching_tree(2, 5, 1));
    CHECK_NOTHROW(random_branching_tree(6, 5, 1));
}

TEST_CASE("branching caterpillar shape") {
    for (int k = 2; k <= 4; ++k)
        for (int n : {7, 12, 19, 25}) {
            if (n <= k) continue;
            Tree t = caterpillar_branching(n, k, 5);
            CHECK(t.n() == n);
            CHECK(is_k_branching(t, k));
            int path_len = (n - 2) / (k - 1) + 2;
            // path vertices occupy ids 0..path_len-1; everything else hangs off it
            for (int i = 0; i + 1 < path_len; ++i) CHECK(t.g.has_edge(i, i + 1));
            for (int v = path_len; v < n; ++v) {
                CHECK(t.degree(v) == 1);
                int nb = t.g.adj[v][0];
                CHECK(nb < path_len);
            }
        }
}

TEST_CASE("caterpillar with k=2 degenerates to the path") {
    Tree t = caterpillar_branching(9, 2, 3);
    CHECK(t.g.edges() == path_graph(9).edges());
}

TEST_CASE("random connected graph has the requested size") {
    Graph g = random_connected_graph(12, 20, 3);
    CHECK(g.n == 12);
    CHECK(g.edge_count() == 20);
    CHECK(is_connected(g));
    CHECK(random_connected_graph(12, 20, 3).edges() == g.edges());
    CHECK_THROWS_AS(random_connected_graph(5, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_connected_graph(5, 11, 1), std::invalid_argument);
}
