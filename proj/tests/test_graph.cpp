#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "burnkit/edgelist.hpp"
#include "burnkit/generators.hpp"
#include "burnkit/graph.hpp"
#include "burnkit/verify.hpp"

using namespace burnkit;

TEST_CASE("bfs distances on a path") {
    Graph g = path_graph(4);
    CHECK(bfs_distances(g, 0) == std::vector<int>{0, 1, 2, 3});
    CHECK_THROWS_AS(bfs_distances(g, 4), std::invalid_argument);
}

TEST_CASE("bfs distance across the example tree") {
    Tree t = nine_vertex_example();
    auto d = bfs_distances(t.g, 2); // v3
    CHECK(d[8] == 4);               // v3 -> v4 -> v6 -> v8 -> v9
}

TEST_CASE("bfs reports unreachable vertices") {
    Graph g(2); // no edges
    CHECK(bfs_distances(g, 0) == std::vector<int>{0, kUnreachable});
}

TEST_CASE("eccentricity radius diameter") {
    CHECK(radius(path_graph(6)) == 3); // path on 2k+2 with k=2 has radius k+1
    Graph s = star_graph(6);
    CHECK(radius(s) == 1);
    CHECK(diameter(s) == 2);
    CHECK(eccentricity(s, 0) == 1);
    CHECK(eccentricity(s, 1) == 2);
    CHECK_THROWS_AS(radius(Graph(2)), std::domain_error);

    // brute-force all-pairs check of the example tree's diameter
    Tree t = nine_vertex_example();
    int dm = 0;
    for (int v = 0; v < t.n(); ++v) {
        auto d = bfs_distances(t.g, v);
        dm = std::max(dm, *std::max_element(d.begin(), d.end()));
    }
    CHECK(dm == 5);
    CHECK(diameter(t.g) == 5);
    CHECK(radius(t.g) <= diameter(t.g));
    CHECK(diameter(t.g) <= 2 * radius(t.g));
}

TEST_CASE("graph power") {
    Graph p5 = path_graph(5);
    SECTION("power 1 is the graph itself") {
        CHECK(graph_power(p5, 1).edges() == p5.edges());
    }
    SECTION("power at the diameter is complete") {
        Graph c = graph_power(p5, diameter(p5));
        CHECK(c.edge_count() == 5 * 4 / 2);
    }
    SECTION("square of the path gains exactly the distance-2 pairs") {
        Graph sq = graph_power(p5, 2);
        std::vector<std::pair<int, int>> expect{{0, 1}, {0, 2}, {1, 2}, {1, 3},
                                                {2, 3}, {2, 4}, {3, 4}};
        CHECK(sq.edges() == expect);
        // oracle: pairwise BFS distances
        for (int u = 0; u < 5; ++u) {
            auto d = bfs_distances(p5, u);
            for (int v = u + 1; v < 5; ++v)
                CHECK(sq.has_edge(u, v) == (d[v] <= 2));
        }
    }
    CHECK_THROWS_AS(graph_power(p5, 0), std::invalid_argument);
}

TEST_CASE("contract edge") {
    SECTION("path contraction") {
        Tree t = path_tree(3);
        RelabeledTree r = contract_edge(t, 1, 2);
        CHECK(r.tree.n() == 2);
        CHECK(r.tree.g.edges() == std::vector<std::pair<int, int>>{{0, 1}});
        CHECK(r.old_to_new == std::vector<int>{0, -1, 1});
    }
    SECTION("star loses one leaf") {
        Tree s = star_tree(5);
        RelabeledTree r = contract_edge(s, 4, 0);
        CHECK(r.tree.n() == 4);
        CHECK(r.tree.degree(0) == 3);
    }
    SECTION("spider mid-leg contraction reattaches the leaf to the center") {
        Tree sp = spider(3, 2); // center 0, legs 1-2, 3-4, 5-6
        RelabeledTree r = contract_edge(sp, 1, 0);
        int leaf_old = 2;
        int leaf_new = r.old_to_new[leaf_old];
        CHECK(r.tree.g.has_edge(r.old_to_new[0], leaf_new));
        CHECK(r.tree.degree(leaf_new) == 1);
    }
    CHECK_THROWS_AS(contract_edge(path_tree(4), 0, 2), std::invalid_argument);
}

TEST_CASE("component on edge removal") {
    Tree p4 = path_tree(4);
    CHECK(component_side(p4, 1, 2) == std::vector<int>{0, 1});
    CHECK(component_side(p4, 2, 1) == std::vector<int>{2, 3});

    Tree t = nine_vertex_example();
    auto side = component_side(t, 3, 5); // v4 side of edge v4-v6
    CHECK(side == std::vector<int>{0, 1, 2, 3, 4});

    Tree s = star_tree(7);
    CHECK(component_side(s, 0, 3).size() == 6);
    CHECK_THROWS_AS(component_side(p4, 0, 3), std::invalid_argument);
}

TEST_CASE("branching predicate and leaf counts") {
    CHECK(is_k_branching(star_tree(6), 5));
    CHECK_FALSE(is_k_branching(path_tree(4), 3));
    // vertex 7 (v8) is internal with degree 2
    Tree t = nine_vertex_example();
    CHECK(t.degree(7) == 2);
    CHECK_FALSE(is_k_branching(t, 3));
    CHECK(t.leaf_count() + t.internal_count() == t.n());
    CHECK(t.leaf_count() == 5);
    Tree single(Graph(1));
    CHECK(single.leaf_count() == 1);
}

TEST_CASE("tree construction rejects non-trees") {
    Graph cyc(3);
    cyc.add_edge_unchecked(0, 1);
    cyc.add_edge_unchecked(1, 2);
    cyc.add_edge_unchecked(2, 0);
    cyc.finalize();
    CHECK_THROWS_AS(Tree(cyc), std::domain_error);

    Graph forest(4);
    forest.add_edge_unchecked(0, 1);
    forest.add_edge_unchecked(2, 3);
    forest.finalize();
    CHECK_THROWS_AS(Tree(forest), std::domain_error);
}

TEST_CASE("edge list parsing and writing") {
    Tree t = nine_vertex_example();
    std::string text = format_edge_list(t.g);
    CHECK(text.substr(0, 4) == "n 9\n");
    Graph back = parse_edge_list(text);
    CHECK(back.edges() == t.g.edges());

    CHECK_THROWS_AS(parse_edge_list("9\n0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 5\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("n 3\n0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("n 3\n0 1\n0 1\n"), std::invalid_argument);
}
