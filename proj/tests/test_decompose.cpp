#include <catch2/catch_amalgamated.hpp>

#include "burnkit/decompose.hpp"
#include "burnkit/generators.hpp"
#include "burnkit/verify.hpp"

using namespace burnkit;

namespace {

// brute-force oracle: does ANY (x, v_m) pair satisfy the split inequalities?
bool split_exists_by_brute_force(const Tree& t, const Ratio& p) {
    int n = t.n();
    for (int x = 0; x < n; ++x) {
        if (t.degree(x) < 2) continue;
        for (int vm : t.g.adj[x]) {
            bool ok = exceeds(static_cast<long long>(component_side(t, x, vm).size()), p);
            for (int v : t.g.adj[x]) {
                if (v == vm) continue;
                ok = ok && within(static_cast<long long>(component_side(t, v, x).size()), p);
            }
            if (ok) return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("split vertex on a star") {
    SplitCertificate c = find_split_vertex(star_tree(6), Ratio(2));
    CHECK(c.x == 0);
    CHECK(c.m() == 5);
    for (int i = 0; i + 1 < c.m(); ++i) CHECK(c.side_sizes[i] == 1);
    CHECK(c.side_sizes.back() == 5);
    CHECK(split_certificate_holds(star_tree(6), c));
}

TEST_CASE("split vertex on the 5-path with threshold 2") {
    Tree p5 = path_tree(5);
    SplitCertificate c = find_split_vertex(p5, Ratio(2));
    CHECK(c.x == 2);
    CHECK(c.side_sizes.back() == 3); // x's side of the last edge
    CHECK(c.side_sizes.front() == 2);
    CHECK(split_certificate_holds(p5, c));
}

TEST_CASE("split vertex on the example tree with threshold 3") {
    Tree t = nine_vertex_example();
    SplitCertificate c = find_split_vertex(t, Ratio(3));
    CHECK(split_certificate_holds(t, c));
    CHECK(split_exists_by_brute_force(t, Ratio(3)));
}

TEST_CASE("split vertex exists even when the tree center sees no oversized side") {
    // On a 9-path with p = 6 both sides of the center have size 4 <= 6, yet a
    // certificate exists further out (x = 2 looking back toward the short end).
    Tree p9 = path_tree(9);
    SplitCertificate c = find_split_vertex(p9, Ratio(6));
    CHECK(split_certificate_holds(p9, c));
}

TEST_CASE("split vertex input validation") {
    CHECK_THROWS_AS(find_split_vertex(path_tree(2), Ratio(1)), std::invalid_argument);
    CHECK_THROWS_AS(find_split_vertex(path_tree(5), Ratio(0)), std::invalid_argument);
    CHECK_THROWS_AS(find_split_vertex(path_tree(5), Ratio(4)), std::invalid_argument);
    CHECK_NOTHROW(find_split_vertex(path_tree(5), Ratio(7, 2)));
}

TEST_CASE("split certificates hold across random trees and thresholds") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        int n = 3 + static_cast<int>(seed % 38);
        Tree t = random_tree(n, seed * 131 + 7);
        for (Ratio p : {Ratio(1), Ratio(n, 4), Ratio(n, 2), Ratio(2 * (n - 1) - 1, 2)}) {
            if (!p.ge(1) || !p.lt(n - 1)) continue;
            SplitCertificate c = find_split_vertex(t, p);
            CHECK(split_certificate_holds(t, c));
        }
    }
}

TEST_CASE("minimum order for a given internal count") {
    CHECK(min_order_for_internals(1, 3) == 4);  // the 4-vertex star
    CHECK(min_order_for_internals(0, 5) == 2);
    CHECK(min_order_for_internals(3, 4) == 11);

    // oracle: a tree degree sequence with I internals of degree >= k needs
    // k*I + (n - I) <= 2(n-1); search the smallest feasible n directly
    for (int k = 3; k <= 6; ++k)
        for (int I = 1; I <= 5; ++I) {
            int n = 2;
            while (static_cast<long long>(k) * I + (n - I) > 2 * (n - 1)) ++n;
            CHECK(min_order_for_internals(I, k) == n);
        }

    // a witness tree: 3 internals of degree 4 on 11 vertices
    Tree t = caterpillar_branching(11, 4, 1);
    CHECK(t.internal_count() == 3);
    CHECK(is_k_branching(t, 4));
}

TEST_CASE("minimum leaf count") {
    CHECK(min_leaf_count(4, 3) == 2);
    CHECK(star_tree(4).leaf_count() >= 2);
    CHECK(min_leaf_count(10, 3) == 5);
    CHECK(min_leaf_count(20, 4) == 14);
    for (uint64_t seed = 0; seed < 10; ++seed)
        CHECK(random_branching_tree(20, 4, seed).leaf_count() >= 14);
}

TEST_CASE("strip leaves") {
    SECTION("star collapses to its center") {
        RelabeledTree r = strip_leaves(star_tree(6));
        CHECK(r.tree.n() == 1);
        CHECK(r.new_to_old == std::vector<int>{0});
    }
    SECTION("example tree keeps its spine") {
        RelabeledTree r = strip_leaves(nine_vertex_example());
        CHECK(r.new_to_old == std::vector<int>{2, 3, 5, 7}); // v3, v4, v6, v8
        CHECK(r.tree.g.edges() ==
              std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    }
    SECTION("stripped branching trees stay below n/(k-1)") {
        for (uint64_t seed = 0; seed < 8; ++seed) {
            Tree t = random_branching_tree(30, 4, seed);
            RelabeledTree r = strip_leaves(t);
            CHECK(r.tree.n() <= 10);
        }
    }
    SECTION("degenerate trees are rejected") {
        CHECK_THROWS_AS(strip_leaves(Tree(Graph(1))), std::domain_error);
        CHECK_THROWS_AS(strip_leaves(path_tree(2)), std::domain_error);
    }
}
