#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "burnkit/branching.hpp"
#include "burnkit/decompose.hpp"
#include "burnkit/graph.hpp"

namespace burnkit {

struct budget_exceeded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PeelLevel {
    int x = -1;               // attachment vertex, original ids
    std::vector<int> removed; // vertices peeled at this level, original ids
};

struct PeelingLog {
    int k = 0;
    std::vector<PeelLevel> levels;
    int star_center = -1;
};

struct ExtractionResult {
    Tree spanning_tree; // on the original vertex set
    PeelingLog log;
};

// Build a spanning tree of t^k whose internal vertices all have degree >= k+1.
// While the remaining tree has radius > k, find a split vertex with threshold
// k, peel away its small subtrees, and remember the attachment point; finish
// with a star around a center of the small-radius remainder, then hang every
// peeled batch back onto its attachment vertex.
inline ExtractionResult extract_branching_spanning_tree(const Tree& t, int k) {
    if (k < 1) throw std::invalid_argument("extract_branching_spanning_tree: k must be >= 1");
    int d = diameter(t.g);
    if (k > d - 1)
        throw std::domain_error("extract_branching_spanning_tree: k must be <= diameter-1 (= " +
                                std::to_string(d - 1) + "); a radius-" + std::to_string(k) +
                                " star already spans this power");

    const int n = t.n();
    ExtractionResult out;
    out.log.k = k;
    std::vector<std::pair<int, int>> s_edges;

    Tree current = t;
    std::vector<int> to_root(n);
    std::iota(to_root.begin(), to_root.end(), 0);

    while (radius(current.g) > k) {
        if (current.n() < 3 || k >= current.n() - 1)
            throw std::logic_error("extract_branching_spanning_tree: peel level lost its preconditions");
        SplitCertificate cert = find_split_vertex(current, Ratio(k));
        int x = cert.x;
        int y = cert.ordered_neighbors.back();

        std::vector<int> x_side = component_side(current, x, y);
        auto dist = bfs_distances(current.g, x);

        PeelLevel level;
        level.x = to_root[x];
        std::vector<int> keep;
        keep.reserve(current.n());
        std::vector<char> drop(current.n(), 0);
        for (int v : x_side) {
            if (v == x) continue;
            if (dist[v] > k)
                throw std::logic_error("extract_branching_spanning_tree: peeled vertex too far from x");
            drop[v] = 1;
            level.removed.push_back(to_root[v]);
        }
        if (static_cast<int>(level.removed.size()) < k)
            throw std::logic_error("extract_branching_spanning_tree: peel level removed fewer than k vertices");
        for (int v : level.removed) s_edges.emplace_back(level.x, v);
        std::sort(level.removed.begin(), level.removed.end());
        out.log.levels.push_back(level);

        for (int v = 0; v < current.n(); ++v)
            if (!drop[v]) keep.push_back(v);
        RelabeledTree next = induced_subtree(current, keep);
        std::vector<int> to_root2(next.new_to_old.size());
        for (size_t i = 0; i < next.new_to_old.size(); ++i)
            to_root2[i] = to_root[next.new_to_old[i]];
        current = next.tree;
        to_root = std::move(to_root2);
    }

    if (diameter(current.g) < k + 1)
        throw std::logic_error("extract_branching_spanning_tree: remainder shrank below diameter k+1");

    int center = center_vertex(current.g);
    out.log.star_center = to_root[center];
    for (int v = 0; v < current.n(); ++v)
        if (v != center) s_edges.emplace_back(to_root[center], to_root[v]);

    out.spanning_tree = Tree(Graph::from_edges(n, s_edges));

    // invariant scan: branching degrees and edge stretch
    if (!is_k_branching(out.spanning_tree, k + 1))
        throw std::logic_error("extract_branching_spanning_tree: result not (k+1)+-branching");
    for (int v = 0; v < n; ++v) {
        if (out.spanning_tree.degree(v) < 2) continue;
        auto dist = bfs_distances(t.g, v);
        for (int w : out.spanning_tree.g.adj[v])
            if (dist[w] > k)
                throw std::logic_error("extract_branching_spanning_tree: edge stretches beyond k");
    }
    return out;
}

// BFS spanning tree rooted at a minimum-eccentricity vertex (smallest id on
// ties); neighbor order is ascending, so the tree is deterministic.
inline Tree bfs_spanning_tree(const Graph& g, int root) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> queue{root};
    std::vector<char> seen(g.n, 0);
    seen[root] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int v : g.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                edges.emplace_back(u, v);
                queue.push_back(v);
            }
    }
    return Tree(Graph::from_edges(g.n, edges));
}

// Schedule for G^k, 2 <= k <= diam(G). At k = diam the power is complete and
// two rounds suffice; otherwise extract a (k+1)+-branching spanning tree of a
// spanning tree's power and run the branching construction on it.
inline ScheduleCertificate burn_graph_power(const Graph& g, int k) {
    require_connected(g, "burn_graph_power");
    int d = diameter(g);
    if (k < 2 || k > d)
        throw std::invalid_argument("burn_graph_power: k must lie in [2, diam] = [2, " +
                                    std::to_string(d) + "]");
    int bound = ceil_sqrt_ratio(4LL * (k - 1) * g.n, k);
    Graph power = graph_power(g, k);

    if (k == d) {
        ScheduleCertificate cert;
        cert.schedule.sources = {0, g.n > 1 ? 1 : 0};
        cert.bound_used = BoundKind::branching;
        cert.bound_value = bound;
        RecursionStep step;
        step.subcase = "complete-power";
        step.subtree_n = g.n;
        step.bound = bound;
        cert.recursion_log.push_back(step);
        detail::finish_certificate(power, cert, 2, "burn_graph_power");
        return cert;
    }

    Tree spanning = bfs_spanning_tree(g, center_vertex(g));
    ExtractionResult ex = extract_branching_spanning_tree(spanning, k);
    ScheduleCertificate cert = burn_branching_tree(ex.spanning_tree, k + 1);
    if (cert.bound_value > bound && cert.bound_used == BoundKind::branching)
        throw std::logic_error("burn_graph_power: branching bound disagrees with power bound");
    cert.bound_value = bound;
    detail::finish_certificate(power, cert, cert.claimed_rounds, "burn_graph_power");
    return cert;
}

namespace detail {

struct SpanningTreeSearch {
    int n;
    int k_target;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg, undecided_at;
    std::vector<int> dsu;
    long long nodes = 0, node_budget = 0;

    int find(int v) { return dsu[v] == v ? v : dsu[v] = find(dsu[v]); }

    bool degrees_ok() const {
        for (int v = 0; v < n; ++v)
            if (deg[v] >= 2 && deg[v] < k_target) return false;
        return true;
    }

    bool feasible_vertex(int v) const {
        int potential = deg[v] + undecided_at[v];
        if (potential < 1) return false;              // would end isolated
        if (deg[v] >= 2 && potential < k_target) return false;
        return true;
    }

    // true iff some completion of the current partial choice is a spanning
    // tree with every degree 1 or >= k_target
    bool search(size_t idx, int chosen) {
        if (++nodes > node_budget)
            throw budget_exceeded_error("spanning tree search exceeded its node budget");
        if (chosen == n - 1) {
            int root = find(0);
            for (int v = 1; v < n; ++v)
                if (find(v) != root) return false;
            return degrees_ok();
        }
        if (idx == edges.size()) return false;
        if (chosen + static_cast<int>(edges.size() - idx) < n - 1) return false;

        auto [u, v] = edges[idx];
        --undecided_at[u];
        --undecided_at[v];

        // include edges[idx] if it joins two components
        int ru = find(u), rv = find(v);
        if (ru != rv) {
            auto saved_dsu = dsu;
            dsu[ru] = rv;
            ++deg[u];
            ++deg[v];
            if (search(idx + 1, chosen + 1)) return true;
            --deg[u];
            --deg[v];
            dsu = saved_dsu;
        }

        // exclude it
        bool ok = feasible_vertex(u) && feasible_vertex(v) && search(idx + 1, chosen);
        ++undecided_at[u];
        ++undecided_at[v];
        return ok;
    }
};

} // namespace detail

// Exhaustive (pruned) check that g has no spanning tree with every internal
// degree >= k_target. Returns true when none exists. A tree with >= 2
// internal vertices needs >= 2*k_target vertices, and a one-internal tree is
// a star, so small n reduces to a universal-vertex check.
inline bool verify_no_branching_spanning_tree(const Graph& g, int k_target,
                                              int exhaustive_cap = 16,
                                              long long node_budget = 20'000'000) {
    require_connected(g, "verify_no_branching_spanning_tree");
    if (k_target < 1) throw std::invalid_argument("verify_no_branching_spanning_tree: k_target must be >= 1");
    int n = g.n;
    if (n <= 2) return false;       // no internal vertices: vacuously branching
    if (k_target <= 2) return false; // every spanning tree qualifies

    bool star_exists = false;
    for (int v = 0; v < n && !star_exists; ++v)
        if (g.degree(v) == n - 1 && n - 1 >= k_target) star_exists = true;
    if (star_exists) return false;
    if (n < 2 * k_target) return true; // stars were the only possible shape

    if (n > exhaustive_cap)
        throw budget_exceeded_error("verify_no_branching_spanning_tree: " + std::to_string(n) +
                                    " vertices exceeds the exhaustive cap of " +
                                    std::to_string(exhaustive_cap));

    detail::SpanningTreeSearch s;
    s.n = n;
    s.k_target = k_target;
    s.edges = g.edges();
    s.deg.assign(n, 0);
    s.undecided_at.assign(n, 0);
    for (auto [u, v] : s.edges) {
        ++s.undecided_at[u];
        ++s.undecided_at[v];
    }
    s.dsu.resize(n);
    std::iota(s.dsu.begin(), s.dsu.end(), 0);
    s.node_budget = node_budget;
    return !s.search(0, 0);
}

} // namespace burnkit
