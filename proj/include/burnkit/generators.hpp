#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "burnkit/graph.hpp"

namespace burnkit {

// splitmix64: tiny, stateless-friendly, identical output on every platform.
// Seeds are reproducible within this implementation only.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound >= 1; rejection sampling to avoid modulo bias
    uint64_t below(uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
        uint64_t threshold = (~bound + 1) % bound; // 2^64 mod bound
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    int range(int lo, int hi) { // inclusive
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }
};

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge_unchecked(i, i + 1);
    g.finalize();
    return g;
}

// center 0, leaves 1..n-1
inline Graph star_graph(int n) {
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge_unchecked(0, i);
    g.finalize();
    return g;
}

inline Tree path_tree(int n) { return Tree(path_graph(n)); }
inline Tree star_tree(int n) { return Tree(star_graph(n)); }

// center 0 with `legs` paths of `leg_len` edges each
inline Tree spider(int legs, int leg_len) {
    if (legs < 1 || leg_len < 1) throw std::invalid_argument("spider: legs and leg_len must be >= 1");
    Graph g(1 + legs * leg_len);
    int next_id = 1;
    for (int l = 0; l < legs; ++l) {
        int prev = 0;
        for (int j = 0; j < leg_len; ++j) {
            g.add_edge_unchecked(prev, next_id);
            prev = next_id++;
        }
    }
    g.finalize();
    return Tree(g);
}

// Uniform random labeled tree via Pruefer sequence decoding.
inline Tree random_tree(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
    if (n == 1) return Tree(Graph(1));
    if (n == 2) return path_tree(2);
    Rng rng(seed);
    std::vector<int> pruefer(n - 2);
    for (auto& x : pruefer) x = static_cast<int>(rng.below(n));
    std::vector<int> deg(n, 1);
    for (int x : pruefer) ++deg[x];
    Graph g(n);
    // smallest-leaf scan; n is desk scale so the O(n^2) variant keeps it simple
    std::vector<char> used(n, 0);
    for (int x : pruefer) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (!used[leaf] && deg[leaf] == 1) {
                g.add_edge_unchecked(leaf, x);
                used[leaf] = 1;
                --deg[x];
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!used[v] && deg[v] == 1) (a < 0 ? a : b) = v;
    g.add_edge_unchecked(a, b);
    g.finalize();
    return Tree(g);
}

inline int smallest_branching_order(int k) { return k + 1; }

inline void require_branching_order(int n, int k, const char* op) {
    if (n >= 3 && n <= k)
        throw std::domain_error(std::string(op) + ": no tree on " + std::to_string(n) +
                                " vertices has all internal degrees >= " + std::to_string(k) +
                                "; smallest feasible order above 2 is " +
                                std::to_string(smallest_branching_order(k)));
}

// Random tree whose internal vertices all have degree >= k.
// Growth is rejection-free: start from a star on k+1 vertices, repeatedly turn a
// uniformly chosen leaf into an internal vertex by attaching a batch of >= k-1 new
// leaves, then distribute any leftover (< k-1) leaves over existing internals.
inline Tree random_branching_tree(int n, int k, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_branching_tree: n must be >= 1");
    if (k < 2) throw std::invalid_argument("random_branching_tree: k must be >= 2");
    require_branching_order(n, k, "random_branching_tree");
    if (n == 1) return Tree(Graph(1));
    if (n == 2) return path_tree(2);
    if (k == 2) return random_tree(n, seed); // every tree qualifies

    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> leaves, internals;
    internals.push_back(0);
    for (int v = 1; v <= k; ++v) {
        edges.emplace_back(0, v);
        leaves.push_back(v);
    }
    int next_id = k + 1;
    int remaining = n - (k + 1);
    while (remaining >= k - 1) {
        int max_batch = std::min(remaining, (k - 1) + 3);
        int batch = k - 1 + rng.range(0, max_batch - (k - 1));
        size_t pick = rng.below(leaves.size());
        int host = leaves[pick];
        leaves[pick] = leaves.back();
        leaves.pop_back();
        internals.push_back(host);
        for (int j = 0; j < batch; ++j) {
            edges.emplace_back(host, next_id);
            leaves.push_back(next_id++);
        }
        remaining -= batch;
    }
    while (remaining > 0) {
        int host = internals[rng.below(internals.size())];
        edges.emplace_back(host, next_id++);
        --remaining;
    }
    return Tree(Graph::from_edges(n, edges));
}

// Caterpillar with central path on floor((n-2)/(k-1)) + 2 vertices and every
// internal vertex of degree >= k. Path vertices get ids 0..t-1; endpoints stay leaves.
inline Tree caterpillar_branching(int n, int k, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("caterpillar_branching: n must be >= 1");
    if (k < 2) throw std::invalid_argument("caterpillar_branching: k must be >= 2");
    require_branching_order(n, k, "caterpillar_branching");
    if (n <= 2) return path_tree(n);
    int t = (n - 2) / (k - 1) + 2;
    if (t == n) return path_tree(n); // k == 2 or exactly path-sized
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < t; ++i) edges.emplace_back(i, i + 1);
    int next_id = t;
    std::vector<int> need(t, 0);
    for (int i = 1; i + 1 < t; ++i) need[i] = k - 2; // path already contributes 2
    int spare = n - t;
    for (int i = 1; i + 1 < t; ++i) spare -= need[i];
    if (spare < 0)
        throw std::domain_error("caterpillar_branching: infeasible (n,k); smallest feasible order is " +
                                std::to_string(smallest_branching_order(k)));
    for (int i = 1; i + 1 < t; ++i)
        for (int j = 0; j < need[i]; ++j) edges.emplace_back(i, next_id++);
    while (spare-- > 0) {
        int host = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(t - 2)));
        edges.emplace_back(host, next_id++);
    }
    return Tree(Graph::from_edges(n, edges));
}

// Random connected graph: random spanning tree plus uniformly chosen extra edges.
inline Graph random_connected_graph(int n, long long m, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_connected_graph: n must be >= 1");
    long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_m)
        throw std::invalid_argument("random_connected_graph: m must lie in [n-1, n(n-1)/2]");
    Tree t = random_tree(n, seed);
    Rng rng(seed ^ 0x5bf03635ULL);
    std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
    std::vector<std::pair<int, int>> edges = t.g.edges();
    for (auto [u, v] : edges) has[u][v] = has[v][u] = 1;
    long long need = m - (n - 1);
    while (need > 0) {
        int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n));
        if (u == v || has[u][v]) continue;
        has[u][v] = has[v][u] = 1;
        edges.emplace_back(u, v);
        --need;
    }
    return Graph::from_edges(n, edges);
}

} // namespace burnkit
