#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace burnkit {

constexpr int kUnreachable = -1; // sentinel for BFS distances
constexpr int kUnburned = 0;     // sentinel for burn rounds (rounds are 1-based)

// Simple undirected graph on dense vertex ids 0..n-1.
// Adjacency lists are kept sorted; no self-loops, no parallel edges.
// Immutable after construction: every operation below is a pure function.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_) {
        if (n_ < 1) throw std::invalid_argument("Graph: need at least one vertex");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge_unchecked(u, v);
        g.finalize();
        return g;
    }

    int degree(int v) const { return static_cast<int>(adj.at(v).size()); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }

    long long edge_count() const {
        long long s = 0;
        for (const auto& a : adj) s += static_cast<long long>(a.size());
        return s / 2;
    }

    // edges with u < v, sorted
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v : adj[u])
                if (u < v) e.emplace_back(u, v);
        return e;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," +
                                        std::to_string(n) + ")");
    }

    // construction helpers; callers must finalize() afterwards
    void add_edge_unchecked(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj[u].push_back(v);
        adj[v].push_back(u);
    }

    void finalize() {
        for (auto& a : adj) {
            std::sort(a.begin(), a.end());
            if (std::adjacent_find(a.begin(), a.end()) != a.end())
                throw std::invalid_argument("duplicate edge");
        }
    }
};

inline std::vector<int> bfs_distances(const Graph& g, int src) {
    g.check_vertex(src);
    std::vector<int> dist(g.n, kUnreachable);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adj[u]) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

inline void require_connected(const Graph& g, const char* op) {
    if (!is_connected(g)) throw std::domain_error(std::string(op) + ": graph must be connected");
}

inline int eccentricity(const Graph& g, int v) {
    require_connected(g, "eccentricity");
    auto d = bfs_distances(g, v);
    return *std::max_element(d.begin(), d.end());
}

// min-eccentricity vertex, smallest id on ties
inline int center_vertex(const Graph& g) {
    require_connected(g, "center_vertex");
    int best = 0, best_ecc = -1;
    for (int v = 0; v < g.n; ++v) {
        auto d = bfs_distances(g, v);
        int e = *std::max_element(d.begin(), d.end());
        if (best_ecc == -1 || e < best_ecc) {
            best_ecc = e;
            best = v;
        }
    }
    return best;
}

inline int radius(const Graph& g) {
    require_connected(g, "radius");
    int r = -1;
    for (int v = 0; v < g.n; ++v) {
        auto d = bfs_distances(g, v);
        int e = *std::max_element(d.begin(), d.end());
        if (r == -1 || e < r) r = e;
    }
    return r;
}

inline int diameter(const Graph& g) {
    require_connected(g, "diameter");
    int dm = 0;
    for (int v = 0; v < g.n; ++v) {
        auto d = bfs_distances(g, v);
        dm = std::max(dm, *std::max_element(d.begin(), d.end()));
    }
    return dm;
}

// G^k: same vertices, edges between pairs at distance <= k. Computed by n BFS runs.
inline Graph graph_power(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("graph_power: k must be >= 1");
    require_connected(g, "graph_power");
    Graph p(g.n);
    for (int u = 0; u < g.n; ++u) {
        auto d = bfs_distances(g, u);
        for (int v = u + 1; v < g.n; ++v)
            if (d[v] >= 1 && d[v] <= k) p.add_edge_unchecked(u, v);
    }
    p.finalize();
    return p;
}

// A Graph certified connected and acyclic on construction.
struct Tree {
    Graph g;

    Tree() = default;
    explicit Tree(Graph graph) : g(std::move(graph)) {
        if (g.edge_count() != g.n - 1)
            throw std::domain_error("Tree: expected n-1 edges, got " +
                                    std::to_string(g.edge_count()));
        if (!is_connected(g)) throw std::domain_error("Tree: graph is disconnected");
    }

    int n() const { return g.n; }
    int degree(int v) const { return g.degree(v); }

    // The single vertex of K_1 counts as a leaf so that leaves+internals = n.
    bool is_leaf(int v) const { return g.degree(v) <= 1; }

    int leaf_count() const {
        int c = 0;
        for (int v = 0; v < g.n; ++v)
            if (is_leaf(v)) ++c;
        return c;
    }

    int internal_count() const { return g.n - leaf_count(); }

    std::vector<int> internal_vertices() const {
        std::vector<int> out;
        for (int v = 0; v < g.n; ++v)
            if (!is_leaf(v)) out.push_back(v);
        return out;
    }
};

// every vertex has degree 1 or degree >= k
inline bool is_k_branching(const Tree& t, int k) {
    for (int v = 0; v < t.n(); ++v) {
        int d = t.degree(v);
        if (d >= 2 && d < k) return false;
    }
    return true;
}

// Vertices of the component containing x after removing tree edge xy.
inline std::vector<int> component_side(const Tree& t, int x, int y) {
    if (!t.g.has_edge(x, y))
        throw std::invalid_argument("component_side: " + std::to_string(x) + "-" +
                                    std::to_string(y) + " is not an edge");
    std::vector<char> seen(t.n(), 0);
    std::vector<int> stack{x}, out;
    seen[x] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        out.push_back(u);
        for (int v : t.g.adj[u]) {
            if (u == x && v == y) continue;
            if (u == y && v == x) continue;
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct RelabeledTree {
    Tree tree;
    std::vector<int> old_to_new; // -1 for dropped vertices
    std::vector<int> new_to_old;
};

// Delete y and attach each former neighbor of y (other than z) to z.
// Vertex ids are compacted; the mapping is returned.
inline RelabeledTree contract_edge(const Tree& t, int y, int z) {
    if (!t.g.has_edge(y, z))
        throw std::invalid_argument("contract_edge: " + std::to_string(y) + "-" +
                                    std::to_string(z) + " is not an edge");
    int n = t.n();
    RelabeledTree out;
    out.old_to_new.assign(n, -1);
    out.new_to_old.reserve(n - 1);
    for (int v = 0; v < n; ++v) {
        if (v == y) continue;
        out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    Graph h(n - 1);
    for (auto [u, v] : t.g.edges()) {
        if (u == y) u = z;
        if (v == y) v = z;
        if (u == v) continue; // the contracted edge itself
        h.add_edge_unchecked(out.old_to_new[u], out.old_to_new[v]);
    }
    h.finalize();
    out.tree = Tree(std::move(h));
    return out;
}

// Induced subtree on a vertex subset (must induce a connected subgraph).
inline RelabeledTree induced_subtree(const Tree& t, const std::vector<int>& keep) {
    RelabeledTree out;
    out.old_to_new.assign(t.n(), -1);
    for (int v : keep) t.g.check_vertex(v);
    std::vector<int> sorted_keep = keep;
    std::sort(sorted_keep.begin(), sorted_keep.end());
    sorted_keep.erase(std::unique(sorted_keep.begin(), sorted_keep.end()), sorted_keep.end());
    for (int v : sorted_keep) {
        out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    Graph h(static_cast<int>(sorted_keep.size()));
    for (int v : sorted_keep)
        for (int w : t.g.adj[v])
            if (v < w && out.old_to_new[w] >= 0)
                h.add_edge_unchecked(out.old_to_new[v], out.old_to_new[w]);
    h.finalize();
    out.tree = Tree(std::move(h)); // throws if the subset is not connected
    return out;
}

} // namespace burnkit
