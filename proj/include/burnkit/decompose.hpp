#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "burnkit/graph.hpp"
#include "burnkit/intmath.hpp"

namespace burnkit {

// Witness for the split-vertex property: vertex x whose incident subtrees are
// all small (<= p) except the one behind the last listed neighbor, while x's
// own side of that last edge is large (> p).
struct SplitCertificate {
    int x = -1;
    std::vector<int> ordered_neighbors;   // v_1..v_m
    std::vector<long long> side_sizes;    // |T_{v_i}(x v_i)| for i < m, then |T_x(x v_m)|
    Ratio p;

    int m() const { return static_cast<int>(ordered_neighbors.size()); }
};

inline bool split_certificate_holds(const Tree& t, const SplitCertificate& c) {
    if (c.m() < 2) return false;
    if (c.ordered_neighbors.size() != c.side_sizes.size()) return false;
    if (static_cast<int>(t.g.adj[c.x].size()) != c.m()) return false;
    long long total = 1; // x itself
    for (int i = 0; i < c.m(); ++i) {
        int v = c.ordered_neighbors[i];
        if (!t.g.has_edge(c.x, v)) return false;
        long long side = static_cast<long long>(component_side(t, v, c.x).size());
        if (i + 1 < c.m()) {
            if (side != c.side_sizes[i]) return false;
            if (!within(side, c.p)) return false;
            total += side;
        } else {
            if (total != c.side_sizes[i]) return false;    // x's side of the last edge
            if (total + side != t.n()) return false;
            if (!exceeds(total, c.p)) return false;
        }
    }
    return true;
}

// Deterministic split-vertex search. Among all directed edges (x,y) whose
// x-side exceeds p, take the one with the smallest x-side (ties: smallest x,
// then smallest y). Minimality forces every other subtree hanging off x to
// have size <= p, which is exactly the certificate. Such an edge always
// exists since a leaf edge has far side n-1 > p.
inline SplitCertificate find_split_vertex(const Tree& t, const Ratio& p) {
    int n = t.n();
    if (n < 3) throw std::invalid_argument("find_split_vertex: need at least 3 vertices");
    if (!p.ge(1) || !p.lt(n - 1))
        throw std::invalid_argument("find_split_vertex: p must lie in [1, n-1)");

    // subtree sizes for the tree rooted at 0
    std::vector<int> parent(n, -1), order;
    order.reserve(n);
    {
        std::vector<int> stack{0};
        std::vector<char> seen(n, 0);
        seen[0] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            order.push_back(u);
            for (int v : t.g.adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    parent[v] = u;
                    stack.push_back(v);
                }
        }
    }
    std::vector<long long> sub(n, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) sub[parent[*it]] += sub[*it];

    // side of x when edge x-v is removed: everything not in v's branch
    auto x_side = [&](int x, int v) -> long long {
        return (parent[v] == x) ? n - sub[v] : sub[x];
    };

    int best_x = -1, best_y = -1;
    long long best = -1;
    for (int v = 0; v < n; ++v) {
        if (parent[v] < 0) continue;
        int u = parent[v];
        auto consider = [&](int x, int y, long long side) {
            if (!exceeds(side, p)) return;
            if (best < 0 || side < best || (side == best && (x < best_x || (x == best_x && y < best_y)))) {
                best = side;
                best_x = x;
                best_y = y;
            }
        };
        consider(v, u, sub[v]);              // v's side of edge (u,v)
        consider(u, v, n - sub[v]);          // u's side of edge (u,v)
    }
    if (best_x < 0) throw std::logic_error("find_split_vertex: no oversized side found");

    SplitCertificate cert;
    cert.x = best_x;
    cert.p = p;
    for (int v : t.g.adj[best_x])
        if (v != best_y) {
            cert.ordered_neighbors.push_back(v);
            cert.side_sizes.push_back(n - x_side(best_x, v)); // the branch behind v
        }
    cert.ordered_neighbors.push_back(best_y);
    cert.side_sizes.push_back(best); // x's own side of the last edge

    if (!split_certificate_holds(t, cert))
        throw std::logic_error("find_split_vertex: certificate failed self-check");
    return cert;
}

// Minimum order of a tree with all internal degrees >= k and at least I internal vertices.
inline long long min_order_for_internals(long long internals, int k) {
    if (internals < 0) throw std::invalid_argument("min_order_for_internals: I must be >= 0");
    if (k < 2) throw std::invalid_argument("min_order_for_internals: k must be >= 2");
    return internals * (k - 1) + 2;
}

// Least possible leaf count of a tree on n vertices with internal degrees >= k.
inline long long min_leaf_count(long long n, int k) {
    if (n < 1) throw std::invalid_argument("min_leaf_count: n must be >= 1");
    if (k < 3) throw std::invalid_argument("min_leaf_count: k must be >= 3");
    return ceil_div(n * (k - 2), k - 1);
}

// Induced subtree on the internal vertices. Connected and dominating by
// construction; both are rechecked by the Tree constructor / callers.
inline RelabeledTree strip_leaves(const Tree& t) {
    if (t.n() <= 2) throw std::domain_error("strip_leaves: tree has no internal vertices");
    return induced_subtree(t, t.internal_vertices());
}

} // namespace burnkit
