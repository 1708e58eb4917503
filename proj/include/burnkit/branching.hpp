#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "burnkit/burn.hpp"
#include "burnkit/decompose.hpp"
#include "burnkit/exact.hpp"
#include "burnkit/generators.hpp"
#include "burnkit/graph.hpp"
#include "burnkit/intmath.hpp"

namespace burnkit {

enum class BoundKind { branching, leafstrip, exact_value };

inline const char* bound_kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::branching: return "branching";
        case BoundKind::leafstrip: return "leafstrip";
        case BoundKind::exact_value: return "exact";
    }
    return "?";
}

// One level of the schedule construction, recorded for audit. Vertex ids are
// in the coordinates of the tree the certificate was built for.
struct RecursionStep {
    int level = 0;
    std::string subcase;     // case1 | split | terminal-leaf | terminal-star | contract | direct | ...
    int x = -1;              // first source chosen at this level (split vertex)
    int y = -1;              // last-ordered neighbor of x
    long long side_x = 0;    // |T_x(xy)| at this level
    long long side_y = 0;    // |T_y(xy)| at this level
    int subtree_n = 0;       // order of the tree at this level
    int bound = 0;           // schedule-length bound for this level
};

struct ScheduleCertificate {
    BurnSchedule schedule;
    int claimed_rounds = 0;
    int bound_value = 0;     // upper bound this certificate guarantees
    BoundKind bound_used = BoundKind::branching;
    std::vector<RecursionStep> recursion_log;
    std::optional<int> formula_bound; // leaf-strip closed form, reported for comparison only
};

// length bound for a tree with internal degrees >= k on n vertices
inline int branching_length_bound(long long n, int k) {
    if (k < 3) throw std::invalid_argument("branching_length_bound: k must be >= 3");
    return ceil_sqrt_ratio(4 * (k - 2) * n, k - 1);
}

namespace detail {

// Simulate for `rounds` rounds (padding with the first source), keep only the
// rounds that mattered, and check everything burned.
inline void finish_certificate(const Graph& g, ScheduleCertificate& cert, int rounds,
                               const char* who) {
    auto& src = cert.schedule.sources;
    if (src.empty()) throw std::logic_error(std::string(who) + ": empty schedule");
    while (static_cast<int>(src.size()) < rounds) src.push_back(src.front());
    BurnTrace trace = simulate(g, cert.schedule);
    if (!trace.complete())
        throw std::logic_error(std::string(who) + ": constructed schedule left vertices unburned");
    cert.claimed_rounds = trace.rounds_used;
    src.resize(std::max(1, cert.claimed_rounds));
    if (cert.claimed_rounds > cert.bound_value)
        throw std::logic_error(std::string(who) + ": schedule exceeded its certified bound");
}

inline std::vector<int> compose_map(const RelabeledTree& inner, const std::vector<int>& to_root) {
    std::vector<int> out(inner.new_to_old.size());
    for (size_t i = 0; i < inner.new_to_old.size(); ++i) out[i] = to_root[inner.new_to_old[i]];
    return out;
}

// Appends sources (in root coordinates) that burn `t` within
// branching_length_bound(|t|, k) rounds, assuming the first appended source
// ignites in round 1 of the remaining process.
inline void build_branching_sources(const Tree& t, int k, const std::vector<int>& to_root,
                                    int level, std::vector<int>& sources,
                                    std::vector<RecursionStep>& log) {
    const int n = t.n();
    if (n < 3) throw std::logic_error("build_branching_sources: recursion reached n < 3");
    const int r = branching_length_bound(n, k);

    RecursionStep step;
    step.level = level;
    step.subtree_n = n;
    step.bound = r;

    if (n <= 4 * (k - 2) + 1) {
        // Small order: burn every internal vertex, then one extra round for the leaves.
        auto internals = t.internal_vertices();
        for (int v : internals) sources.push_back(to_root[v]);
        sources.push_back(to_root[0]);
        if (static_cast<int>(internals.size()) + 1 > r)
            throw std::logic_error("build_branching_sources: small-order schedule exceeded bound");
        step.subcase = "case1";
        log.push_back(step);
        return;
    }

    if (r < 3) throw std::logic_error("build_branching_sources: bound below 3 in split case");
    long long p = static_cast<long long>(k - 1) * (r - 1);
    if (p < 1 || p >= n - 1)
        throw std::logic_error("build_branching_sources: split threshold left its valid range");

    SplitCertificate cert = find_split_vertex(t, Ratio(p));
    const int x = cert.x;
    const int y = cert.ordered_neighbors.back();
    step.x = to_root[x];
    step.y = to_root[y];
    step.side_x = cert.side_sizes.back();
    step.side_y = n - step.side_x;

    // Every vertex on x's side must sit within r-1 of x, so burning x in
    // round 1 finishes that side without further sources.
    {
        auto dist = bfs_distances(t.g, x);
        for (int v : component_side(t, x, y))
            if (dist[v] > r - 1)
                throw std::logic_error("build_branching_sources: x-side vertex too far from x");
    }

    sources.push_back(to_root[x]);

    if (t.degree(y) == 1) {
        step.subcase = "terminal-leaf";
        log.push_back(step);
        return;
    }

    RelabeledTree side = induced_subtree(t, component_side(t, y, x));
    const Tree& sub = side.tree;
    int y_sub = side.old_to_new[y];
    std::vector<int> side_to_root = compose_map(side, to_root);

    if (sub.degree(y_sub) == k - 1) {
        int z_sub = -1;
        for (int w : sub.g.adj[y_sub])
            if (!sub.is_leaf(w)) {
                z_sub = w;
                break; // adjacency sorted: smallest internal neighbor
            }
        if (z_sub < 0) {
            // y plus leaves only: x burns y in round 2, the leaves in round 3 <= r.
            step.subcase = "terminal-star";
            log.push_back(step);
            return;
        }
        RelabeledTree contracted = contract_edge(sub, y_sub, z_sub);
        if (!is_k_branching(contracted.tree, k))
            throw std::logic_error("build_branching_sources: contraction broke the degree bound");
        int r_next = branching_length_bound(contracted.tree.n(), k);
        if (r_next > r - 1)
            throw std::logic_error("build_branching_sources: recursion bound failed to decrease");
        step.subcase = "contract";
        log.push_back(step);
        build_branching_sources(contracted.tree, k, compose_map(contracted, side_to_root),
                                level + 1, sources, log);
    } else {
        if (!is_k_branching(sub, k))
            throw std::logic_error("build_branching_sources: detached side lost the degree bound");
        int r_next = branching_length_bound(sub.n(), k);
        if (r_next > r - 1)
            throw std::logic_error("build_branching_sources: recursion bound failed to decrease");
        step.subcase = "direct";
        log.push_back(step);
        build_branching_sources(sub, k, side_to_root, level + 1, sources, log);
    }
}

} // namespace detail

// Constructive burning schedule for a tree whose internal vertices all have
// degree >= k (k >= 3). The schedule length is certified to stay within
// ceil(sqrt(4(k-2)n/(k-1)^2)).
inline ScheduleCertificate burn_branching_tree(const Tree& t, int k) {
    if (k < 3) throw std::invalid_argument("burn_branching_tree: k must be >= 3");
    if (!is_k_branching(t, k))
        throw std::invalid_argument("burn_branching_tree: tree has an internal vertex of degree < k");

    ScheduleCertificate cert;
    const int n = t.n();
    if (n <= 2) {
        // Degenerate orders: the closed form can undershoot the true value here
        // (it assumes at least one internal vertex), so certify the exact length.
        for (int v = 0; v < n; ++v) cert.schedule.sources.push_back(v);
        cert.bound_used = BoundKind::exact_value;
        cert.bound_value = n;
        RecursionStep step;
        step.subcase = "trivial";
        step.subtree_n = n;
        step.bound = n;
        cert.recursion_log.push_back(step);
        detail::finish_certificate(t.g, cert, n, "burn_branching_tree");
        return cert;
    }

    int r = branching_length_bound(n, k);
    std::vector<int> identity(n);
    for (int i = 0; i < n; ++i) identity[i] = i;
    detail::build_branching_sources(t, k, identity, 0, cert.schedule.sources, cert.recursion_log);
    cert.bound_used = BoundKind::branching;
    cert.bound_value = r;
    detail::finish_certificate(t.g, cert, r, "burn_branching_tree");
    return cert;
}

// Modified schedule with y burned for free in round 1. Accepts either a tree
// that already meets the degree-k bound, or one whose single degree-(k-1)
// vertex is y; in the latter case y is merged into an internal neighbor and
// the plain construction runs on the merged tree.
inline ScheduleCertificate burn_branching_modified(const Tree& t, int k, int y) {
    if (k < 3) throw std::invalid_argument("burn_branching_modified: k must be >= 3");
    t.g.check_vertex(y);

    if (is_k_branching(t, k)) {
        ScheduleCertificate cert = burn_branching_tree(t, k);
        cert.schedule.initial_set = {y};
        detail::finish_certificate(t.g, cert, cert.bound_value, "burn_branching_modified");
        return cert;
    }

    std::vector<int> too_small, at_k_minus_1;
    for (int v = 0; v < t.n(); ++v) {
        int d = t.degree(v);
        if (d >= 2 && d < k - 1) too_small.push_back(v);
        if (d == k - 1) at_k_minus_1.push_back(v);
    }
    if (!too_small.empty())
        throw std::invalid_argument("burn_branching_modified: internal vertex " +
                                    std::to_string(too_small.front()) + " has degree below " +
                                    std::to_string(k - 1));
    if (at_k_minus_1.size() != 1 || at_k_minus_1.front() != y) {
        std::string who;
        for (int v : at_k_minus_1) who += " " + std::to_string(v);
        throw std::invalid_argument("burn_branching_modified: expected exactly one degree-" +
                                    std::to_string(k - 1) + " vertex equal to " + std::to_string(y) +
                                    "; found" + (who.empty() ? " none" : who));
    }

    ScheduleCertificate cert;
    cert.schedule.initial_set = {y};

    int z = -1;
    for (int w : t.g.adj[y])
        if (!t.is_leaf(w)) {
            z = w;
            break;
        }
    if (z < 0) {
        // y is the hub of a star: its neighbors all burn in round 2
        cert.schedule.sources = {y};
        cert.bound_used = BoundKind::exact_value;
        cert.bound_value = t.n() == 1 ? 1 : 2;
        RecursionStep step;
        step.subcase = "modified-star";
        step.x = y;
        step.subtree_n = t.n();
        step.bound = cert.bound_value;
        cert.recursion_log.push_back(step);
        detail::finish_certificate(t.g, cert, cert.bound_value, "burn_branching_modified");
        return cert;
    }

    RelabeledTree contracted = contract_edge(t, y, z);
    if (!is_k_branching(contracted.tree, k))
        throw std::logic_error("burn_branching_modified: contraction broke the degree bound");
    ScheduleCertificate inner = burn_branching_tree(contracted.tree, k);

    RecursionStep step;
    step.subcase = "modified-contract";
    step.x = y;
    step.y = z;
    step.subtree_n = t.n();
    step.bound = inner.claimed_rounds;
    cert.recursion_log.push_back(step);
    for (const auto& s : inner.recursion_log) {
        RecursionStep lifted = s;
        lifted.level += 1;
        if (lifted.x >= 0) lifted.x = contracted.new_to_old[lifted.x];
        if (lifted.y >= 0) lifted.y = contracted.new_to_old[lifted.y];
        cert.recursion_log.push_back(lifted);
    }
    for (int s : inner.schedule.sources) cert.schedule.sources.push_back(contracted.new_to_old[s]);
    cert.bound_used = inner.bound_used;
    cert.bound_value = inner.claimed_rounds; // the merged tree's schedule length
    detail::finish_certificate(t.g, cert, inner.claimed_rounds, "burn_branching_modified");
    return cert;
}

enum class InnerStrategy { exact_solver, recursive };

namespace detail {

struct InnerSchedule {
    std::vector<int> sources;
    int rounds = 0;
    int bound = 0;
    std::vector<RecursionStep> log;
};

// Any-tree fallback: use the branching construction when the internal degrees
// allow it, otherwise peel the leaves and recurse, paying one extra round.
inline InnerSchedule burn_tree_by_recursion(const Tree& t, int level) {
    InnerSchedule out;
    int n = t.n();
    if (n <= 2) {
        for (int v = 0; v < n; ++v) out.sources.push_back(v);
        out.rounds = out.bound = n;
        return out;
    }
    int min_internal_degree = n;
    for (int v = 0; v < n; ++v)
        if (!t.is_leaf(v)) min_internal_degree = std::min(min_internal_degree, t.degree(v));
    if (min_internal_degree >= 3) {
        ScheduleCertificate cert = burn_branching_tree(t, min_internal_degree);
        out.sources = cert.schedule.sources;
        out.rounds = cert.claimed_rounds;
        out.bound = cert.bound_value;
        out.log = cert.recursion_log;
        for (auto& s : out.log) s.level += level;
        return out;
    }
    RelabeledTree stripped = strip_leaves(t);
    InnerSchedule inner = burn_tree_by_recursion(stripped.tree, level + 1);
    for (int s : inner.sources) out.sources.push_back(stripped.new_to_old[s]);
    out.sources.push_back(out.sources.front());
    out.rounds = inner.rounds + 1;
    out.bound = inner.bound + 1;
    out.log = inner.log;
    for (auto& s : out.log) {
        if (s.x >= 0) s.x = stripped.new_to_old[s.x];
        if (s.y >= 0) s.y = stripped.new_to_old[s.y];
    }
    RecursionStep step;
    step.level = level;
    step.subcase = "strip";
    step.subtree_n = n;
    step.bound = out.bound;
    out.log.insert(out.log.begin(), step);
    return out;
}

} // namespace detail

// Closed form reported alongside leaf-strip schedules: least m with
// 3(k-1)m^2 >= 4n, plus 2.
inline int leafstrip_formula_bound(long long n, int k) {
    if (k < 2) throw std::invalid_argument("leafstrip_formula_bound: k must be >= 2");
    long long coeff = 3LL * (k - 1);
    int m = 0;
    while (static_cast<long long>(m) * m * coeff < 4 * n) ++m;
    return m + 2;
}

// Burn the subtree of internal vertices first, then one extra round for the
// leaves. With the exact inner strategy the total is certified to be the
// inner optimum plus one.
inline ScheduleCertificate leafstrip_schedule(const Tree& t, int k, InnerStrategy inner) {
    if (k < 3) throw std::invalid_argument("leafstrip_schedule: k must be >= 3");
    if (t.n() < 3) throw std::invalid_argument("leafstrip_schedule: need at least 3 vertices");
    if (!is_k_branching(t, k))
        throw std::invalid_argument("leafstrip_schedule: tree has an internal vertex of degree < k");

    RelabeledTree stripped = strip_leaves(t);
    ScheduleCertificate cert;
    cert.bound_used = BoundKind::leafstrip;
    cert.formula_bound = leafstrip_formula_bound(t.n(), k);

    int inner_rounds = 0;
    if (inner == InnerStrategy::exact_solver) {
        auto res = exact_burning_number(stripped.tree.g, default_exact_budget(stripped.tree.n()));
        if (!res) throw std::logic_error("leafstrip_schedule: exact search ran out of budget");
        inner_rounds = res->rounds;
        for (int s : res->witness.sources) cert.schedule.sources.push_back(stripped.new_to_old[s]);
    } else {
        detail::InnerSchedule rec = detail::burn_tree_by_recursion(stripped.tree, 1);
        inner_rounds = rec.rounds;
        for (int s : rec.sources) cert.schedule.sources.push_back(stripped.new_to_old[s]);
        for (auto& s : rec.log) {
            if (s.x >= 0) s.x = stripped.new_to_old[s.x];
            if (s.y >= 0) s.y = stripped.new_to_old[s.y];
            cert.recursion_log.push_back(s);
        }
    }

    RecursionStep step;
    step.level = 0;
    step.subcase = "leafstrip";
    step.subtree_n = t.n();
    step.bound = inner_rounds + 1;
    cert.recursion_log.insert(cert.recursion_log.begin(), step);

    cert.bound_value = inner_rounds + 1;
    detail::finish_certificate(t.g, cert, inner_rounds + 1, "leafstrip_schedule");
    return cert;
}

} // namespace burnkit
