#pragma once

#include <algorithm>
#include <bitset>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "burnkit/burn.hpp"
#include "burnkit/graph.hpp"

namespace burnkit {

// Exact search works on fixed-width bit vectors; larger inputs are rejected
// while simulation and the closed-form bounds keep working.
constexpr int kExactWidth = 128;
using VertexSet = std::bitset<kExactWidth>;

inline int exact_vertex_cap() {
    if (const char* env = std::getenv("BURNKIT_EXACT_CAP")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, kExactWidth);
    }
    return kExactWidth;
}

struct ExactResult {
    int rounds = 0;
    BurnSchedule witness;
};

namespace detail {

struct CoverSearch {
    int n;
    int t;
    std::vector<std::vector<VertexSet>> ball; // ball[r][v] = vertices within distance r of v
    VertexSet full;
    std::vector<int> max_ball;    // max |ball[r][.]| per radius
    std::vector<long long> tail;  // tail[i] = max coverable by positions i..t

    CoverSearch(const Graph& g, int rounds) : n(g.n), t(rounds) {
        ball.assign(t, std::vector<VertexSet>(n));
        for (int v = 0; v < n; ++v) {
            auto d = bfs_distances(g, v);
            for (int u = 0; u < n; ++u)
                for (int r = 0; r < t; ++r)
                    if (d[u] >= 0 && d[u] <= r) ball[r][v].set(u);
        }
        for (int v = 0; v < n; ++v) full.set(v);
        max_ball.assign(t, 0);
        for (int r = 0; r < t; ++r)
            for (int v = 0; v < n; ++v)
                max_ball[r] = std::max(max_ball[r], static_cast<int>(ball[r][v].count()));
        tail.assign(t + 2, 0);
        for (int i = t; i >= 1; --i) tail[i] = tail[i + 1] + max_ball[t - i];
    }

    int radius(int position) const { return t - position; } // position is 1-based

    // Feasibility: is there any length-t sequence covering everything?
    // Candidates are tried by descending marginal coverage; sources that add
    // nothing are skipped, which is safe because later balls at the same
    // center only shrink.
    bool feasible(int position, const VertexSet& covered) const {
        if (covered == full) return true;
        if (position > t) return false;
        long long uncovered = static_cast<long long>((full & ~covered).count());
        if (uncovered > tail[position]) return false;
        const auto& balls = ball[radius(position)];
        std::vector<std::pair<int, int>> order; // (-gain, v)
        order.reserve(n);
        for (int v = 0; v < n; ++v) {
            int gain = static_cast<int>((balls[v] & ~covered).count());
            if (gain > 0) order.emplace_back(-gain, v);
        }
        std::sort(order.begin(), order.end());
        for (auto [neg_gain, v] : order) {
            (void)neg_gain;
            if (feasible(position + 1, covered | balls[v])) return true;
        }
        return false;
    }

    // Lexicographically smallest covering sequence; assumes one exists.
    bool lex_witness(int position, const VertexSet& covered, std::vector<int>& out) const {
        if (position > t) return covered == full;
        long long uncovered = static_cast<long long>((full & ~covered).count());
        if (uncovered > tail[position]) return false;
        const auto& balls = ball[radius(position)];
        for (int v = 0; v < n; ++v) {
            out.push_back(v);
            if (lex_witness(position + 1, covered | balls[v], out)) return true;
            out.pop_back();
        }
        return false;
    }
};

inline void check_exact_input(const Graph& g, int budget) {
    require_connected(g, "exact burning search");
    int cap = exact_vertex_cap();
    if (g.n > cap)
        throw std::domain_error("exact burning search limited to " + std::to_string(cap) +
                                " vertices (got " + std::to_string(g.n) +
                                "); set BURNKIT_EXACT_CAP to adjust up to " +
                                std::to_string(kExactWidth));
    if (budget < 1) throw std::invalid_argument("exact burning search: budget must be >= 1");
}

} // namespace detail

// Iterative deepening over the round count t. A graph burns in <= t rounds
// iff sources x_1..x_t exist with the distance-(t-i) balls around x_i
// covering every vertex. Returns nullopt when the budget is exhausted.
inline std::optional<ExactResult> exact_burning_number(const Graph& g, int budget) {
    detail::check_exact_input(g, budget);
    for (int t = 1; t <= budget; ++t) {
        detail::CoverSearch search(g, t);
        VertexSet covered;
        if (!search.feasible(1, covered)) continue;
        ExactResult res;
        res.rounds = t;
        bool ok = search.lex_witness(1, covered, res.witness.sources);
        if (!ok || !is_valid_schedule(g, res.witness))
            throw std::logic_error("exact burning search: witness failed revalidation");
        return res;
    }
    return std::nullopt;
}

// Modified process: U burns for free in round 1. Minimal t such that some
// (U u {x_1}, x_2, ..., x_t) burns the whole graph.
inline std::optional<ExactResult> exact_modified_burning_number(const Graph& g,
                                                                const std::vector<int>& initial_set,
                                                                int budget) {
    detail::check_exact_input(g, budget);
    if (initial_set.empty())
        throw std::invalid_argument("exact modified burning search: initial set must be nonempty");
    for (int v : initial_set) g.check_vertex(v);

    std::vector<int> u_sorted = initial_set;
    std::sort(u_sorted.begin(), u_sorted.end());
    u_sorted.erase(std::unique(u_sorted.begin(), u_sorted.end()), u_sorted.end());

    for (int t = 1; t <= budget; ++t) {
        detail::CoverSearch search(g, t);
        VertexSet covered;
        for (int u : u_sorted) covered |= search.ball[t - 1][u];
        if (!search.feasible(1, covered)) continue;
        ExactResult res;
        res.rounds = t;
        res.witness.initial_set = u_sorted;
        bool ok = search.lex_witness(1, covered, res.witness.sources);
        if (!ok || !is_valid_schedule(g, res.witness))
            throw std::logic_error("exact modified burning search: witness failed revalidation");
        return res;
    }
    return std::nullopt;
}

// Safe default budget: every connected graph burns within 2*ceil(sqrt(n)) rounds.
inline int default_exact_budget(int n) {
    int m = 0;
    while (m * m < n) ++m;
    return 2 * m + 1;
}

} // namespace burnkit
