#pragma once

#include <stdexcept>
#include <vector>

#include "burnkit/graph.hpp"

namespace burnkit {

// Ordered source list b_1..b_t, plus an optional set U burned for free in
// round 1 alongside b_1 (the modified process). Sources may repeat vertices
// that are already burned; validation must not reject that.
struct BurnSchedule {
    std::vector<int> sources;
    std::vector<int> initial_set;

    int rounds() const { return static_cast<int>(sources.size()); }
};

struct BurnTrace {
    std::vector<int> burn_round; // 1-based; kUnburned if never burned
    int rounds_used = 0;         // last round in which something burned

    bool complete() const {
        for (int r : burn_round)
            if (r == kUnburned) return false;
        return true;
    }

    int unburned_count() const {
        int c = 0;
        for (int r : burn_round)
            if (r == kUnburned) ++c;
        return c;
    }
};

// Run the process for exactly |sources| rounds: round 1 burns {b_1} u U,
// round i >= 2 burns b_i plus every neighbor of a vertex that caught fire
// in round i-1.
inline BurnTrace simulate(const Graph& g, const BurnSchedule& s) {
    if (s.sources.empty()) throw std::invalid_argument("simulate: schedule needs at least one source");
    for (int v : s.sources) g.check_vertex(v);
    for (int v : s.initial_set) g.check_vertex(v);

    BurnTrace trace;
    trace.burn_round.assign(g.n, kUnburned);
    std::vector<int> frontier;
    auto ignite = [&](int v, int round) {
        if (trace.burn_round[v] == kUnburned) {
            trace.burn_round[v] = round;
            trace.rounds_used = round;
            frontier.push_back(v);
        }
    };

    int t = s.rounds();
    for (int round = 1; round <= t; ++round) {
        std::vector<int> prev;
        prev.swap(frontier);
        if (round == 1) {
            ignite(s.sources[0], 1);
            for (int v : s.initial_set) ignite(v, 1);
        } else {
            for (int u : prev)
                for (int v : g.adj[u]) ignite(v, round);
            ignite(s.sources[round - 1], round);
        }
    }
    return trace;
}

inline bool is_valid_schedule(const Graph& g, const BurnSchedule& s) {
    return simulate(g, s).complete();
}

} // namespace burnkit
