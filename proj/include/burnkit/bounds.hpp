#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "burnkit/branching.hpp"
#include "burnkit/exact.hpp"
#include "burnkit/graph.hpp"
#include "burnkit/intmath.hpp"
#include "burnkit/power.hpp"

namespace burnkit {

// least m with m^2 * (k-1) >= n
inline int caterpillar_lower_bound(long long n, int k) {
    if (k < 2) throw std::invalid_argument("caterpillar_lower_bound: k must be >= 2");
    if (n < 1) throw std::invalid_argument("caterpillar_lower_bound: n must be >= 1");
    int m = 0;
    while (static_cast<long long>(m) * m * (k - 1) < n) ++m;
    return m;
}

inline int power_length_bound(long long n, int k) {
    if (k < 2) throw std::invalid_argument("power_length_bound: k must be >= 2");
    return ceil_sqrt_ratio(4 * (k - 1) * n, k);
}

// Closed-form bounds for the (n, k) pair. Fields outside their valid k range
// stay empty rather than zeroed.
struct BoundReport {
    long long n = 0;
    int k = 0;
    std::optional<int> branching;     // k >= 3
    std::optional<int> leafstrip;     // k >= 3
    std::optional<int> power;         // k >= 2, bounds b(G^k)
    std::optional<int> caterpillar_lb; // k >= 2, lower bound attained by caterpillars
    std::optional<int> exact_value;
    std::string smallest_tree_bound;  // "branching" | "leafstrip" | "tie" | ""
};

inline BoundReport bound_report(long long n, int k) {
    if (n < 1) throw std::invalid_argument("bound_report: n must be >= 1");
    if (k < 2) throw std::invalid_argument("bound_report: k must be >= 2");
    BoundReport r;
    r.n = n;
    r.k = k;
    r.power = power_length_bound(n, k);
    r.caterpillar_lb = caterpillar_lower_bound(n, k);
    if (k >= 3) {
        r.branching = branching_length_bound(n, k);
        r.leafstrip = leafstrip_formula_bound(n, k);
        if (*r.branching < *r.leafstrip) r.smallest_tree_bound = "branching";
        else if (*r.branching > *r.leafstrip) r.smallest_tree_bound = "leafstrip";
        else r.smallest_tree_bound = "tie";
    }
    return r;
}

inline BoundReport bound_report_with_exact(const Graph& g, int k, int budget) {
    BoundReport r = bound_report(g.n, k);
    auto res = exact_burning_number(g, budget);
    if (res) r.exact_value = res->rounds;
    return r;
}

// Does sqrt(4n(k-2)/(k-1)^2) <= sqrt(4n/(3(k-1))) + 2 hold? Decided purely in
// integers: with A = 12n(k-2), B = 4n(k-1) and D = 3(k-1)^2 the inequality is
// A <= B + 4D + 4*sqrt(B*D), i.e. A-B-4D <= 0 or (A-B-4D)^2 <= 16*B*D.
inline bool branching_beats_leafstrip(long long n, int k) {
    if (k < 3) throw std::invalid_argument("branching_beats_leafstrip: k must be >= 3");
    if (n < 0) throw std::invalid_argument("branching_beats_leafstrip: n must be >= 0");
    long long A = 12 * n * (k - 2);
    long long B = 4 * n * (k - 1);
    long long D = 3LL * (k - 1) * (k - 1);
    long long lhs = A - B - 4 * D;
    if (lhs <= 0) return true;
    __int128 square = static_cast<__int128>(lhs) * lhs;
    __int128 rhs = static_cast<__int128>(16) * B * D;
    return square <= rhs;
}

// Largest n for which the branching bound still matches or beats the
// leaf-strip bound (as real numbers, before rounding).
inline long long threshold_n(int k) {
    if (k < 3) throw std::invalid_argument("threshold_n: k must be >= 3");
    long long lo = 1, hi = 2;
    while (branching_beats_leafstrip(hi, k)) {
        lo = hi;
        hi *= 2;
        if (hi > (1LL << 50)) throw std::logic_error("threshold_n: no finite threshold found");
    }
    while (lo + 1 < hi) {
        long long mid = lo + (hi - lo) / 2;
        if (branching_beats_leafstrip(mid, k)) lo = mid;
        else hi = mid;
    }
    return lo;
}

inline const std::vector<int>& comparison_table_ks() {
    static const std::vector<int> ks{3, 4, 5, 6, 7, 8, 9, 10, 20, 50, 100, 200};
    return ks;
}

inline std::vector<std::pair<int, long long>> comparison_table() {
    std::vector<std::pair<int, long long>> rows;
    for (int k : comparison_table_ks()) rows.emplace_back(k, threshold_n(k));
    return rows;
}

// Largest k such that g has a spanning tree with all internal degrees >= k,
// found by descending search; always >= 2. When the spanning-tree search runs
// out of budget the result degrades to a flagged lower bound.
struct BranchResult {
    int value = 2;
    bool exact = true;
    std::optional<int> branching_bound; // omitted when value == 2
    int leafstrip_bound = 0;
    int combined_bound = 0;
};

inline BranchResult branch_number(const Graph& g, int exhaustive_cap = 16,
                                  long long node_budget = 20'000'000) {
    require_connected(g, "branch_number");
    if (g.n <= 2)
        throw std::domain_error("branch_number: degenerate below 3 vertices (every k fits vacuously)");
    BranchResult out;
    out.value = 2;
    out.exact = true;
    for (int k = g.n - 1; k >= 3; --k) {
        bool none;
        try {
            none = verify_no_branching_spanning_tree(g, k, exhaustive_cap, node_budget);
        } catch (const budget_exceeded_error&) {
            out.exact = false;
            continue; // k undecided; keep looking for a certified lower value
        }
        if (!none) {
            out.value = k;
            break;
        }
    }
    long long n = g.n;
    out.leafstrip_bound = leafstrip_formula_bound(n, out.value);
    out.combined_bound = out.leafstrip_bound;
    if (out.value >= 3) {
        out.branching_bound = branching_length_bound(n, out.value);
        out.combined_bound = std::min(out.combined_bound, *out.branching_bound);
    }
    return out;
}

} // namespace burnkit
