#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "burnkit/bounds.hpp"
#include "burnkit/branching.hpp"
#include "burnkit/burn.hpp"
#include "burnkit/decompose.hpp"
#include "burnkit/graph.hpp"
#include "burnkit/power.hpp"

namespace burnkit {

using json = nlohmann::json;

inline json to_json(const BurnSchedule& s, int rounds) {
    return json{{"sources", s.sources}, {"initial_set", s.initial_set}, {"rounds", rounds}};
}

inline json to_json(const BurnTrace& t) {
    return json{{"burn_round", t.burn_round},
                {"rounds_used", t.rounds_used},
                {"complete", t.complete()}};
}

inline json to_json(const SplitCertificate& c) {
    return json{{"x", c.x},
                {"ordered_neighbors", c.ordered_neighbors},
                {"side_sizes", c.side_sizes},
                {"p", {{"num", c.p.num}, {"den", c.p.den}}}};
}

inline json to_json(const RecursionStep& s) {
    json j{{"level", s.level},
           {"subcase", s.subcase},
           {"n", s.subtree_n},
           {"bound", s.bound}};
    if (s.x >= 0) j["x"] = s.x;
    if (s.y >= 0) j["y"] = s.y;
    if (s.side_x > 0) j["side_x"] = s.side_x;
    if (s.side_y > 0) j["side_y"] = s.side_y;
    return j;
}

inline json to_json(const ScheduleCertificate& c) {
    json log = json::array();
    for (const auto& s : c.recursion_log) log.push_back(to_json(s));
    json j{{"schedule", to_json(c.schedule, c.claimed_rounds)},
           {"claimed_rounds", c.claimed_rounds},
           {"bound_value", c.bound_value},
           {"bound_used", bound_kind_name(c.bound_used)},
           {"recursion_log", log}};
    if (c.formula_bound) j["leafstrip_formula"] = *c.formula_bound;
    return j;
}

inline json to_json(const PeelingLog& log) {
    json levels = json::array();
    for (const auto& l : log.levels) levels.push_back(json{{"x", l.x}, {"removed", l.removed}});
    return json{{"k", log.k}, {"levels", levels}, {"star_center", log.star_center}};
}

inline json to_json(const BoundReport& r) {
    json j{{"n", r.n}, {"k", r.k}};
    j["branching"] = r.branching ? json(*r.branching) : json(nullptr);
    j["leafstrip"] = r.leafstrip ? json(*r.leafstrip) : json(nullptr);
    j["power"] = r.power ? json(*r.power) : json(nullptr);
    j["caterpillar_lb"] = r.caterpillar_lb ? json(*r.caterpillar_lb) : json(nullptr);
    j["exact"] = r.exact_value ? json(*r.exact_value) : json(nullptr);
    if (!r.smallest_tree_bound.empty()) j["smallest_tree_bound"] = r.smallest_tree_bound;
    return j;
}

inline json to_json(const BranchResult& r) {
    json j{{"branch", r.value},
           {"exact", r.exact},
           {"leafstrip_bound", r.leafstrip_bound},
           {"combined_bound", r.combined_bound}};
    j["branching_bound"] = r.branching_bound ? json(*r.branching_bound) : json(nullptr);
    return j;
}

inline std::string bound_report_csv_header() {
    return "n,k,branching,leafstrip,power,caterpillar_lb,exact,smallest_tree_bound";
}

inline std::string to_csv_row(const BoundReport& r) {
    auto cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
    std::ostringstream out;
    out << r.n << "," << r.k << "," << cell(r.branching) << "," << cell(r.leafstrip) << ","
        << cell(r.power) << "," << cell(r.caterpillar_lb) << "," << cell(r.exact_value) << ","
        << r.smallest_tree_bound;
    return out.str();
}

inline std::string comparison_table_csv() {
    std::ostringstream out;
    out << "k,n\n";
    for (auto [k, n] : comparison_table()) out << k << "," << n << "\n";
    return out.str();
}

} // namespace burnkit
