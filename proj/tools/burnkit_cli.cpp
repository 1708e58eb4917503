// burnkit: burning schedules, exact burning numbers and spanning-tree
// extraction for graph powers, from files or built-in generator families.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "burnkit/burnkit.hpp"
#include "burnkit/serialize.hpp"
#include "burnkit/verify.hpp"

namespace {

using namespace burnkit;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudgetExceeded = 3;

struct GraphSpec {
    std::string input;
    std::string family;
    int n = 0;
    int k = 0;
    long long m = 0;
    int legs = 0;
    int leg_len = 0;
    uint64_t seed = 0;
};

void add_graph_options(CLI::App* cmd, GraphSpec& spec) {
    cmd->add_option("--input", spec.input, "edge list file (header 'n <count>', one 'u v' per line)");
    cmd->add_option("--family", spec.family,
                    "generator family: path | star | spider | caterpillar | random-tree | "
                    "random-branching-tree | random-connected");
    cmd->add_option("--n", spec.n, "vertex count for generator families");
    cmd->add_option("--k", spec.k, "k parameter (families, schedules, powers, bounds)");
    cmd->add_option("--m", spec.m, "edge count (random-connected)");
    cmd->add_option("--legs", spec.legs, "leg count (spider)");
    cmd->add_option("--leg-len", spec.leg_len, "leg length (spider)");
    cmd->add_option("--seed", spec.seed, "generator seed");
}

Graph build_graph(const GraphSpec& spec, int k_hint) {
    bool has_input = !spec.input.empty();
    bool has_family = !spec.family.empty();
    if (has_input == has_family)
        throw std::invalid_argument("provide exactly one of --input and --family");
    if (has_input) {
        std::ifstream in(spec.input);
        if (!in) throw std::invalid_argument("cannot open " + spec.input);
        return read_edge_list(in);
    }
    if (spec.family == "path") return path_graph(spec.n);
    if (spec.family == "star") return star_graph(spec.n);
    if (spec.family == "spider") return spider(spec.legs, spec.leg_len).g;
    if (spec.family == "caterpillar") return caterpillar_branching(spec.n, k_hint, spec.seed).g;
    if (spec.family == "random-tree") return random_tree(spec.n, spec.seed).g;
    if (spec.family == "random-branching-tree")
        return random_branching_tree(spec.n, k_hint, spec.seed).g;
    if (spec.family == "random-connected") return random_connected_graph(spec.n, spec.m, spec.seed);
    throw std::invalid_argument("unknown family: " + spec.family);
}

std::vector<int> parse_vertex_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        out.push_back(std::stoi(token));
    }
    return out;
}

std::map<int, std::string> load_labels(const std::string& path) {
    if (path.empty()) return {};
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open label file " + path);
    return read_label_map(in);
}

void print_burn_table(std::ostream& out, const Graph& g, const BurnSchedule& schedule,
                      const BurnTrace& trace, const std::map<int, std::string>& labels) {
    out << "round | newly burned (sources in [])\n";
    for (int round = 1; round <= trace.rounds_used; ++round) {
        out << std::setw(5) << round << " |";
        for (int v = 0; v < g.n; ++v) {
            if (trace.burn_round[v] != round) continue;
            bool is_source = (round <= schedule.rounds() && schedule.sources[round - 1] == v);
            out << " " << (is_source ? "[" : "") << vertex_label(labels, v)
                << (is_source ? "]" : "");
        }
        out << "\n";
    }
    if (!trace.complete()) {
        out << "unburned:";
        for (int v = 0; v < g.n; ++v)
            if (trace.burn_round[v] == kUnburned) out << " " << vertex_label(labels, v);
        out << "\n";
    }
}

void print_schedule_certificate(std::ostream& out, const ScheduleCertificate& cert,
                                const std::string& format, const Graph& replay_on) {
    // fail-closed: never print a certificate that does not replay
    BurnTrace trace = simulate(replay_on, cert.schedule);
    if (!trace.complete() || trace.rounds_used > cert.claimed_rounds)
        throw std::logic_error("certificate failed replay before printing");
    if (format == "json") {
        out << to_json(cert).dump(2) << "\n";
        return;
    }
    out << "rounds: " << cert.claimed_rounds << " (bound " << cert.bound_value << ", "
        << bound_kind_name(cert.bound_used) << ")\n";
    if (cert.formula_bound) out << "closed-form comparison bound: " << *cert.formula_bound << "\n";
    out << "sources:";
    for (int s : cert.schedule.sources) out << " " << s;
    out << "\n";
    if (!cert.schedule.initial_set.empty()) {
        out << "free round-1 set:";
        for (int v : cert.schedule.initial_set) out << " " << v;
        out << "\n";
    }
    for (const auto& step : cert.recursion_log) {
        out << "  level " << step.level << ": " << step.subcase << " n=" << step.subtree_n
            << " bound=" << step.bound;
        if (step.x >= 0) out << " x=" << step.x;
        if (step.y >= 0) out << " y=" << step.y;
        if (step.side_x > 0) out << " |side_x|=" << step.side_x;
        if (step.side_y > 0) out << " |side_y|=" << step.side_y;
        out << "\n";
    }
    print_burn_table(out, replay_on, cert.schedule, trace, {});
}

int cmd_burn(const GraphSpec& spec, const std::string& sources_text,
             const std::string& initial_text, const std::string& labels_path,
             const std::string& format) {
    Graph g = build_graph(spec, spec.k);
    BurnSchedule schedule;
    schedule.sources = parse_vertex_list(sources_text);
    schedule.initial_set = parse_vertex_list(initial_text);
    if (schedule.sources.empty()) throw std::invalid_argument("--sources must list at least one vertex");
    BurnTrace trace = simulate(g, schedule);
    if (format == "json") {
        json j{{"schedule", to_json(schedule, trace.rounds_used)}, {"trace", to_json(trace)}};
        std::cout << j.dump(2) << "\n";
    } else {
        print_burn_table(std::cout, g, schedule, trace, load_labels(labels_path));
        std::cout << (trace.complete() ? "all vertices burned by round " +
                                             std::to_string(trace.rounds_used)
                                       : std::to_string(trace.unburned_count()) +
                                             " vertices left unburned")
                  << "\n";
    }
    return kExitOk;
}

int cmd_exact(const GraphSpec& spec, int budget, const std::string& initial_text,
              const std::string& format) {
    Graph g = build_graph(spec, spec.k);
    if (budget <= 0) budget = default_exact_budget(g.n);
    std::vector<int> initial = parse_vertex_list(initial_text);
    std::optional<ExactResult> res = initial.empty()
                                         ? exact_burning_number(g, budget)
                                         : exact_modified_burning_number(g, initial, budget);
    if (!res) {
        std::cerr << "budget of " << budget << " rounds exceeded without a schedule\n";
        return kExitBudgetExceeded;
    }
    if (!is_valid_schedule(g, res->witness))
        throw std::logic_error("witness failed replay before printing");
    if (format == "json") {
        json j{{"burning_number", res->rounds}, {"witness", to_json(res->witness, res->rounds)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (initial.empty() ? "burning number: " : "modified burning number: ")
                  << res->rounds << "\nwitness:";
        for (int s : res->witness.sources) std::cout << " " << s;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_schedule(const GraphSpec& spec, int k, const std::string& strategy,
                 const std::string& format) {
    Tree t(build_graph(spec, k));
    ScheduleCertificate cert;
    if (strategy == "branching") cert = burn_branching_tree(t, k);
    else if (strategy == "leafstrip-exact") cert = leafstrip_schedule(t, k, InnerStrategy::exact_solver);
    else if (strategy == "leafstrip-recursive")
        cert = leafstrip_schedule(t, k, InnerStrategy::recursive);
    else throw std::invalid_argument("unknown strategy: " + strategy);
    print_schedule_certificate(std::cout, cert, format, t.g);
    return kExitOk;
}

int cmd_power(const GraphSpec& spec, int k, const std::string& format) {
    Graph g = build_graph(spec, k);
    ScheduleCertificate cert = burn_graph_power(g, k);
    print_schedule_certificate(std::cout, cert, format, graph_power(g, k));
    return kExitOk;
}

int cmd_spantree(const GraphSpec& spec, int k, const std::string& format) {
    Tree t(build_graph(spec, k));
    ExtractionResult ex = extract_branching_spanning_tree(t, k);
    if (format == "json") {
        json j{{"spanning_tree", format_edge_list(ex.spanning_tree.g)},
               {"peeling", to_json(ex.log)}};
        std::cout << j.dump(2) << "\n";
    } else {
        write_edge_list(std::cout, ex.spanning_tree.g);
        std::cout << "peel levels: " << ex.log.levels.size() << "\n";
        for (size_t i = 0; i < ex.log.levels.size(); ++i) {
            std::cout << "  level " << (i + 1) << ": x=" << ex.log.levels[i].x << " removed";
            for (int v : ex.log.levels[i].removed) std::cout << " " << v;
            std::cout << "\n";
        }
        std::cout << "star center: " << ex.log.star_center << "\n";
    }
    return kExitOk;
}

int cmd_bounds(long long n, int k, const std::string& format) {
    BoundReport r = bound_report(n, k);
    if (format == "json") std::cout << to_json(r).dump(2) << "\n";
    else if (format == "csv")
        std::cout << bound_report_csv_header() << "\n" << to_csv_row(r) << "\n";
    else {
        std::cout << "n=" << r.n << " k=" << r.k << "\n";
        if (r.branching) std::cout << "  branching-tree bound:  " << *r.branching << "\n";
        if (r.leafstrip) std::cout << "  leaf-strip bound:      " << *r.leafstrip << "\n";
        if (r.power) std::cout << "  graph-power bound:     " << *r.power << "\n";
        if (r.caterpillar_lb) std::cout << "  caterpillar lower bd:  " << *r.caterpillar_lb << "\n";
        if (!r.smallest_tree_bound.empty())
            std::cout << "  smaller tree bound:    " << r.smallest_tree_bound << "\n";
    }
    return kExitOk;
}

int cmd_table1(const std::string& format) {
    if (format == "json") {
        json rows = json::array();
        for (auto [k, n] : comparison_table()) rows.push_back(json{{"k", k}, {"n", n}});
        std::cout << rows.dump(2) << "\n";
    } else {
        std::cout << comparison_table_csv();
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, int trees, uint64_t seed, bool list) {
    if (list) {
        for (const auto& entry : suite_registry())
            std::cout << entry.name << ": " << entry.description << "\n";
        return kExitOk;
    }
    VerifyOptions opt;
    if (trees > 0) opt.trees = trees;
    opt.seed = seed;
    bool all_ok = true;
    for (const SuiteResult& r : run_suites(suite, opt)) {
        std::cout << (r.passed() ? "PASS" : "FAIL") << " " << r.name << " (" << r.checked
                  << " checks";
        if (!r.passed()) std::cout << ", " << r.failures << " failures";
        std::cout << ")\n";
        for (const auto& note : r.notes) std::cout << "    " << note << "\n";
        all_ok &= r.passed();
    }
    return all_ok ? kExitOk : kExitPropertyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph burning toolkit"};
    app.require_subcommand(1);

    GraphSpec spec;
    std::string format = "text";
    std::string sources_text, initial_text, labels_path;
    std::string strategy = "branching";
    std::string suite = "all";
    int budget = 0;
    int trees = 0;
    long long bounds_n = 0;
    bool list_suites = false;

    auto* burn = app.add_subcommand("burn", "simulate a schedule and print the round table");
    add_graph_options(burn, spec);
    burn->add_option("--sources", sources_text, "comma-separated source list, one per round")
        ->required();
    burn->add_option("--initial", initial_text, "comma-separated free round-1 set");
    burn->add_option("--labels", labels_path, "sidecar label map ('<id> <name>' per line)");
    burn->add_option("--format", format, "text | json");

    auto* exact = app.add_subcommand("exact", "exact burning number with witness");
    add_graph_options(exact, spec);
    exact->add_option("--budget", budget, "round cap (default 2*ceil(sqrt(n))+1)");
    exact->add_option("--initial", initial_text, "free round-1 set: computes the modified value");
    exact->add_option("--format", format, "text | json");

    auto* schedule = app.add_subcommand("schedule", "constructive schedule for a branching tree");
    add_graph_options(schedule, spec);
    schedule->add_option("--strategy", strategy, "branching | leafstrip-exact | leafstrip-recursive");
    schedule->add_option("--format", format, "text | json");

    auto* power = app.add_subcommand("power", "schedule for the k-th power of a graph");
    add_graph_options(power, spec);
    power->add_option("--format", format, "text | json");

    auto* spantree = app.add_subcommand("spantree", "extract a high-branching spanning tree of t^k");
    add_graph_options(spantree, spec);
    spantree->add_option("--format", format, "text | json");

    auto* bounds = app.add_subcommand("bounds", "closed-form bounds for (n, k)");
    bounds->add_option("--n", bounds_n, "vertex count")->required();
    bounds->add_option("--k", spec.k, "branching order / power exponent")->required();
    bounds->add_option("--format", format, "text | json | csv");

    auto* table1 = app.add_subcommand("table1", "bound-comparison threshold table");
    table1->add_option("--format", format, "csv | json");

    auto* verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("--suite", suite, "suite name or 'all'");
    verify->add_option("--trees", trees, "instance count scale");
    verify->add_option("--seed", spec.seed, "suite seed");
    verify->add_flag("--list", list_suites, "list available suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (burn->parsed()) return cmd_burn(spec, sources_text, initial_text, labels_path, format);
        if (exact->parsed()) return cmd_exact(spec, budget, initial_text, format);
        if (schedule->parsed()) return cmd_schedule(spec, spec.k, strategy, format);
        if (power->parsed()) return cmd_power(spec, spec.k, format);
        if (spantree->parsed()) return cmd_spantree(spec, spec.k, format);
        if (bounds->parsed()) return cmd_bounds(bounds_n, spec.k, format);
        if (table1->parsed()) return cmd_table1(format == "text" ? "csv" : format);
        if (verify->parsed()) return cmd_verify(suite, trees, spec.seed, list_suites);
    } catch (const burnkit::budget_exceeded_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudgetExceeded;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPropertyFailure;
    }
    return kExitInputError;
}
