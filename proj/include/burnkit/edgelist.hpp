#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "burnkit/graph.hpp"

namespace burnkit {

// Edge list format:
//   n <vertex count>
//   u v          (one edge per line, 0-based, whitespace separated)
// The writer emits edges with u < v in ascending order, LF terminated.

inline Graph read_edge_list(std::istream& in) {
    std::string tag;
    int n = 0;
    if (!(in >> tag) || tag != "n" || !(in >> n))
        throw std::invalid_argument("edge list: expected header line 'n <count>'");
    if (n < 1) throw std::invalid_argument("edge list: vertex count must be >= 1");
    Graph g(n);
    long long u, v;
    while (in >> u) {
        if (!(in >> v)) throw std::invalid_argument("edge list: dangling endpoint after " + std::to_string(u));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge list: endpoint out of range: " + std::to_string(u) + " " +
                                        std::to_string(v));
        g.add_edge_unchecked(static_cast<int>(u), static_cast<int>(v));
    }
    if (!in.eof() && in.fail()) throw std::invalid_argument("edge list: malformed edge line");
    g.finalize();
    return g;
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.n << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

inline std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

// Optional sidecar label map: one "<id> <name>" pair per line.
inline std::map<int, std::string> read_label_map(std::istream& in) {
    std::map<int, std::string> labels;
    int id;
    std::string name;
    while (in >> id >> name) labels[id] = name;
    return labels;
}

inline std::string vertex_label(const std::map<int, std::string>& labels, int v) {
    auto it = labels.find(v);
    return it == labels.end() ? std::to_string(v) : it->second;
}

} // namespace burnkit
