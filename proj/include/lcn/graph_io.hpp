#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lcn/graph.hpp"

namespace lcn {

// Line-oriented graph format (see docs/graph-format.md for the grammar):
//   c <comment...>
//   p lcn <n> <m_edges> <m_arcs>
//   l <v> <label>
//   e <u> <v>        undirected (free) edge
//   a <u> <v>        forced arc u->v; a bidirected pair is two a lines
// Indices are 0-based. The writer is deterministic: header, labels in vertex
// order (defaulted labels omitted), sorted e lines, sorted a lines.

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

inline void write_graph(std::ostream& os, const PartialOrientation& d) {
    std::vector<std::pair<int, int>> es, as;
    for (auto [u, v] : d.base.edges) {
        if (d.is_free(u, v)) es.emplace_back(u, v);
        if (d.has_arc(u, v)) as.emplace_back(u, v);
        if (d.has_arc(v, u)) as.emplace_back(v, u);
    }
    std::sort(es.begin(), es.end());
    std::sort(as.begin(), as.end());
    os << "p lcn " << d.base.n << ' ' << es.size() << ' ' << as.size() << '\n';
    for (int v = 0; v < d.base.n; ++v)
        if (d.base.labels[v] != std::to_string(v))
            os << "l " << v << ' ' << d.base.labels[v] << '\n';
    for (auto [u, v] : es) os << "e " << u << ' ' << v << '\n';
    for (auto [u, v] : as) os << "a " << u << ' ' << v << '\n';
}

inline void write_graph(std::ostream& os, const Graph& g) {
    write_graph(os, PartialOrientation(g));
}

inline std::string graph_to_string(const PartialOrientation& d) {
    std::ostringstream ss;
    write_graph(ss, d);
    return ss.str();
}
inline std::string graph_to_string(const Graph& g) {
    std::ostringstream ss;
    write_graph(ss, g);
    return ss.str();
}

inline PartialOrientation read_graph(std::istream& is) {
    std::string line;
    int ln = 0;
    bool got_header = false;
    int n = 0, want_edges = 0, want_arcs = 0, seen_edges = 0, seen_arcs = 0;
    PartialOrientation d;
    Graph g;
    // pair state: 1 = free edge declared, 2 = arc(s) declared
    std::map<std::pair<int, int>, int> state;
    std::vector<std::pair<int, int>> arcs;

    auto key = [](int u, int v) { return std::make_pair(std::min(u, v), std::max(u, v)); };

    while (std::getline(is, line)) {
        ++ln;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "p") {
            if (got_header) throw ParseError(ln, "duplicate header");
            std::string fmt;
            if (!(ss >> fmt >> n >> want_edges >> want_arcs) || fmt != "lcn" || n < 0)
                throw ParseError(ln, "bad header, expected 'p lcn <n> <m_edges> <m_arcs>'");
            g = Graph(n);
            got_header = true;
            continue;
        }
        if (!got_header) throw ParseError(ln, "content before header");
        if (tag == "l") {
            int v;
            std::string label;
            if (!(ss >> v >> label) || v < 0 || v >= n) throw ParseError(ln, "bad label line");
            g.labels[v] = label;
        } else if (tag == "e" || tag == "a") {
            int u, v;
            if (!(ss >> u >> v) || u < 0 || v < 0 || u >= n || v >= n)
                throw ParseError(ln, "vertex index out of range");
            if (u == v) throw ParseError(ln, "self-loop");
            int& st = state[key(u, v)];
            if (tag == "e") {
                if (st != 0) throw ParseError(ln, "edge declared twice or both free and forced");
                st = 1;
                g.add_edge(u, v);
                ++seen_edges;
            } else {
                if (st == 1) throw ParseError(ln, "edge declared both free and forced");
                if (st == 0) g.add_edge(u, v);
                st = 2;
                for (auto [a, b] : arcs)
                    if (a == u && b == v) throw ParseError(ln, "duplicate arc");
                arcs.emplace_back(u, v);
                ++seen_arcs;
            }
        } else {
            throw ParseError(ln, "unknown line tag '" + tag + "'");
        }
    }
    if (!got_header) throw ParseError(ln, "missing header");
    if (seen_edges != want_edges)
        throw ParseError(ln, "edge count mismatch: header says " + std::to_string(want_edges) +
                                 ", found " + std::to_string(seen_edges));
    if (seen_arcs != want_arcs)
        throw ParseError(ln, "arc count mismatch: header says " + std::to_string(want_arcs) +
                                 ", found " + std::to_string(seen_arcs));
    g.sort_edges();
    d = PartialOrientation(std::move(g));
    for (auto [u, v] : arcs) d.force(u, v);
    return d;
}

inline PartialOrientation graph_from_string(const std::string& s) {
    std::istringstream ss(s);
    return read_graph(ss);
}

}  // namespace lcn
