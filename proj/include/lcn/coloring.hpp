#pragma once

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lcn/graph.hpp"
#include "lcn/indep.hpp"

namespace lcn {

// Total vertex -> color assignment; colors are small nonnegative ints.
struct Coloring {
    std::vector<int> color;

    Coloring() = default;
    explicit Coloring(int n, int fill = -1) : color(n, fill) {}

    int n() const { return static_cast<int>(color.size()); }
    int operator[](int v) const { return color[v]; }
    int& operator[](int v) { return color[v]; }

    bool total() const {
        for (int c : color)
            if (c < 0) return false;
        return true;
    }
    int num_colors() const {
        std::set<int> s(color.begin(), color.end());
        return static_cast<int>(s.size());
    }
    bool operator==(const Coloring& o) const { return color == o.color; }

    // Renumbers colors by first appearance in vertex order; two colorings are
    // the same partition iff their canonical forms are equal.
    Coloring canonical() const {
        Coloring out(n());
        std::vector<int> map;
        for (int v = 0; v < n(); ++v) {
            int c = color[v];
            int id = -1;
            for (size_t i = 0; i < map.size(); ++i)
                if (map[i] == c) id = static_cast<int>(i);
            if (id < 0) {
                id = static_cast<int>(map.size());
                map.push_back(c);
            }
            out[v] = id;
        }
        return out;
    }
};

inline bool is_proper(const Graph& g, const Coloring& c) {
    if (c.n() != g.n || !c.total()) return false;
    for (auto [u, v] : g.edges)
        if (c[u] == c[v]) return false;
    return true;
}

// Per-vertex count of distinct colors in the closed (out-)neighborhood.
struct LocalityReport {
    std::vector<int> per_vertex;
    int max = 0;
};

namespace detail {
inline int distinct_closed_colors(const Coloring& c, int v, const Bits& nbrs) {
    std::set<int> colors;
    colors.insert(c[v]);
    for (int u = nbrs.lowest(); u != -1; u = nbrs.next(u)) colors.insert(c[u]);
    return static_cast<int>(colors.size());
}
inline LocalityReport locality_from(const Coloring& c, const std::vector<Bits>& nbrs) {
    LocalityReport rep;
    rep.per_vertex.resize(nbrs.size());
    for (size_t v = 0; v < nbrs.size(); ++v) {
        rep.per_vertex[v] = distinct_closed_colors(c, static_cast<int>(v), nbrs[v]);
        rep.max = std::max(rep.max, rep.per_vertex[v]);
    }
    return rep;
}
}  // namespace detail

inline LocalityReport locality(const Graph& g, const Coloring& c) {
    if (!is_proper(g, c)) throw std::invalid_argument("locality of an improper coloring");
    return detail::locality_from(c, g.adj);
}

inline LocalityReport locality_directed(const PartialOrientation& d, const Coloring& c,
                                        OutMode mode) {
    if (!is_proper(d.base, c)) throw std::invalid_argument("locality of an improper coloring");
    std::vector<Bits> nbrs;
    nbrs.reserve(d.n());
    for (int v = 0; v < d.n(); ++v) nbrs.push_back(out_neighborhood(d, v, mode));
    return detail::locality_from(c, nbrs);
}

// True iff the coloring is a directed local k-coloring of EVERY completion of
// the free edges; the pessimistic out-neighborhood makes that a single pass.
inline bool verify_orientation_certificate(const PartialOrientation& d, const Coloring& c,
                                           int k) {
    return locality_directed(d, c, OutMode::pessimistic).max <= k;
}

// vertex -> r-subset of a color set of size m.
struct MultiColoring {
    int r = 1;
    int h = 1;
    int m = 0;  // |C|
    std::vector<Bits> sets;

    int n() const { return static_cast<int>(sets.size()); }
};

// A proper coloring seen as a 1-multi-coloring with locality budget h.
inline MultiColoring to_multicoloring(const Coloring& c, int h) {
    MultiColoring mc;
    mc.r = 1;
    mc.h = h;
    mc.m = 0;
    for (int v = 0; v < c.n(); ++v) mc.m = std::max(mc.m, c[v] + 1);
    for (int v = 0; v < c.n(); ++v) {
        Bits b(mc.m);
        b.set(c[v]);
        mc.sets.push_back(b);
    }
    return mc;
}

// Every color class {v : c in sets[v]} must be independent; throws otherwise.
// Returns true iff |union of out-neighborhood color sets| <= h-r everywhere.
inline bool is_local_multicoloring(const PartialOrientation& d, const MultiColoring& mc) {
    if (mc.n() != d.n()) throw std::invalid_argument("multicoloring size mismatch");
    for (int col = 0; col < mc.m; ++col) {
        Bits cls(d.n());
        for (int v = 0; v < d.n(); ++v)
            if (mc.sets[v].test(col)) cls.set(v);
        if (!is_independent(d.base, cls))
            throw std::invalid_argument("multicoloring class " + std::to_string(col) +
                                        " is not independent");
    }
    for (int v = 0; v < d.n(); ++v) {
        Bits seen(mc.m);
        Bits outs = d.out_exact(v);
        for (int w = outs.lowest(); w != -1; w = outs.next(w)) seen |= mc.sets[w];
        if (seen.count() > mc.h - mc.r) return false;
    }
    return true;
}

// Coloring file: lines "v <vertex> <color...>" (r color tokens per line for
// multi-colorings).
inline void write_coloring(std::ostream& os, const Coloring& c) {
    for (int v = 0; v < c.n(); ++v) os << "v " << v << ' ' << c[v] << '\n';
}

inline Coloring read_coloring(std::istream& is, int n) {
    Coloring c(n, -1);
    std::string line;
    int ln = 0;
    while (std::getline(is, line)) {
        ++ln;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tag;
        int v, col;
        if (!(ss >> tag >> v >> col) || tag != "v" || v < 0 || v >= n || col < 0)
            throw std::runtime_error("coloring line " + std::to_string(ln) + ": bad entry");
        c[v] = col;
    }
    if (!c.total()) throw std::runtime_error("coloring is not total");
    return c;
}

inline MultiColoring read_multicoloring(std::istream& is, int n, int r, int h) {
    MultiColoring mc;
    mc.r = r;
    mc.h = h;
    std::vector<std::vector<int>> raw(n);
    std::string line;
    int ln = 0, maxcol = -1;
    while (std::getline(is, line)) {
        ++ln;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tag;
        int v;
        if (!(ss >> tag >> v) || tag != "v" || v < 0 || v >= n)
            throw std::runtime_error("coloring line " + std::to_string(ln) + ": bad entry");
        int col;
        while (ss >> col) {
            if (col < 0) throw std::runtime_error("coloring line " + std::to_string(ln) + ": bad color");
            raw[v].push_back(col);
            maxcol = std::max(maxcol, col);
        }
        if (static_cast<int>(raw[v].size()) != r)
            throw std::runtime_error("coloring line " + std::to_string(ln) + ": expected " +
                                     std::to_string(r) + " colors");
    }
    mc.m = maxcol + 1;
    for (int v = 0; v < n; ++v) {
        if (raw[v].empty()) throw std::runtime_error("multicoloring is not total");
        Bits b(mc.m);
        for (int col : raw[v]) b.set(col);
        mc.sets.push_back(b);
    }
    return mc;
}

}  // namespace lcn
