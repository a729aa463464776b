#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "lcn/coloring.hpp"
#include "lcn/graph.hpp"
#include "lcn/real.hpp"

namespace lcn {

// Builders for the universal graph families and the 33-vertex gap graph.
// Colors inside labels are 1-based ("(2,{1,3})") to match the usual set
// notation; internal color ids are the same values minus one.

namespace detail {

// k-subsets of {1..m} in lexicographic order of their sorted tuples,
// encoded as bitmasks over bits 0..m-1 (bit i = element i+1).
inline std::vector<std::uint32_t> k_subsets_lex(int m, int k) {
    std::vector<std::uint32_t> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            std::uint32_t mask = 0;
            for (int e : cur) mask |= 1u << (e - 1);
            out.push_back(mask);
            return;
        }
        for (int e = start; e <= m; ++e) {
            cur.push_back(e);
            self(self, e + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

inline std::string set_str(std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) {
            if (!first) s += ',';
            s += std::to_string(i + 1);
            first = false;
        }
    return s + "}";
}

}  // namespace detail

struct UniversalVertex {
    std::uint32_t center;  // bitmask; a singleton for U(m,k), an r-set for the multi case
    std::uint32_t side;    // the (k-1)- resp. (h-r)-set, disjoint from center
};

struct UniversalGraphInfo {
    std::vector<UniversalVertex> verts;
    int m = 0;
};

namespace detail {

inline UniversalGraphInfo universal_vertices(int m, int k) {
    if (k < 1 || k > m) throw std::invalid_argument("universal graph needs 1 <= k <= m");
    UniversalGraphInfo info;
    info.m = m;
    auto sides = k_subsets_lex(m, k - 1);
    for (int x = 1; x <= m; ++x)
        for (std::uint32_t a : sides)
            if (!(a & (1u << (x - 1))))
                info.verts.push_back({1u << (x - 1), a});
    return info;
}

inline std::string uvertex_label(const UniversalVertex& v, bool multi) {
    if (!multi) {
        int x = __builtin_ctz(v.center) + 1;
        return "(" + std::to_string(x) + "," + set_str(v.side) + ")";
    }
    return "(" + set_str(v.center) + "," + set_str(v.side) + ")";
}

}  // namespace detail

// U(m,k): vertices (x,A); edge {(x,A),(y,B)} iff x in B and y in A.
inline Graph universal_undirected(int m, int k) {
    auto info = detail::universal_vertices(m, k);
    Graph g(static_cast<int>(info.verts.size()));
    for (int i = 0; i < g.n; ++i) g.labels[i] = detail::uvertex_label(info.verts[i], false);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            const auto& a = info.verts[i];
            const auto& b = info.verts[j];
            if ((a.center & b.side) && (b.center & a.side)) g.add_edge(i, j);
        }
    g.sort_edges();
    return g;
}

// U_d(m,k): arc (c,H)->(c',H') iff c' in H. Bidirected pairs appear exactly
// where both memberships hold; the base graph carries an edge for any arc.
inline PartialOrientation universal_directed(int m, int k) {
    auto info = detail::universal_vertices(m, k);
    int n = static_cast<int>(info.verts.size());
    Graph g(n);
    for (int i = 0; i < n; ++i) g.labels[i] = detail::uvertex_label(info.verts[i], false);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& a = info.verts[i];
            const auto& b = info.verts[j];
            if ((b.center & a.side) || (a.center & b.side)) g.add_edge(i, j);
        }
    g.sort_edges();
    PartialOrientation d(std::move(g));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && (info.verts[j].center & info.verts[i].side)) d.force(i, j);
    return d;
}

// U_d(m,h,r): vertices (Q,H) with |Q|=r, |H|=h-r, Q and H disjoint;
// arc (Q,H)->(Q',H') iff Q' is a subset of H.
inline PartialOrientation universal_multi(int m, int h, int r) {
    if (m < h || r < 1 || 2 * r > h)
        throw std::invalid_argument("universal_multi needs m >= h and 1 <= r <= h/2");
    std::vector<UniversalVertex> verts;
    for (std::uint32_t q : detail::k_subsets_lex(m, r))
        for (std::uint32_t hh : detail::k_subsets_lex(m, h - r))
            if (!(q & hh)) verts.push_back({q, hh});
    int n = static_cast<int>(verts.size());
    Graph g(n);
    for (int i = 0; i < n; ++i) g.labels[i] = detail::uvertex_label(verts[i], true);
    auto arc = [&](int i, int j) {
        return (verts[j].center & ~verts[i].side) == 0;  // Q' subset of H
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (arc(i, j) || arc(j, i)) g.add_edge(i, j);
    g.sort_edges();
    PartialOrientation d(std::move(g));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && arc(i, j)) d.force(i, j);
    return d;
}

// (x,A) |-> x. Internal color ids are 0-based, so the vertex labeled
// "(2,{1,3})" gets color 1.
inline Coloring natural_coloring(const Graph& g_or_base, int m) {
    Coloring c(g_or_base.n);
    for (int v = 0; v < g_or_base.n; ++v) {
        const std::string& lab = g_or_base.labels[v];
        size_t comma = lab.find(',');
        if (lab.size() < 4 || lab[0] != '(' || comma == std::string::npos)
            throw std::invalid_argument("vertex " + std::to_string(v) + " lacks a universal label");
        int x = std::stoi(lab.substr(1, comma - 1));
        if (x < 1 || x > m) throw std::invalid_argument("label color out of range");
        c[v] = x - 1;
    }
    return c;
}

// (Q,H) |-> Q over the color set {0..m-1}.
inline MultiColoring natural_multicoloring(const PartialOrientation& d, int m, int h, int r) {
    MultiColoring mc;
    mc.r = r;
    mc.h = h;
    mc.m = m;
    for (int v = 0; v < d.n(); ++v) {
        const std::string& lab = d.base.labels[v];
        size_t close = lab.find('}');
        if (lab.size() < 6 || lab.substr(0, 2) != "({" || close == std::string::npos)
            throw std::invalid_argument("vertex " + std::to_string(v) + " lacks a multi label");
        Bits q(m);
        std::string elems = lab.substr(2, close - 2);
        size_t pos = 0;
        while (pos < elems.size()) {
            size_t next = elems.find(',', pos);
            if (next == std::string::npos) next = elems.size();
            q.set(std::stoi(elems.substr(pos, next - pos)) - 1);
            pos = next + 1;
        }
        mc.sets.push_back(q);
    }
    return mc;
}

struct GapGraph {
    Graph g;
    int x = 0, y = 0, z = 0;
};

// U(5,3) plus a triangle {x,y,z} attached at (2,{1,3}), (3,{1,2}) and
// (1,{4,5}) respectively: the graph with psi = 4 but psi_d <= 3 for every
// orientation.
inline GapGraph counterexample_graph() {
    Graph u = universal_undirected(5, 3);
    GapGraph out;
    out.g = Graph(u.n + 3);
    for (int v = 0; v < u.n; ++v) out.g.labels[v] = u.labels[v];
    out.x = u.n;
    out.y = u.n + 1;
    out.z = u.n + 2;
    out.g.labels[out.x] = "x";
    out.g.labels[out.y] = "y";
    out.g.labels[out.z] = "z";
    for (auto [a, b] : u.edges) out.g.add_edge(a, b);
    out.g.add_edge(out.x, out.y);
    out.g.add_edge(out.x, out.z);
    out.g.add_edge(out.y, out.z);
    out.g.add_edge(out.x, out.g.vertex_of("(2,{1,3})"));
    out.g.add_edge(out.y, out.g.vertex_of("(3,{1,2})"));
    out.g.add_edge(out.z, out.g.vertex_of("(1,{4,5})"));
    out.g.sort_edges();
    return out;
}

// Family of equal-size subsets of {1..m}.
struct SetFamily {
    int m = 0;
    int member_size = 0;
    std::vector<std::uint32_t> members;  // sorted by mask value, no duplicates

    static SetFamily of(int m, int member_size, std::vector<std::uint32_t> ms) {
        SetFamily f;
        f.m = m;
        f.member_size = member_size;
        std::set<std::uint32_t> dedup(ms.begin(), ms.end());
        for (auto mask : dedup) {
            if (__builtin_popcount(mask) != member_size)
                throw std::invalid_argument("set family members must have equal size");
            if (mask >> m) throw std::invalid_argument("member outside ground set");
        }
        f.members.assign(dedup.begin(), dedup.end());
        return f;
    }
    size_t size() const { return members.size(); }
};

// All r-subsets of the members.
inline SetFamily shadow(const SetFamily& f, int r) {
    if (r > f.member_size) throw std::invalid_argument("shadow size exceeds member size");
    std::set<std::uint32_t> out;
    for (std::uint32_t mem : f.members) {
        std::vector<int> elems;
        for (int i = 0; i < f.m; ++i)
            if (mem & (1u << i)) elems.push_back(i);
        std::vector<int> idx(r);
        auto rec = [&](auto&& self, int start, int depth) -> void {
            if (depth == r) {
                std::uint32_t mask = 0;
                for (int d = 0; d < r; ++d) mask |= 1u << elems[idx[d]];
                out.insert(mask);
                return;
            }
            for (int i = start; i < static_cast<int>(elems.size()); ++i) {
                idx[depth] = i;
                self(self, i + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    }
    SetFamily s;
    s.m = f.m;
    s.member_size = r;
    s.members.assign(out.begin(), out.end());
    return s;
}

// Solves |count| = C(l, s) for real l >= s-1 by monotone bisection.
inline Real generalized_binomial_inverse(std::size_t count, int s, double tol = 1e-9) {
    if (count == 0) throw std::invalid_argument("empty family has no binomial inverse");
    Real target = real_of_ui(count);
    Real lo = real_of_ui(s - 1 >= 0 ? s - 1 : 0);
    Real hi = real_of_ui(s + 1);
    while (real_binomial(hi, s) < target) hi += real_of_ui(1);
    for (int it = 0; it < 300; ++it) {
        Real mid = (lo + hi) / 2;
        if (real_binomial(mid, s) < target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < real_of(tol)) break;
    }
    return (lo + hi) / 2;
}

struct ShadowBoundCheck {
    Real l;
    Real bound;       // C(l, r)
    std::size_t shadow_size;
    bool holds;       // shadow_size >= bound - tolerance
};

// The Kruskal-Katona style lower bound: if |F| = C(l, s) then the r-shadow
// has at least C(l, r) members.
inline ShadowBoundCheck shadow_bound_check(const SetFamily& f, int r, double tolerance = 1e-6) {
    ShadowBoundCheck out;
    out.l = generalized_binomial_inverse(f.size(), f.member_size);
    out.bound = real_binomial(out.l, r);
    out.shadow_size = shadow(f, r).size();
    out.holds = real_of_ui(out.shadow_size) >= out.bound - real_of(tolerance);
    return out;
}

}  // namespace lcn
