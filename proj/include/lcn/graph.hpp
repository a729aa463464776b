#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lcn/bits.hpp"

namespace lcn {

// Simple undirected graph on vertices 0..n-1. No loops, no parallel edges.
// Vertices carry string labels; constructors that build structured families
// (universal graphs etc.) encode their labels here so theorem-level lookups
// survive file round-trips.
struct Graph {
    int n = 0;
    std::vector<Bits> adj;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted
    std::vector<std::string> labels;

    Graph() = default;
    explicit Graph(int vertices) : n(vertices), adj(vertices, Bits(vertices)), labels(vertices) {
        if (vertices < 0) throw std::invalid_argument("negative vertex count");
        for (int v = 0; v < n; ++v) labels[v] = std::to_string(v);
    }

    int m() const { return static_cast<int>(edges.size()); }

    void check_vertex(int v) const {
        if (v < 0 || v >= n) throw std::out_of_range("vertex out of range");
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj[u].test(v);
    }

    // Returns false (and does nothing) if the edge is already present.
    bool add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (adj[u].test(v)) return false;
        adj[u].set(v);
        adj[v].set(u);
        edges.emplace_back(std::min(u, v), std::max(u, v));
        return true;
    }

    void sort_edges() { std::sort(edges.begin(), edges.end()); }

    const Bits& neighbors(int v) const {
        check_vertex(v);
        return adj[v];
    }
    int degree(int v) const { return neighbors(v).count(); }

    int find_label(const std::string& s) const {
        for (int v = 0; v < n; ++v)
            if (labels[v] == s) return v;
        return -1;
    }
    int vertex_of(const std::string& s) const {
        int v = find_label(s);
        if (v < 0) throw std::invalid_argument("no vertex labeled '" + s + "'");
        return v;
    }

    Graph complement() const {
        Graph g(n);
        g.labels = labels;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!adj[u].test(v)) g.add_edge(u, v);
        g.sort_edges();
        return g;
    }

    // Subgraph induced by `keep`; vertices are renumbered in increasing order,
    // labels carried over.
    Graph induced(const Bits& keep) const {
        std::vector<int> verts = keep.to_vector();
        std::vector<int> idx(n, -1);
        for (size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
        Graph g(static_cast<int>(verts.size()));
        for (size_t i = 0; i < verts.size(); ++i) g.labels[i] = labels[verts[i]];
        for (auto [u, v] : edges)
            if (idx[u] >= 0 && idx[v] >= 0) g.add_edge(idx[u], idx[v]);
        g.sort_edges();
        return g;
    }
};

// A graph whose edges are each in one of three states: free (still
// undirected), forced one way, or forced both ways (a bidirected pair).
// A digraph is the special case with no free edges; an orientation
// additionally has no bidirected pairs.
struct PartialOrientation {
    Graph base;
    std::vector<Bits> fout;     // fout[v].test(u): forced arc v->u
    std::vector<Bits> freeadj;  // symmetric; free edges at v

    PartialOrientation() = default;

    // All edges free.
    explicit PartialOrientation(Graph g)
        : base(std::move(g)),
          fout(base.n, Bits(base.n)),
          freeadj(base.adj) {}

    int n() const { return base.n; }

    // Forces u->v. The edge must exist; forcing over a free edge consumes it,
    // forcing the reverse of an existing arc creates a bidirected pair.
    void force(int u, int v) {
        if (!base.has_edge(u, v)) throw std::invalid_argument("arc endpoints are not an edge");
        if (fout[u].test(v)) throw std::invalid_argument("arc forced twice");
        fout[u].set(v);
        freeadj[u].reset(v);
        freeadj[v].reset(u);
    }

    bool has_arc(int u, int v) const { return fout[u].test(v); }
    bool is_free(int u, int v) const { return freeadj[u].test(v); }
    bool is_bidirected(int u, int v) const { return fout[u].test(v) && fout[v].test(u); }

    bool fully_forced() const {
        for (int v = 0; v < n(); ++v)
            if (freeadj[v].any()) return false;
        return true;
    }
    bool is_orientation() const {
        if (!fully_forced()) return false;
        for (int v = 0; v < n(); ++v)
            if (fout[v].intersects(transpose_row(v))) return false;
        return true;
    }

    int arc_count() const {
        int c = 0;
        for (int v = 0; v < n(); ++v) c += fout[v].count();
        return c;
    }
    int free_edge_count() const {
        int c = 0;
        for (int v = 0; v < n(); ++v) c += freeadj[v].count();
        return c / 2;
    }

    // N_+(v) when no incident edge is free.
    Bits out_exact(int v) const {
        base.check_vertex(v);
        if (freeadj[v].any())
            throw std::logic_error("exact out-neighborhood undefined with incident free edges");
        return fout[v];
    }

    // Union of N_+(v) over all completions of the free edges.
    Bits out_pessimistic(int v) const {
        base.check_vertex(v);
        return fout[v] | freeadj[v];
    }

    // In-neighbors under forced arcs only.
    Bits in_forced(int v) const { return transpose_row(v); }

    // Completes every free edge from its lower-indexed endpoint to the higher.
    PartialOrientation completed_lexicographic() const {
        PartialOrientation d = *this;
        for (auto [u, v] : base.edges)
            if (d.is_free(u, v)) d.force(u, v);
        return d;
    }

    static PartialOrientation bidirected(const Graph& g) {
        PartialOrientation d((Graph(g)));
        for (auto [u, v] : g.edges) {
            d.force(u, v);
            d.force(v, u);
        }
        return d;
    }

   private:
    Bits transpose_row(int v) const {
        Bits in(n());
        for (int u = 0; u < n(); ++u)
            if (fout[u].test(v)) in.set(u);
        return in;
    }
};

enum class OutMode { exact, pessimistic };

// The graph-core out-neighborhood operation with an explicit mode switch;
// pessimistic mode is what quantifies "for every completion of the free
// edges" without materializing the completions.
inline Bits out_neighborhood(const PartialOrientation& d, int v, OutMode mode) {
    return mode == OutMode::exact ? d.out_exact(v) : d.out_pessimistic(v);
}

}  // namespace lcn
