#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lcn/graph.hpp"

namespace lcn {

inline bool is_independent(const Graph& g, const Bits& s) {
    if (s.n != g.n) throw std::invalid_argument("vertex set universe mismatch");
    for (int v = s.lowest(); v != -1; v = s.next(v))
        if (g.adj[v].intersects(s)) return false;
    return true;
}

namespace detail {

// Maximal independent sets = maximal cliques in the complement, enumerated
// Bron-Kerbosch style with a pivot. nonadj[v] excludes v itself.
template <class F>
bool bk_rec(const std::vector<Bits>& nonadj, Bits& r, Bits p, Bits x, F& emit) {
    if (!p.any() && !x.any()) return emit(static_cast<const Bits&>(r));
    // pivot: vertex of P∪X with most non-neighbors in P (ties: min index)
    int pivot = -1, best = -1;
    Bits px = p | x;
    for (int u = px.lowest(); u != -1; u = px.next(u)) {
        int c = (p & nonadj[u]).count();
        if (c > best) best = c, pivot = u;
    }
    Bits cand = p;
    cand.subtract(nonadj[pivot]);
    for (int v = cand.lowest(); v != -1; v = cand.next(v)) {
        r.set(v);
        if (!bk_rec(nonadj, r, p & nonadj[v], x & nonadj[v], emit)) {
            r.reset(v);
            return false;
        }
        r.reset(v);
        p.reset(v);
        x.set(v);
    }
    return true;
}

template <class F>
bool all_rec(const Graph& g, Bits& s, int min_next, F& emit) {
    if (!emit(static_cast<const Bits&>(s))) return false;
    for (int u = min_next; u < g.n; ++u) {
        if (g.adj[u].intersects(s)) continue;
        s.set(u);
        if (!all_rec(g, s, u + 1, emit)) {
            s.reset(u);
            return false;
        }
        s.reset(u);
    }
    return true;
}

}  // namespace detail

// emit(set) -> bool (false stops the stream). Returns false iff stopped early.
template <class F>
bool for_each_maximal_independent_set(const Graph& g, F emit) {
    if (g.n == 0) {
        Bits e(0);
        return emit(static_cast<const Bits&>(e));
    }
    std::vector<Bits> nonadj(g.n, Bits(g.n));
    for (int v = 0; v < g.n; ++v) {
        nonadj[v] = Bits::full(g.n);
        nonadj[v].subtract(g.adj[v]);
        nonadj[v].reset(v);
    }
    Bits r(g.n);
    return detail::bk_rec(nonadj, r, Bits::full(g.n), Bits(g.n), emit);
}

// Includes the empty set. Deterministic order for a fixed graph.
template <class F>
bool for_each_independent_set(const Graph& g, F emit) {
    Bits s(g.n);
    return detail::all_rec(g, s, 0, emit);
}

struct IndepEnum {
    std::vector<Bits> sets;
    bool overflow = false;  // limit hit; callers should fall back to column generation
};

inline IndepEnum enumerate_independent_sets(const Graph& g, bool maximal_only,
                                            std::size_t limit = 10'000'000) {
    IndepEnum out;
    auto emit = [&](const Bits& s) {
        if (out.sets.size() >= limit) {
            out.overflow = true;
            return false;
        }
        out.sets.push_back(s);
        return true;
    };
    if (maximal_only)
        for_each_maximal_independent_set(g, emit);
    else
        for_each_independent_set(g, emit);
    return out;
}

struct CliqueResult {
    int size = 0;
    Bits witness;
};

namespace detail {

inline void mc_expand(const Graph& g, Bits& r, Bits p, CliqueResult& best) {
    // greedy coloring bound, Tomita style
    std::vector<int> order, bound;
    Bits un = p;
    int color = 0;
    while (un.any()) {
        ++color;
        Bits avail = un;
        while (avail.any()) {
            int v = avail.lowest();
            order.push_back(v);
            bound.push_back(color);
            avail.subtract(g.adj[v]);
            avail.reset(v);
            un.reset(v);
        }
    }
    int rsize = r.count();
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
        if (rsize + bound[i] <= best.size) return;
        int v = order[i];
        r.set(v);
        Bits p2 = p & g.adj[v];
        if (p2.any()) {
            mc_expand(g, r, p2, best);
        } else if (rsize + 1 > best.size) {
            best.size = rsize + 1;
            best.witness = r;
        }
        r.reset(v);
        p.reset(v);
    }
}

}  // namespace detail

inline CliqueResult max_clique(const Graph& g) {
    CliqueResult best;
    best.witness = Bits(g.n);
    if (g.n == 0) return best;
    Bits r(g.n);
    detail::mc_expand(g, r, Bits::full(g.n), best);
    return best;
}

struct MisResult {
    int alpha = 0;
    Bits witness;
};

// Exact maximum independent set via max clique of the complement.
inline MisResult max_independent_set(const Graph& g) {
    CliqueResult c = max_clique(g.complement());
    return MisResult{c.size, c.witness};
}

inline int clique_number(const Graph& g) { return max_clique(g).size; }

// Largest clique all of whose edges are bidirected; a lower bound for the
// directed local chromatic number.
inline int bidirected_clique_number(const PartialOrientation& d) {
    Graph bg(d.n());
    for (auto [u, v] : d.base.edges)
        if (d.is_bidirected(u, v)) bg.add_edge(u, v);
    return clique_number(bg);
}

}  // namespace lcn
