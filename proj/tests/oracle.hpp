#pragma once

// Test-only oracles, deliberately written along different algorithmic routes
// than the library: plain subset scans, restricted-growth-string partition
// enumeration, and full 2^m probability sums. Expected values in the test
// files are frozen from these.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "lcn/coloring.hpp"
#include "lcn/graph.hpp"
#include "lcn/rational.hpp"
#include "lcn/sampler.hpp"

namespace oracle {

// All independent sets as bitmasks, by scanning every subset (n <= 20).
inline std::vector<std::uint32_t> independent_subsets(const lcn::Graph& g) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
        bool ok = true;
        for (auto [u, v] : g.edges)
            if ((mask >> u & 1) && (mask >> v & 1)) ok = false;
        if (ok) out.push_back(mask);
    }
    return out;
}

inline std::vector<std::uint32_t> maximal_independent_subsets(const lcn::Graph& g) {
    auto all = independent_subsets(g);
    std::set<std::uint32_t> allset(all.begin(), all.end());
    std::vector<std::uint32_t> out;
    for (std::uint32_t mask : all) {
        bool maximal = true;
        for (int v = 0; v < g.n && maximal; ++v)
            if (!(mask >> v & 1) && allset.count(mask | (1u << v))) maximal = false;
        if (maximal) out.push_back(mask);
    }
    return out;
}

inline int alpha_subsets(const lcn::Graph& g) {
    int best = 0;
    for (std::uint32_t mask : independent_subsets(g))
        best = std::max(best, __builtin_popcount(mask));
    return best;
}

inline int clique_subsets(const lcn::Graph& g) {
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
        bool ok = true;
        for (int u = 0; u < g.n && ok; ++u)
            for (int v = u + 1; v < g.n && ok; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && !g.has_edge(u, v)) ok = false;
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

// Plain include/exclude recursion with a cardinality bound; handles the
// 30-vertex universal graphs where subset scans do not.
inline int alpha_branch(const lcn::Graph& g) {
    int best = 0;
    auto rec = [&](auto&& self, lcn::Bits cand, int cur) -> void {
        if (cur + cand.count() <= best) return;
        int v = cand.lowest();
        if (v < 0) {
            best = std::max(best, cur);
            return;
        }
        lcn::Bits take = cand;
        take.reset(v);
        take.subtract(g.adj[v]);
        self(self, take, cur + 1);
        cand.reset(v);
        self(self, cand, cur);
    };
    rec(rec, lcn::Bits::full(g.n), 0);
    return best;
}

// Proper colorings up to color permutation via restricted growth strings; no
// locality pruning, locality evaluated per complete coloring.
template <class F>
void for_each_proper_partition(const lcn::Graph& g, F f) {
    std::vector<int> c(g.n, -1);
    auto rec = [&](auto&& self, int v, int used) -> void {
        if (v == g.n) {
            f(c);
            return;
        }
        for (int col = 0; col <= used && col < g.n; ++col) {
            bool ok = true;
            for (int u = g.adj[v].lowest(); u != -1 && ok; u = g.adj[v].next(u))
                if (c[u] == col) ok = false;
            if (!ok) continue;
            c[v] = col;
            self(self, v + 1, std::max(used, col + 1));
            c[v] = -1;
        }
    };
    rec(rec, 0, 0);
}

inline int closed_colors(const lcn::Graph& g, const std::vector<int>& c, int v) {
    std::set<int> s;
    s.insert(c[v]);
    for (int u = g.adj[v].lowest(); u != -1; u = g.adj[v].next(u)) s.insert(c[u]);
    return static_cast<int>(s.size());
}

inline int psi_brute(const lcn::Graph& g) {
    int best = g.n + 1;
    for_each_proper_partition(g, [&](const std::vector<int>& c) {
        int worst = 0;
        for (int v = 0; v < g.n; ++v) worst = std::max(worst, closed_colors(g, c, v));
        best = std::min(best, worst);
    });
    return best;
}

inline int psi_d_brute(const lcn::PartialOrientation& d) {
    int best = d.n() + 1;
    for_each_proper_partition(d.base, [&](const std::vector<int>& c) {
        int worst = 0;
        for (int v = 0; v < d.n(); ++v) {
            std::set<int> s;
            s.insert(c[v]);
            lcn::Bits outs = d.out_exact(v);
            for (int u = outs.lowest(); u != -1; u = outs.next(u)) s.insert(c[u]);
            worst = std::max(worst, static_cast<int>(s.size()));
        }
        best = std::min(best, worst);
    });
    return best;
}

inline int chi_brute(const lcn::Graph& g) {
    int best = g.n + 1;
    if (g.n == 0) return 0;
    for_each_proper_partition(g, [&](const std::vector<int>& c) {
        best = std::min(best, *std::max_element(c.begin(), c.end()) + 1);
    });
    return best;
}

inline int count_local_k_classes(const lcn::Graph& g, int k) {
    int count = 0;
    for_each_proper_partition(g, [&](const std::vector<int>& c) {
        for (int v = 0; v < g.n; ++v)
            if (closed_colors(g, c, v) > k) return;
        ++count;
    });
    return count;
}

// Exact P[v in I] by summing over all 2^m selected-color sets.
inline lcn::Rat membership_brute(const lcn::PartialOrientation& d, const lcn::MultiColoring& mc,
                                 const lcn::Rat& gamma, int v) {
    lcn::Rat total(0);
    std::uint64_t own = 0, seen = 0;
    for (int i = mc.sets[v].lowest(); i != -1; i = mc.sets[v].next(i)) own |= 1ull << i;
    lcn::Bits outs = d.out_exact(v);
    for (int w = outs.lowest(); w != -1; w = outs.next(w))
        for (int i = mc.sets[w].lowest(); i != -1; i = mc.sets[w].next(i)) seen |= 1ull << i;
    for (std::uint64_t sel = 0; sel < (1ull << mc.m); ++sel) {
        if (!(own & sel) || (seen & sel)) continue;
        lcn::Rat p(1);
        for (int c = 0; c < mc.m; ++c)
            p *= (sel >> c & 1) ? (1 - gamma) : gamma;
        total += p;
    }
    return total;
}

// Deterministic random graphs for property tests.
inline lcn::Graph random_graph(int n, int percent, std::uint64_t seed) {
    lcn::Graph g(n);
    std::uint64_t idx = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (lcn::counter_rng(seed, idx++, 3) % 100 < static_cast<std::uint64_t>(percent))
                g.add_edge(u, v);
    g.sort_edges();
    return g;
}

}  // namespace oracle
