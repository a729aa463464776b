#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcn/graph.hpp"
#include "lcn/sampler.hpp"

namespace lcn {

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    g.sort_edges();
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    g.sort_edges();
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    g.sort_edges();
    return g;
}

// Kneser graph K(5,2): 2-subsets of {1..5}, edges between disjoint pairs.
inline Graph petersen_graph() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) pairs.emplace_back(a, b);
    Graph g(static_cast<int>(pairs.size()));
    for (size_t i = 0; i < pairs.size(); ++i)
        g.labels[i] = "{" + std::to_string(pairs[i].first) + "," +
                      std::to_string(pairs[i].second) + "}";
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            auto [a, b] = pairs[i];
            auto [c, e] = pairs[j];
            if (a != c && a != e && b != c && b != e) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    g.sort_edges();
    return g;
}

inline PartialOrientation directed_cycle(int n) {
    Graph g = cycle_graph(n);
    PartialOrientation d(std::move(g));
    for (int v = 0; v < n; ++v) d.force(v, (v + 1) % n);
    return d;
}

// Each direction of each pair appears independently with probability
// num/den; pairs with at least one arc become edges. Deterministic in seed.
inline PartialOrientation random_digraph(int n, int num, int den, std::uint64_t seed) {
    std::vector<std::pair<int, int>> arcs;
    Graph g(n);
    std::uint64_t idx = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool fwd = counter_rng(seed, idx, 0) % static_cast<std::uint64_t>(den) <
                       static_cast<std::uint64_t>(num);
            bool bwd = counter_rng(seed, idx, 1) % static_cast<std::uint64_t>(den) <
                       static_cast<std::uint64_t>(num);
            ++idx;
            if (fwd || bwd) g.add_edge(u, v);
            if (fwd) arcs.emplace_back(u, v);
            if (bwd) arcs.emplace_back(v, u);
        }
    g.sort_edges();
    PartialOrientation d(std::move(g));
    for (auto [u, v] : arcs) d.force(u, v);
    return d;
}

}  // namespace lcn
