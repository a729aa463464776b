#pragma once

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdint>
#include <optional>
#include <vector>

#include "lcn/coloring.hpp"
#include "lcn/graph.hpp"
#include "lcn/indep.hpp"

namespace lcn {

// Budget for the exact searches. Wall-clock deadlines are supported for
// interactive use; the node budget (one unit per attempted color assignment)
// is the deterministic fallback that makes CI behavior reproducible.
struct Budget {
    std::uint64_t max_nodes = UINT64_MAX;
    std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();

    static Budget nodes(std::uint64_t n) {
        Budget b;
        b.max_nodes = n;
        return b;
    }
    static Budget wall_ms(double ms) {
        Budget b;
        b.deadline = std::chrono::steady_clock::now() +
                     std::chrono::microseconds(static_cast<std::int64_t>(ms * 1000));
        return b;
    }
    bool exhausted(std::uint64_t nodes) const {
        if (nodes > max_nodes) return true;
        return (nodes & 4095) == 0 && std::chrono::steady_clock::now() > deadline;
    }
};

namespace detail {

struct Mask128 {
    std::uint64_t a = 0, b = 0;
    bool test(int i) const { return ((i < 64 ? a >> i : b >> (i - 64)) & 1) != 0; }
    void set(int i) { (i < 64 ? a : b) |= 1ull << (i & 63); }
    void clear(int i) { (i < 64 ? a : b) &= ~(1ull << (i & 63)); }
};

enum class Step { exhausted, stopped, aborted };

// Backtracking over colorings in a fixed vertex order with reuse-before-new
// color symmetry breaking: every color partition is reached exactly once.
// Locality pruning tracks, per vertex, the distinct colors already present in
// its closed (out-)neighborhood; an uncolored vertex will add one more.
class ColoringSearch {
   public:
    ColoringSearch(const Graph& g, const PartialOrientation* dir, int k_local, int max_colors)
        : n_(g.n), k_(k_local), max_colors_(std::min(max_colors, n_ > 0 ? n_ : 1)) {
        if (n_ > 128) throw std::invalid_argument("coloring search supports at most 128 vertices");
        use_locality_ = k_local < n_ + 1;
        adj_.resize(n_);
        affect_.resize(n_);
        for (int v = 0; v < n_; ++v) adj_[v] = g.adj[v].to_vector();
        if (!dir) {
            for (int v = 0; v < n_; ++v) {
                affect_[v] = adj_[v];
                affect_[v].push_back(v);
            }
        } else {
            for (int v = 0; v < n_; ++v) affect_[v].push_back(v);
            for (int u = 0; u < n_; ++u) {
                Bits outs = dir->out_exact(u);
                for (int w = outs.lowest(); w != -1; w = outs.next(w)) affect_[w].push_back(u);
            }
        }
        ord_ = order(g);
        pos_.resize(n_);
        for (int i = 0; i < n_; ++i) pos_[ord_[i]] = i;
        color_.assign(n_, -1);
        seen_.assign(n_, {});
        nbcol_.assign(n_, {});
        seen_cnt_.assign(n_, 0);
        seen_undo_.resize(n_);
        nb_undo_.resize(n_);
    }

    // Descending degree, ties broken toward vertices with more already-ordered
    // neighbors, then by index. The tie-break is what keeps the searches on
    // the (regular) universal graphs from wandering through an unconstrained
    // first color class.
    static std::vector<int> order(const Graph& g) {
        int n = g.n;
        std::vector<int> conn(n, 0), ord;
        std::vector<char> used(n, 0);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (used[v]) continue;
                if (best < 0 || g.degree(v) > g.degree(best) ||
                    (g.degree(v) == g.degree(best) && conn[v] > conn[best]))
                    best = v;
            }
            used[best] = 1;
            ord.push_back(best);
            for (int u = g.adj[best].lowest(); u != -1; u = g.adj[best].next(u)) ++conn[u];
        }
        return ord;
    }

    // leaf(colors_by_vertex) -> bool; false stops the search.
    template <class Leaf>
    Step run(const Budget& budget, std::uint64_t& nodes, Leaf&& leaf) {
        if (n_ == 0) {
            std::vector<int> none;
            return leaf(none) ? Step::exhausted : Step::stopped;
        }
        return rec(0, budget, nodes, leaf);
    }

   private:
    template <class Leaf>
    Step rec(int depth, const Budget& budget, std::uint64_t& nodes, Leaf& leaf) {
        if (depth == n_) {
            std::vector<int> canon(n_, -1);
            std::vector<int> remap(used_, -1);
            int next = 0;
            for (int v = 0; v < n_; ++v) {
                int c = color_[v];
                if (remap[c] < 0) remap[c] = next++;
                canon[v] = remap[c];
            }
            return leaf(canon) ? Step::exhausted : Step::stopped;
        }
        int v = ord_[depth];
        int limit = std::min(used_ + 1, max_colors_);
        auto& su = seen_undo_[depth];
        auto& nu = nb_undo_[depth];
        for (int c = 0; c < limit; ++c) {
            if (nbcol_[v].test(c)) continue;  // proper coloring only
            if (budget.exhausted(++nodes)) return Step::aborted;
            su.clear();
            bool ok = true;
            for (int u : affect_[v]) {
                if (seen_[u].test(c)) continue;
                seen_[u].set(c);
                su.push_back(u);
                ++seen_cnt_[u];
                if (use_locality_ && seen_cnt_[u] > k_ - (pos_[u] > depth ? 1 : 0)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                nu.clear();
                for (int w : adj_[v])
                    if (!nbcol_[w].test(c)) {
                        nbcol_[w].set(c);
                        nu.push_back(w);
                    }
                color_[v] = c;
                bool fresh = (c == used_);
                if (fresh) ++used_;
                Step r = rec(depth + 1, budget, nodes, leaf);
                if (fresh) --used_;
                color_[v] = -1;
                for (int w : nu) nbcol_[w].clear(c);
                if (r != Step::exhausted) {
                    for (int u : su) {
                        seen_[u].clear(c);
                        --seen_cnt_[u];
                    }
                    return r;
                }
            }
            for (int u : su) {
                seen_[u].clear(c);
                --seen_cnt_[u];
            }
        }
        return Step::exhausted;
    }

    int n_, k_, max_colors_;
    bool use_locality_ = true;
    int used_ = 0;
    std::vector<std::vector<int>> adj_, affect_;
    std::vector<int> ord_, pos_, color_;
    std::vector<Mask128> seen_, nbcol_;
    std::vector<int> seen_cnt_;
    std::vector<std::vector<int>> seen_undo_, nb_undo_;
};

}  // namespace detail

inline Coloring greedy_coloring(const Graph& g) {
    std::vector<int> ord(g.n);
    for (int v = 0; v < g.n; ++v) ord[v] = v;
    std::sort(ord.begin(), ord.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    Coloring c(g.n, -1);
    for (int v : ord) {
        std::vector<char> taken(g.n, 0);
        for (int u = g.adj[v].lowest(); u != -1; u = g.adj[v].next(u))
            if (c[u] >= 0) taken[c[u]] = 1;
        int col = 0;
        while (taken[col]) ++col;
        c[v] = col;
    }
    return c;
}

struct PsiResult {
    bool exact = false;
    int value = 0;    // exact value when exact, else the proved lower bound
    int lower = 0;
    int upper = 0;
    Coloring witness;  // achieves upper
    std::uint64_t nodes = 0;
};

namespace detail {

// Iterative deepening on k. Once every k' < k is exhausted, a coloring found
// at level k has locality exactly k, so the first hit is the optimum.
inline PsiResult deepening_search(const Graph& g, const PartialOrientation* dir, int lb,
                                  const Coloring& fallback, int fallback_value, Budget budget) {
    PsiResult res;
    res.witness = fallback;
    res.upper = fallback_value;
    res.lower = std::max(lb, g.n > 0 ? 1 : 0);
    for (int k = res.lower;; ++k) {
        if (k >= res.upper) {  // fallback witness already achieves k
            res.exact = true;
            res.value = res.lower = res.upper;
            return res;
        }
        ColoringSearch search(g, dir, k, g.n);
        std::optional<Coloring> found;
        auto r = search.run(budget, res.nodes, [&](const std::vector<int>& colors) {
            Coloring c;
            c.color = colors;
            found = c;
            return false;
        });
        if (r == Step::aborted) {
            res.exact = false;
            res.value = res.lower = k;
            return res;  // every k' < k exhausted; upper/witness stay at the fallback
        }
        if (found) {
            res.exact = true;
            res.value = res.lower = res.upper = k;
            res.witness = *found;
            return res;
        }
    }
}

}  // namespace detail

// psi(G): least k admitting a local k-coloring. Exact iterative deepening;
// budget exhaustion returns exact=false with value = proved lower bound.
inline PsiResult local_chromatic(const Graph& g, Budget budget = {}) {
    if (g.n == 0) return PsiResult{true, 0, 0, 0, Coloring(0), 0};
    Coloring greedy = greedy_coloring(g);
    int gub = locality(g, greedy).max;
    return detail::deepening_search(g, nullptr, clique_number(g), greedy, gub, budget);
}

// psi_d(D) for a fully forced digraph (bidirected pairs allowed).
inline PsiResult directed_local_chromatic(const PartialOrientation& d, Budget budget = {}) {
    if (!d.fully_forced())
        throw std::invalid_argument("directed local chromatic number needs a fully forced digraph");
    if (d.n() == 0) return PsiResult{true, 0, 0, 0, Coloring(0), 0};
    Coloring greedy = greedy_coloring(d.base);
    int gub = locality_directed(d, greedy, OutMode::exact).max;
    int lb = bidirected_clique_number(d);
    if (d.arc_count() > 0) lb = std::max(lb, 2);
    return detail::deepening_search(d.base, &d, lb, greedy, gub, budget);
}

// chi(G) by the same engine with the locality constraint switched off and the
// palette capped at k.
inline PsiResult chromatic(const Graph& g, Budget budget = {}) {
    PsiResult res;
    if (g.n == 0) return PsiResult{true, 0, 0, 0, Coloring(0), 0};
    Coloring greedy = greedy_coloring(g);
    res.witness = greedy;
    res.upper = greedy.num_colors();
    res.lower = clique_number(g);
    for (int k = res.lower;; ++k) {
        if (k >= res.upper) {
            res.exact = true;
            res.value = res.lower = res.upper;
            return res;
        }
        detail::ColoringSearch search(g, nullptr, INT_MAX, k);
        std::optional<Coloring> found;
        auto r = search.run(budget, res.nodes, [&](const std::vector<int>& colors) {
            Coloring c;
            c.color = colors;
            found = c;
            return false;
        });
        if (r == detail::Step::aborted) {
            res.exact = false;
            res.value = res.lower = k;
            return res;
        }
        if (found) {
            res.exact = true;
            res.value = res.lower = res.upper = k;
            res.witness = *found;
            return res;
        }
    }
}

struct LocalColoringEnum {
    enum class Status { complete, cap_overflow, budget_exhausted };
    Status status = Status::complete;
    std::vector<Coloring> classes;  // canonical representatives, sorted
    std::uint64_t nodes = 0;
};

// All local k-colorings of g with at most max_colors colors, one canonical
// representative per color-permutation class.
inline LocalColoringEnum enumerate_local_colorings(const Graph& g, int k, int max_colors,
                                                   std::size_t cap = 1'000'000,
                                                   Budget budget = {}) {
    if (max_colors > g.n) throw std::invalid_argument("max_colors exceeds vertex count");
    LocalColoringEnum out;
    detail::ColoringSearch search(g, nullptr, k, max_colors);
    auto r = search.run(budget, out.nodes, [&](const std::vector<int>& colors) {
        if (out.classes.size() >= cap) {
            out.status = LocalColoringEnum::Status::cap_overflow;
            return false;
        }
        Coloring c;
        c.color = colors;
        out.classes.push_back(c);
        return true;
    });
    if (r == detail::Step::aborted) out.status = LocalColoringEnum::Status::budget_exhausted;
    std::sort(out.classes.begin(), out.classes.end(),
              [](const Coloring& a, const Coloring& b) { return a.color < b.color; });
    return out;
}

struct OrientationCertificate {
    PartialOrientation pattern;  // same base graph; forced arcs = the pattern
    Coloring coloring;
};

struct PsidMaxResult {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    bool covered = true;  // certificate mode: patterns cover every orientation
    std::optional<PartialOrientation> uncovered_example;
    std::uint64_t nodes = 0;
};

// Exact psi_d,max by enumerating all 2^|E| orientations.
inline PsidMaxResult psi_d_max_exhaustive(const Graph& g, Budget budget = {}) {
    if (g.m() > 20)
        throw std::invalid_argument("exhaustive orientation enumeration limited to 20 edges");
    PsidMaxResult out;
    out.lower = 0;
    for (std::uint64_t mask = 0; mask < (1ull << g.m()); ++mask) {
        PartialOrientation d((Graph(g)));
        for (int i = 0; i < g.m(); ++i) {
            auto [u, v] = g.edges[i];
            if ((mask >> i) & 1)
                d.force(u, v);
            else
                d.force(v, u);
        }
        PsiResult r = directed_local_chromatic(d, budget);
        out.nodes += r.nodes;
        if (!r.exact) throw std::runtime_error("budget exhausted inside orientation enumeration");
        out.lower = std::max(out.lower, r.value);
    }
    out.upper = out.lower;
    out.exact = true;
    return out;
}

namespace detail {

// Cylinder cover check: does every full orientation agree with at least one
// certificate pattern on that pattern's forced edges?
inline bool cover_rec(const Graph& g, const std::vector<const PartialOrientation*>& pats,
                      std::vector<int>& decided,  // per edge: -1 free, 0 u->v, 1 v->u
                      PartialOrientation* counterexample) {
    auto arc_state = [&](const PartialOrientation& p, int e) {
        auto [u, v] = g.edges[e];
        bool fwd = p.has_arc(u, v), bwd = p.has_arc(v, u);
        if (fwd && bwd) return -2;  // bidirected pattern can never match an orientation
        return fwd ? 0 : bwd ? 1 : -1;
    };
    std::vector<const PartialOrientation*> live;
    for (auto* p : pats) {
        bool compatible = true, contained = true;
        for (int e = 0; e < g.m(); ++e) {
            int want = arc_state(*p, e);
            if (want == -1) continue;
            if (want == -2 || (decided[e] != -1 && decided[e] != want)) {
                compatible = false;
                break;
            }
            if (decided[e] == -1) contained = false;
        }
        if (compatible && contained) return true;  // some pattern covers this whole cylinder
        if (compatible) live.push_back(p);
    }
    if (live.empty()) {
        if (counterexample) {
            PartialOrientation d((Graph(g)));
            for (int e = 0; e < g.m(); ++e) {
                auto [u, v] = g.edges[e];
                if (decided[e] == 1)
                    d.force(v, u);
                else
                    d.force(u, v);
            }
            *counterexample = d;
        }
        return false;
    }
    int branch_edge = -1;
    for (int e = 0; e < g.m() && branch_edge < 0; ++e)
        if (decided[e] == -1 && arc_state(*live.front(), e) != -1) branch_edge = e;
    for (int dir = 0; dir < 2; ++dir) {
        decided[branch_edge] = dir;
        if (!cover_rec(g, live, decided, counterexample)) {
            decided[branch_edge] = -1;
            return false;
        }
    }
    decided[branch_edge] = -1;
    return true;
}

}  // namespace detail

// Certificate mode: each (pattern, coloring) pair proves, via pessimistic
// out-neighborhoods, that every completion of the pattern has a directed
// local k-coloring. If the patterns cover all orientations, max over the
// pairs' verified localities is an upper bound for psi_d,max. The lower bound
// comes from one concrete orientation (default: lexicographic completion of
// the first pattern).
inline PsidMaxResult psi_d_max_certificates(const Graph& g,
                                            const std::vector<OrientationCertificate>& certs,
                                            const PartialOrientation* lower_orientation = nullptr,
                                            Budget budget = {}) {
    if (certs.empty()) throw std::invalid_argument("certificate mode needs at least one pair");
    PsidMaxResult out;
    out.upper = 0;
    std::vector<const PartialOrientation*> pats;
    for (const auto& cert : certs) {
        if (cert.pattern.base.edges != g.edges || cert.pattern.base.n != g.n)
            throw std::invalid_argument("certificate pattern is not over the given graph");
        out.upper = std::max(out.upper,
                             locality_directed(cert.pattern, cert.coloring, OutMode::pessimistic).max);
        pats.push_back(&cert.pattern);
    }
    std::vector<int> decided(g.m(), -1);
    PartialOrientation gap;
    out.covered = detail::cover_rec(g, pats, decided, &gap);
    if (!out.covered) out.uncovered_example = gap;
    PartialOrientation lex = lower_orientation ? *lower_orientation
                                               : certs.front().pattern.completed_lexicographic();
    PsiResult low = directed_local_chromatic(lex, budget);
    out.nodes = low.nodes;
    out.lower = low.value;  // a proved lower bound whether or not the solve finished
    out.exact = out.covered && low.exact && out.lower == out.upper;
    return out;
}

}  // namespace lcn
