#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "lcn/coloring.hpp"
#include "lcn/graph.hpp"
#include "lcn/indep.hpp"
#include "lcn/rational.hpp"
#include "lcn/real.hpp"
#include "lcn/simplex.hpp"

namespace lcn {

struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Nonnegative rational weights on independent sets, sparse support.
struct FractionalColoring {
    int n = 0;
    std::vector<std::pair<Bits, Rat>> weights;

    Rat total_weight() const {
        Rat s(0);
        for (const auto& [set, w] : weights) s += w;
        return s;
    }
    Rat coverage(int v) const {
        Rat s(0);
        for (const auto& [set, w] : weights)
            if (set.test(v)) s += w;
        return s;
    }
    bool valid(const Graph& g) const {
        if (g.n != n) return false;
        for (const auto& [set, w] : weights)
            if (w <= 0 || !is_independent(g, set)) return false;
        for (int v = 0; v < n; ++v)
            if (coverage(v) < 1) return false;
        return true;
    }
};

inline Rat total_weight(const FractionalColoring& fc) { return fc.total_weight(); }

// Fractional coloring file: one line "w <weight> <v1> <v2> ..." per support
// set, weights as p/q rationals.
inline void write_fractional_coloring(std::ostream& os, const FractionalColoring& fc) {
    for (const auto& [set, w] : fc.weights) {
        os << "w " << rat_str(w);
        for (int v : set.to_vector()) os << ' ' << v;
        os << '\n';
    }
}

inline FractionalColoring read_fractional_coloring(std::istream& is, int n) {
    FractionalColoring fc;
    fc.n = n;
    std::string line;
    int ln = 0;
    while (std::getline(is, line)) {
        ++ln;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tag, weight;
        if (!(ss >> tag >> weight) || tag != "w")
            throw std::runtime_error("fractional coloring line " + std::to_string(ln) +
                                     ": expected 'w <weight> <vertices...>'");
        Bits set(n);
        int v;
        while (ss >> v) {
            if (v < 0 || v >= n)
                throw std::runtime_error("fractional coloring line " + std::to_string(ln) +
                                         ": vertex out of range");
            set.set(v);
        }
        fc.weights.emplace_back(set, rat_parse(weight));
    }
    return fc;
}

// Nonnegative vertex weights with Σ_{v∈A} t_v <= 1 on every independent set;
// checking the maximal sets suffices.
struct FractionalClique {
    std::vector<Rat> t;

    Rat total() const {
        Rat s(0);
        for (const auto& tv : t) s += tv;
        return s;
    }
    Rat weight_of(const Bits& set) const {
        Rat s(0);
        for (int v = set.lowest(); v != -1; v = set.next(v)) s += t[v];
        return s;
    }
    bool valid(const Graph& g) const {
        if (static_cast<int>(t.size()) != g.n) return false;
        for (const auto& tv : t)
            if (tv < 0) return false;
        bool ok = true;
        for_each_maximal_independent_set(g, [&](const Bits& s) {
            if (weight_of(s) > 1) ok = false;
            return ok;
        });
        return ok;
    }
};

// Total weight of support sets meeting the (exact or pessimistic)
// out-neighborhood of v.
inline Rat seen_weight(const PartialOrientation& d, const FractionalColoring& fc, int v,
                       OutMode mode = OutMode::exact) {
    Bits outs = out_neighborhood(d, v, mode);
    Rat s(0);
    for (const auto& [set, w] : fc.weights)
        if (set.intersects(outs)) s += w;
    return s;
}

// 1 + the maximum total weight any vertex "sees".
inline Rat local_weight(const PartialOrientation& d, const FractionalColoring& fc,
                        OutMode mode = OutMode::exact) {
    Rat best(0);
    for (int v = 0; v < d.n(); ++v) best = std::max(best, seen_weight(d, fc, v, mode));
    return best + 1;
}

// Exact max-weight independent set (weights >= 0) by branch and bound; used
// as the pricing oracle for the covering LP.
struct WeightedSetResult {
    Rat weight;
    Bits set;
};

inline WeightedSetResult max_weight_independent_set(const Graph& g, const std::vector<Rat>& w) {
    std::vector<int> ord;
    for (int v = 0; v < g.n; ++v)
        if (w[v] > 0) ord.push_back(v);
    std::sort(ord.begin(), ord.end(), [&](int a, int b) {
        return w[a] != w[b] ? w[a] > w[b] : a < b;
    });
    WeightedSetResult best{Rat(0), Bits(g.n)};
    Bits cur(g.n);
    std::vector<Rat> suffix(ord.size() + 1, Rat(0));
    for (int i = static_cast<int>(ord.size()) - 1; i >= 0; --i)
        suffix[i] = suffix[i + 1] + w[ord[i]];
    auto rec = [&](auto&& self, size_t i, Rat cur_w) -> void {
        if (cur_w > best.weight) best = {cur_w, cur};
        if (i >= ord.size() || cur_w + suffix[i] <= best.weight) return;
        int v = ord[i];
        if (!g.adj[v].intersects(cur)) {
            cur.set(v);
            self(self, i + 1, cur_w + w[v]);
            cur.reset(v);
        }
        self(self, i + 1, cur_w);
    };
    rec(rec, 0, Rat(0));
    return best;
}

struct ChiStarResult {
    Rat value;
    FractionalColoring primal;
    FractionalClique dual;
    bool used_column_generation = false;
};

namespace detail {

inline ChiStarResult chi_star_solve(const Graph& g, const std::vector<Bits>& pool,
                                    bool complete_pool, int max_iters) {
    // master: min Σ x_A  s.t.  Σ_{A∋v} x_A >= 1 per vertex, x >= 0
    std::vector<Bits> cols = pool;
    ChiStarResult out;
    for (int iter = 0;; ++iter) {
        if (iter > max_iters) throw ConvergenceError("column generation iteration cap hit");
        LpProblem p;
        for (int v = 0; v < g.n; ++v) p.add_row(Sense::ge, Rat(1));
        for (const auto& set : cols) {
            std::vector<std::pair<int, Rat>> entries;
            for (int v = set.lowest(); v != -1; v = set.next(v)) entries.emplace_back(v, Rat(1));
            p.add_col(Rat(1), std::move(entries));
        }
        LpSolution sol = solve_lp(p);
        if (sol.status != LpStatus::optimal)
            throw std::logic_error("covering LP must be feasible and bounded");
        if (!complete_pool) {
            WeightedSetResult priced = max_weight_independent_set(g, sol.y);
            if (priced.weight > 1) {
                cols.push_back(priced.set);
                continue;
            }
        }
        out.value = sol.objective;
        out.primal.n = g.n;
        for (size_t j = 0; j < cols.size(); ++j)
            if (sol.x[j] > 0) out.primal.weights.emplace_back(cols[j], sol.x[j]);
        out.dual.t = sol.y;
        return out;
    }
}

}  // namespace detail

// chi*(G) over the maximal independent sets, switching to column generation
// when the pool exceeds pool_limit. Returns the optimal primal together with
// an optimal fractional clique of equal total weight.
inline ChiStarResult fractional_chromatic(const Graph& g, std::size_t pool_limit = 2000,
                                          int max_iters = 100000) {
    if (g.n == 0) return ChiStarResult{Rat(0), {}, {}, false};
    IndepEnum pool = enumerate_independent_sets(g, /*maximal_only=*/true, pool_limit);
    if (!pool.overflow) return detail::chi_star_solve(g, pool.sets, true, max_iters);
    // column generation from the singleton columns
    std::vector<Bits> cols;
    for (int v = 0; v < g.n; ++v) {
        Bits b(g.n);
        b.set(v);
        cols.push_back(b);
    }
    ChiStarResult out = detail::chi_star_solve(g, cols, false, max_iters);
    out.used_column_generation = true;
    return out;
}

enum class PsidStarMethod { enumerate, column_generation };

struct PsidStarResult {
    Rat value;
    FractionalColoring primal;
    bool used_column_generation = false;
};

namespace detail {

// Pricing for the psi_d* master: maximize
//   Σ_{v∈S} y_v − Σ_{u : N+(u) ∩ S ≠ ∅} z_u
// over nonempty independent sets S.
inline WeightedSetResult psid_price(const PartialOrientation& d, const std::vector<Rat>& y,
                                    const std::vector<Rat>& z) {
    int n = d.n();
    std::vector<std::vector<int>> in_of(n);
    for (int u = 0; u < n; ++u) {
        Bits outs = d.out_exact(u);
        for (int w = outs.lowest(); w != -1; w = outs.next(w)) in_of[w].push_back(u);
    }
    std::vector<int> ord;
    for (int v = 0; v < n; ++v) ord.push_back(v);
    std::sort(ord.begin(), ord.end(), [&](int a, int b) {
        return y[a] != y[b] ? y[a] > y[b] : a < b;
    });
    std::vector<Rat> suffix(n + 1, Rat(0));
    for (int i = n - 1; i >= 0; --i) {
        Rat gain = y[ord[i]] > 0 ? y[ord[i]] : Rat(0);
        suffix[i] = suffix[i + 1] + gain;
    }
    WeightedSetResult best{Rat(0), Bits(n)};  // gain must beat 0 strictly
    Bits cur(n);
    std::vector<char> penalized(n, 0);
    auto rec = [&](auto&& self, int i, Rat val) -> void {
        if (val > best.weight && cur.any()) best = {val, cur};
        if (i >= n || val + suffix[i] <= best.weight) return;
        int v = ord[i];
        if (!d.base.adj[v].intersects(cur)) {
            Rat nv = val + y[v];
            std::vector<int> newly;
            for (int u : in_of[v])
                if (!penalized[u]) {
                    penalized[u] = 1;
                    newly.push_back(u);
                    nv -= z[u];
                }
            cur.set(v);
            self(self, i + 1, nv);
            cur.reset(v);
            for (int u : newly) penalized[u] = 0;
        }
        self(self, i + 1, val);
    };
    rec(rec, 0, Rat(0));
    return best;
}

inline PsidStarResult psid_star_solve(const PartialOrientation& d, std::vector<Bits> cols,
                                      bool complete_pool, int max_iters) {
    int n = d.n();
    PsidStarResult out;
    for (int iter = 0;; ++iter) {
        if (iter > max_iters) throw ConvergenceError("column generation iteration cap hit");
        // rows 0..n-1 coverage (>=1), rows n..2n-1 locality: t - seen >= 1
        LpProblem p;
        for (int i = 0; i < 2 * n; ++i) p.add_row(Sense::ge, Rat(1));
        std::vector<std::pair<int, Rat>> t_entries;
        for (int v = 0; v < n; ++v) t_entries.emplace_back(n + v, Rat(1));
        p.add_col(Rat(1), std::move(t_entries));  // the local-weight variable
        for (const auto& set : cols) {
            std::vector<std::pair<int, Rat>> entries;
            for (int v = set.lowest(); v != -1; v = set.next(v)) entries.emplace_back(v, Rat(1));
            for (int v = 0; v < n; ++v)
                if (d.out_exact(v).intersects(set)) entries.emplace_back(n + v, Rat(-1));
            p.add_col(Rat(0), std::move(entries));
        }
        LpSolution sol = solve_lp(p);
        if (sol.status != LpStatus::optimal)
            throw std::logic_error("psi_d* LP must be feasible and bounded");
        if (!complete_pool) {
            std::vector<Rat> y(sol.y.begin(), sol.y.begin() + n);
            std::vector<Rat> z(sol.y.begin() + n, sol.y.end());
            WeightedSetResult priced = psid_price(d, y, z);
            if (priced.weight > 0) {
                cols.push_back(priced.set);
                continue;
            }
        }
        out.value = sol.objective;
        out.primal.n = n;
        for (size_t j = 0; j < cols.size(); ++j)
            if (sol.x[j + 1] > 0) out.primal.weights.emplace_back(cols[j], sol.x[j + 1]);
        return out;
    }
}

}  // namespace detail

// psi_d*(D): minimal local weight of a fractional coloring, over ALL
// independent sets (smaller-than-maximal sets matter here). The enumerate
// method builds the full pool and throws OverflowError past pool_limit;
// column generation prices sets exactly and scales further.
inline PsidStarResult psi_d_star(const PartialOrientation& d,
                                 PsidStarMethod method = PsidStarMethod::column_generation,
                                 std::size_t pool_limit = 200000, int max_iters = 100000) {
    if (!d.fully_forced()) throw std::invalid_argument("psi_d* needs a fully forced digraph");
    if (d.n() == 0) return PsidStarResult{Rat(0), {}, false};
    if (method == PsidStarMethod::enumerate) {
        IndepEnum pool = enumerate_independent_sets(d.base, /*maximal_only=*/false, pool_limit + 1);
        if (pool.overflow)
            throw OverflowError("independent-set pool exceeds cap; use column generation");
        std::vector<Bits> cols;
        for (auto& s : pool.sets)
            if (s.any()) cols.push_back(std::move(s));  // empty set carries nothing
        return detail::psid_star_solve(d, std::move(cols), true, max_iters);
    }
    std::vector<Bits> cols;
    for (int v = 0; v < d.n(); ++v) {
        Bits b(d.n());
        b.set(v);
        cols.push_back(b);
    }
    PsidStarResult out = detail::psid_star_solve(d, std::move(cols), false, max_iters);
    out.used_column_generation = true;
    return out;
}

// Lifts an h-local r-multi-coloring to the fractional coloring putting weight
// 1/r on every color class.
inline FractionalColoring multicoloring_to_fractional(const PartialOrientation& d,
                                                      const MultiColoring& mc) {
    FractionalColoring fc;
    fc.n = d.n();
    for (int col = 0; col < mc.m; ++col) {
        Bits cls(d.n());
        for (int v = 0; v < d.n(); ++v)
            if (mc.sets[v].test(col)) cls.set(v);
        if (cls.any()) fc.weights.emplace_back(cls, Rat(1, mc.r));
    }
    return fc;
}

// h/r, the constructive psi_d* upper bound carried by a local multi-coloring.
inline Rat psi_d_star_upper_from_multicoloring(const PartialOrientation& d,
                                               const MultiColoring& mc,
                                               FractionalColoring* witness = nullptr) {
    if (!is_local_multicoloring(d, mc))
        throw std::invalid_argument("multi-coloring is not h-local");
    FractionalColoring fc = multicoloring_to_fractional(d, mc);
    if (witness) *witness = fc;
    Rat bound(mc.h, mc.r);
    bound.canonicalize();
    return bound;
}

struct RatioBound {
    bool exact = false;   // integral k: the value is the exact rational below
    Rat value;            // k^k/(k-1)^(k-1) when exact
    Real approx;          // always filled, >= 50 significant digits
    Real ek;              // e*k to the same precision
    bool below_ek = true; // value < e*k, decided against the rational e bounds
};

// k^k/(k-1)^(k-1) for rational k > 1. For k = p/q the q-th power of the value
// is exactly p^p / (q^q (p-q)^(p-q)), which is what the exact comparisons use.
inline RatioBound ratio_bound(const Rat& k) {
    if (k <= 1) throw std::invalid_argument("ratio_bound needs k > 1");
    RatioBound out;
    Int p = k.get_num(), q = k.get_den();
    if (!p.fits_ulong_p() || !q.fits_ulong_p())
        throw std::invalid_argument("ratio_bound: k too large for exact powering");
    Int valq_num = int_pow(p, mpz_get_ui(p.get_mpz_t()));
    Int valq_den = int_pow(q, mpz_get_ui(q.get_mpz_t())) *
                   int_pow(p - q, mpz_get_ui(Int(p - q).get_mpz_t()));
    Rat value_pow_q(valq_num, valq_den);
    value_pow_q.canonicalize();
    if (rat_is_integer(k)) {
        out.exact = true;
        out.value = value_pow_q;
        out.approx = real_of(out.value);
        // exact: value < e_lo * k implies value < e*k
        out.below_ek = out.value < euler_lo() * k;
    } else {
        out.approx = real_root(real_of(value_pow_q), mpz_get_ui(q.get_mpz_t()));
        // compare value^q against (e_lo * k)^q exactly
        out.below_ek = value_pow_q < rat_pow(euler_lo() * k, mpz_get_ui(q.get_mpz_t()));
    }
    out.ek = real_of(euler_lo() * k);
    return out;
}

// chi* <= k^k/(k-1)^(k-1) with k = psi_d*: exact rational comparison via the
// q-th powers.
inline bool ratio_inequality_holds(const Rat& chi_star, const Rat& k) {
    if (k <= 1) throw std::invalid_argument("ratio bound needs k > 1");
    Int p = k.get_num(), q = k.get_den();
    if (!p.fits_ulong_p() || !q.fits_ulong_p())
        throw std::invalid_argument("ratio bound: k too large for exact powering");
    unsigned long qe = mpz_get_ui(q.get_mpz_t());
    Rat lhs = rat_pow(chi_star, qe);
    Int num = int_pow(p, mpz_get_ui(p.get_mpz_t()));
    Int den = int_pow(q, qe) * int_pow(p - q, mpz_get_ui(Int(p - q).get_mpz_t()));
    Rat rhs(num, den);
    rhs.canonicalize();
    return lhs <= rhs;
}

struct VerifyRatioReport {
    Rat k;         // psi_d*(D)
    Rat chi_star;  // chi* of the underlying graph
    bool degenerate = false;  // no arcs: both parameters are 1
    bool holds = false;
    Real bound_approx;  // k^k/(k-1)^(k-1)
    Real slack_approx;  // bound - chi*
};

inline VerifyRatioReport verify_ratio(const PartialOrientation& d,
                                      PsidStarMethod method = PsidStarMethod::column_generation) {
    VerifyRatioReport rep;
    rep.chi_star = fractional_chromatic(d.base).value;
    rep.k = psi_d_star(d, method).value;
    if (d.arc_count() == 0) {
        rep.degenerate = true;
        rep.holds = rep.chi_star <= 1;
        rep.bound_approx = real_of(Rat(1));
        rep.slack_approx = rep.bound_approx - real_of(rep.chi_star);
        return rep;
    }
    rep.holds = ratio_inequality_holds(rep.chi_star, rep.k);
    rep.bound_approx = ratio_bound(rep.k).approx;
    rep.slack_approx = rep.bound_approx - real_of(rep.chi_star);
    return rep;
}

struct AlphaFormula {
    Int value;
    int best_l = 0;  // least maximizer
};

// max over integer l of (m-l) * C(l, k-1): the independence number of
// U_d(m,k).
inline AlphaFormula alpha_universal_directed(int m, int k) {
    if (k < 2 || m < k) throw std::invalid_argument("alpha formula needs m >= k >= 2");
    AlphaFormula out;
    out.value = 0;
    for (int l = k - 1; l <= m; ++l) {
        Int cand = Int(m - l) * binomial(l, k - 1);
        if (cand > out.value) {
            out.value = cand;
            out.best_l = l;
        }
    }
    return out;
}

}  // namespace lcn
