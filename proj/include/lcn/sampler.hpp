#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lcn/coloring.hpp"
#include "lcn/fractional.hpp"
#include "lcn/graph.hpp"
#include "lcn/rational.hpp"
#include "lcn/real.hpp"

namespace lcn {

// Exact-when-possible scalar: rational while gamma is rational (r = 1), a
// 256-bit real otherwise.
struct Scalar {
    bool exact = false;
    Rat q;
    Real f;

    static Scalar of(Rat r) {
        Scalar s;
        s.exact = true;
        s.q = r;
        s.f = real_of(s.q);
        return s;
    }
    static Scalar of_real(Real r) {
        Scalar s;
        s.exact = false;
        s.f = r;
        return s;
    }
    double to_double() const { return f.get_d(); }
};

// gamma = (1 - r/h)^(1/r): exact for r = 1, else a high-precision real.
inline Scalar optimal_gamma(int h, int r) {
    if (r < 1 || r >= h) throw std::invalid_argument("optimal_gamma needs 1 <= r < h");
    if (r == 1) return Scalar::of(rat(h - 1, h));
    return Scalar::of_real(real_root(real_of(rat(h - r, h)), r));
}

struct SamplerConfig {
    Scalar gamma;  // in (0,1)
    std::uint64_t trials = 1;
    std::uint64_t master_seed = 0;
};

// Counter-based generator: every draw is a pure function of
// (master_seed, trial_index, color_index), so trials are reproducible and
// independent of evaluation order.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}
inline std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t trial, std::uint64_t idx) {
    return mix64(mix64(mix64(seed) ^ (0x9e3779b97f4a7c15ull * (trial + 1))) ^
                 (0xc2b2ae3d27d4eb4full * (idx + 1)));
}

namespace detail {

inline bool draw_selected(const Scalar& gamma, std::uint64_t seed, std::uint64_t trial,
                          std::uint64_t color) {
    std::uint64_t u = counter_rng(seed, trial, color);
    if (gamma.exact) {
        // selected with probability 1-gamma: u/2^64 < 1-gamma, exactly
        Rat sel = 1 - gamma.q;
        Int lhs = Int(u) * sel.get_den();
        Int rhs = sel.get_num() << 64;
        return lhs < rhs;
    }
    Real uf = Real(u, kRealBits) / real_of(rat_pow(Rat(2), 64));
    return uf < (real_of_ui(1) - gamma.f);
}

// Selected-color mask for one trial (color set sizes here are <= 64).
inline std::uint64_t selected_mask(const MultiColoring& mc, const SamplerConfig& cfg,
                                   std::uint64_t trial) {
    if (mc.m > 64) throw std::invalid_argument("sampler supports at most 64 colors");
    std::uint64_t mask = 0;
    for (int c = 0; c < mc.m; ++c)
        if (draw_selected(cfg.gamma, cfg.master_seed, trial, c)) mask |= 1ull << c;
    return mask;
}

inline std::uint64_t bits_to_mask(const Bits& b) {
    std::uint64_t m = 0;
    for (int i = b.lowest(); i != -1; i = b.next(i)) m |= 1ull << i;
    return m;
}

struct SamplerTables {
    std::vector<std::uint64_t> own;   // chi(v)
    std::vector<std::uint64_t> seen;  // S_v = union of chi over N_+(v)
};

inline SamplerTables sampler_tables(const PartialOrientation& d, const MultiColoring& mc) {
    SamplerTables t;
    t.own.resize(d.n());
    t.seen.assign(d.n(), 0);
    for (int v = 0; v < d.n(); ++v) t.own[v] = bits_to_mask(mc.sets[v]);
    for (int v = 0; v < d.n(); ++v) {
        Bits outs = d.out_exact(v);
        for (int w = outs.lowest(); w != -1; w = outs.next(w)) t.seen[v] |= t.own[w];
    }
    return t;
}

}  // namespace detail

// The selected-color set C' for one trial, as a bitmask over the mc colors.
inline std::uint64_t selected_color_mask(const MultiColoring& mc, const SamplerConfig& cfg,
                                         std::uint64_t trial) {
    return detail::selected_mask(mc, cfg, trial);
}

// I = { v : chi(v) meets C', no out-neighbor color meets C' } for an explicit
// selected-color set; the deterministic core of the sampler.
inline Bits sample_from_selected(const PartialOrientation& d, const MultiColoring& mc,
                                 std::uint64_t selected) {
    detail::SamplerTables t = detail::sampler_tables(d, mc);
    Bits out(d.n());
    for (int v = 0; v < d.n(); ++v)
        if ((t.own[v] & selected) && !(t.seen[v] & selected)) out.set(v);
    return out;
}

// One reproducible trial. Checks that mc really is an h-local
// r-multi-coloring (class independence violations throw).
inline Bits sample_independent_set(const PartialOrientation& d, const MultiColoring& mc,
                                   const SamplerConfig& cfg, std::uint64_t trial) {
    if (!is_local_multicoloring(d, mc))
        throw std::invalid_argument("multi-coloring is not h-local");
    return sample_from_selected(d, mc, detail::selected_mask(mc, cfg, trial));
}

// P[v in I] = (1 - gamma^r) * gamma^{|S_v|}; the two events are independent
// because S_v and chi(v) are disjoint for a proper multi-coloring.
inline Scalar membership_probability_exact(const PartialOrientation& d, const MultiColoring& mc,
                                           const Scalar& gamma, int v) {
    detail::SamplerTables t = detail::sampler_tables(d, mc);
    int s = __builtin_popcountll(t.seen[v]);
    if (gamma.exact) {
        Rat g = gamma.q;
        return Scalar::of((1 - rat_pow(g, mc.r)) * rat_pow(g, s));
    }
    Real g = gamma.f;
    return Scalar::of_real((real_of_ui(1) - real_pow_ui(g, mc.r)) * real_pow_ui(g, s));
}

// (h/r - 1)^(h/r - 1) / (h/r)^(h/r), the per-vertex guarantee at the optimal
// gamma; exact when r divides h.
inline Scalar membership_bound(int h, int r) {
    if (r < 1 || r >= h) throw std::invalid_argument("membership bound needs 1 <= r < h");
    if (h % r == 0) {
        unsigned long t = static_cast<unsigned long>(h / r);
        Rat value = Rat(int_pow(Int(t - 1), t - 1), int_pow(Int(t), t));
        value.canonicalize();
        return Scalar::of(value);
    }
    // bound^r = ((h-r)/r)^(h-r) / (h/r)^h is rational; take the r-th root
    Rat powr = rat_pow(rat(h - r, r), h - r) / rat_pow(rat(h, r), h);
    return Scalar::of_real(real_root(real_of(powr), r));
}

struct MembershipReport {
    struct Row {
        Scalar exact;
        double empirical = 0;
        double stderr_est = 0;
        bool within_4se = true;
        bool meets_bound = true;
    };
    std::vector<Row> rows;
    Scalar bound;
    bool all_meet_bound = true;
    bool all_within_4se = true;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

inline MembershipReport estimate_membership(const PartialOrientation& d, const MultiColoring& mc,
                                            const SamplerConfig& cfg) {
    if (!is_local_multicoloring(d, mc))
        throw std::invalid_argument("multi-coloring is not h-local");
    detail::SamplerTables t = detail::sampler_tables(d, mc);
    MembershipReport rep;
    rep.trials = cfg.trials;
    rep.seed = cfg.master_seed;
    rep.bound = membership_bound(mc.h, mc.r);
    std::vector<std::uint64_t> hits(d.n(), 0);
    for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
        std::uint64_t sel = detail::selected_mask(mc, cfg, trial);
        for (int v = 0; v < d.n(); ++v)
            if ((t.own[v] & sel) && !(t.seen[v] & sel)) ++hits[v];
    }
    for (int v = 0; v < d.n(); ++v) {
        MembershipReport::Row row;
        row.exact = membership_probability_exact(d, mc, cfg.gamma, v);
        row.empirical = static_cast<double>(hits[v]) / static_cast<double>(cfg.trials);
        double p = row.exact.to_double();
        row.stderr_est = std::sqrt(p * (1 - p) / static_cast<double>(cfg.trials));
        row.within_4se = std::abs(row.empirical - p) <= 4 * row.stderr_est;
        if (row.exact.exact && rep.bound.exact)
            row.meets_bound = row.exact.q >= rep.bound.q;
        else
            row.meets_bound = row.exact.f >= rep.bound.f - Real(1e-60, kRealBits);
        rep.all_meet_bound = rep.all_meet_bound && row.meets_bound;
        rep.all_within_4se = rep.all_within_4se && row.within_4se;
        rep.rows.push_back(row);
    }
    return rep;
}

// chi*(G) <= 1 / min_v P[v in I]; at gamma = optimal_gamma(h,r) this is the
// (h/r)^(h/r) / (h/r-1)^(h/r-1) upper bound, instance by instance.
inline Scalar chi_upper_bound_from_sampler(const PartialOrientation& d, const MultiColoring& mc,
                                           const Scalar& gamma) {
    if (!is_local_multicoloring(d, mc))
        throw std::invalid_argument("multi-coloring is not h-local");
    bool first = true;
    Scalar best;
    for (int v = 0; v < d.n(); ++v) {
        Scalar p = membership_probability_exact(d, mc, gamma, v);
        bool smaller = first || (p.exact && best.exact ? p.q < best.q : p.f < best.f);
        if (smaller) best = p;
        first = false;
    }
    if (best.exact) return Scalar::of(1 / best.q);
    return Scalar::of_real(real_of_ui(1) / best.f);
}

}  // namespace lcn
