#pragma once

#include <optional>
#include <stdexcept>

#include "lcn/fractional.hpp"
#include "lcn/graph.hpp"
#include "lcn/indep.hpp"

namespace lcn {

// An independent set A0 containing v0 whose optimal fractional-clique weight
// is exactly 1. One always exists at a dual optimum: otherwise t_{v0} could
// grow, contradicting optimality.
struct TightSetCertificate {
    int v0 = 0;
    Bits a0;
    FractionalClique clique;
    Rat chi_star;
    Rat tightness;  // Σ_{v∈A0} t_v, always exactly 1
};

inline TightSetCertificate tight_independent_set(const Graph& g, int v0) {
    g.check_vertex(v0);
    ChiStarResult lp = fractional_chromatic(g);
    TightSetCertificate cert;
    cert.v0 = v0;
    cert.clique = lp.dual;
    cert.chi_star = lp.value;
    std::optional<Bits> best;
    for_each_maximal_independent_set(g, [&](const Bits& s) {
        if (s.test(v0) && lp.dual.weight_of(s) == 1)
            if (!best || s.lex_less(*best)) best = s;
        return true;
    });
    if (!best)
        throw std::logic_error(
            "no tight independent set through the vertex: the clique LP solution is not optimal");
    cert.a0 = *best;
    cert.tightness = lp.dual.weight_of(*best);
    return cert;
}

enum class FreePolicy { leave_free, lexicographic };

struct MaxOrientation {
    PartialOrientation d;
    TightSetCertificate cert;
};

// Orients every edge leaving A0 outward; the rest stay free or get the
// lexicographic completion. Any completion attains psi_d* = chi*, since only
// the arcs out of A0 enter the argument.
inline MaxOrientation max_orientation(const Graph& g, int v0,
                                      FreePolicy policy = FreePolicy::lexicographic) {
    MaxOrientation out;
    out.cert = tight_independent_set(g, v0);
    PartialOrientation d((Graph(g)));
    for (auto [u, v] : g.edges) {
        bool iu = out.cert.a0.test(u), iv = out.cert.a0.test(v);
        if (iu && !iv)
            d.force(u, v);
        else if (iv && !iu)
            d.force(v, u);
        // both inside A0 is impossible: A0 is independent
    }
    if (policy == FreePolicy::lexicographic) d = d.completed_lexicographic();
    out.d = d;
    return out;
}

struct FrakceqReport {
    Rat chi_star;
    Rat psi_d_star;
    bool equal = false;
    int v0 = 0;
    Bits a0;
};

// The orientation-attains-chi* check: psi_d* of the constructed (completed)
// orientation equals chi*(G) as an exact rational identity.
inline FrakceqReport verify_frakceq(const Graph& g, int v0 = 0,
                                    PsidStarMethod method = PsidStarMethod::column_generation) {
    MaxOrientation mo = max_orientation(g, v0, FreePolicy::lexicographic);
    FrakceqReport rep;
    rep.v0 = v0;
    rep.a0 = mo.cert.a0;
    rep.chi_star = mo.cert.chi_star;
    rep.psi_d_star = psi_d_star(mo.d, method).value;
    rep.equal = rep.chi_star == rep.psi_d_star;
    return rep;
}

}  // namespace lcn
