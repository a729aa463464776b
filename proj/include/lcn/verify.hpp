#pragma once

#include <map>
#include <string>
#include <vector>

#include "lcn/fractional.hpp"
#include "lcn/generators.hpp"
#include "lcn/graph_io.hpp"
#include "lcn/orientation.hpp"
#include "lcn/report.hpp"
#include "lcn/sampler.hpp"
#include "lcn/solver.hpp"
#include "lcn/universal.hpp"

namespace lcn {

// Expected values for the scripted verification recipes, kept as data so the
// recipes only ever compare live solver output against this table.
struct ExpectedClaim {
    const char* id;
    const char* expected;
    const char* source;  // which theorem/lemma of the toolkit taxonomy states it
};

inline const std::vector<ExpectedClaim>& expected_claims() {
    static const std::vector<ExpectedClaim> table = {
        {"unicolor.u53.local3_classes", "1", "lemma:unicolor"},
        {"k1k.u43.local3_classes", "5", "lemma:k1k"},
        {"gap1.psi", "4", "thm:gap1"},
        {"gap1.psid_max", "3", "thm:gap1"},
        {"ratio_b.5.3.alpha", "6", "thm:ratio(b)"},
        {"ratio_b.5.3.chi_star", "5", "thm:ratio(b)"},
        {"ratio_b.5.3.psi_d", "3", "thm:ratio(b)"},
        {"ratio_b.5.3.lower", "108/25", "thm:ratio(b)"},
        {"ratio_b.5.3.upper", "27/4", "thm:ratio(a)"},
        {"sampler.u53.exact_probability", "4/27", "thm:ratio(a) proof"},
        {"sampler.u53.chi_upper", "27/4", "lemma:fracchrom"},
    };
    return table;
}

inline std::string expected(const std::string& id) {
    for (const auto& c : expected_claims())
        if (id == c.id) return c.expected;
    throw std::logic_error("no expected claim with id " + id);
}

// ---- gap1 machinery ---------------------------------------------------------

struct GapCertificates {
    GapGraph gap;
    std::vector<OrientationCertificate> certs;  // {x->y with g}, {y->x with g'}
};

// The two-leaf decision tree over the edge {x,y}: coloring g when it points
// x->y, coloring g' when it points y->x; everything else stays free.
inline GapCertificates gap1_certificates() {
    GapCertificates out;
    out.gap = counterexample_graph();
    const Graph& g = out.gap.g;
    Coloring nat(g.n);
    for (int v = 0; v < g.n - 3; ++v) {
        const std::string& lab = g.labels[v];
        nat[v] = std::stoi(lab.substr(1, lab.find(',') - 1)) - 1;
    }
    auto make = [&](bool x_to_y) {
        PartialOrientation po((Graph(g)));
        Coloring c = nat;
        if (x_to_y) {
            po.force(out.gap.x, out.gap.y);
            c[out.gap.x] = 0;  // color 1
            c[out.gap.y] = 1;  // color 2
        } else {
            po.force(out.gap.y, out.gap.x);
            c[out.gap.x] = 2;  // color 3
            c[out.gap.y] = 0;  // color 1
        }
        c[out.gap.z] = 3;  // color 4
        return OrientationCertificate{std::move(po), std::move(c)};
    };
    out.certs.push_back(make(true));
    out.certs.push_back(make(false));
    return out;
}

// ---- recipes ----------------------------------------------------------------

inline VerificationReport verify_unicolor(Budget budget = {}) {
    WallTimer timer;
    VerificationReport rep;
    rep.theorem = "unicolor";
    Graph u = universal_undirected(5, 3);
    auto e = enumerate_local_colorings(u, 3, u.n, 1000, budget);
    bool complete = e.status == LocalColoringEnum::Status::complete;
    rep.add("local 3-colorings of U(5,3) up to color permutation",
            expected("unicolor.u53.local3_classes"), std::to_string(e.classes.size()),
            complete && std::to_string(e.classes.size()) == expected("unicolor.u53.local3_classes"));
    Coloring nat = natural_coloring(u, 5).canonical();
    bool is_natural = complete && e.classes.size() == 1 && e.classes[0] == nat;
    rep.add("the single class is the natural coloring", "natural",
            is_natural ? "natural" : "other", is_natural);
    rep.wall_ms = timer.ms();
    return rep;
}

inline VerificationReport verify_k1k(Budget budget = {}) {
    WallTimer timer;
    VerificationReport rep;
    rep.theorem = "k1k";
    Graph u = universal_undirected(4, 3);
    auto e = enumerate_local_colorings(u, 3, u.n, 1000, budget);
    bool complete = e.status == LocalColoringEnum::Status::complete;
    rep.add("local 3-colorings of U(4,3) up to color permutation",
            expected("k1k.u43.local3_classes"), std::to_string(e.classes.size()),
            complete && std::to_string(e.classes.size()) == expected("k1k.u43.local3_classes"));
    Coloring nat = natural_coloring(u, 4).canonical();
    bool found_nat = false;
    int proper3 = 0;
    for (const auto& c : e.classes) {
        if (c == nat) found_nat = true;
        if (c.num_colors() == 3) ++proper3;
    }
    rep.add("classes include the natural coloring", "yes", found_nat ? "yes" : "no", found_nat);
    rep.add("remaining classes are proper 3-colorings", "4", std::to_string(proper3), proper3 == 4);
    rep.wall_ms = timer.ms();
    return rep;
}

inline VerificationReport verify_gap1(Budget budget = {}) {
    WallTimer timer;
    VerificationReport rep;
    rep.theorem = "gap1";
    GapCertificates gc = gap1_certificates();
    const Graph& g = gc.gap.g;

    PsiResult psi = local_chromatic(g, budget);
    rep.add("psi of the 33-vertex graph", expected("gap1.psi"),
            psi.exact ? std::to_string(psi.value) : (">=" + std::to_string(psi.value)),
            psi.exact && std::to_string(psi.value) == expected("gap1.psi"));
    bool witness_ok = psi.exact && locality(g, psi.witness).max == psi.value;
    rep.add("local 4-coloring witness checks", "4",
            psi.exact ? std::to_string(locality(g, psi.witness).max) : "-", witness_ok);

    for (size_t i = 0; i < gc.certs.size(); ++i) {
        bool ok = verify_orientation_certificate(gc.certs[i].pattern, gc.certs[i].coloring, 3);
        rep.add("certificate " + std::to_string(i + 1) + " holds over all completions", "yes",
                ok ? "yes" : "no", ok);
    }
    PsidMaxResult pm = psi_d_max_certificates(g, gc.certs, nullptr, budget);
    rep.add("certificate patterns cover every orientation", "yes", pm.covered ? "yes" : "no",
            pm.covered);
    rep.add("psi_d over all orientations", expected("gap1.psid_max"),
            pm.exact ? std::to_string(pm.upper)
                     : ("[" + std::to_string(pm.lower) + "," + std::to_string(pm.upper) + "]"),
            pm.exact && std::to_string(pm.upper) == expected("gap1.psid_max"));
    bool strict = psi.exact && pm.exact && pm.upper < psi.value;
    rep.add("psi_d,max < psi", "yes", strict ? "yes" : "no", strict);
    rep.wall_ms = timer.ms();
    return rep;
}

inline VerificationReport verify_ize(std::uint64_t seed = 42) {
    WallTimer timer;
    VerificationReport rep;
    rep.theorem = "ize";
    rep.seed = seed;
    std::vector<std::pair<std::string, Graph>> graphs;
    graphs.emplace_back("P4", path_graph(4));
    graphs.emplace_back("C5", cycle_graph(5));
    graphs.emplace_back("K4", complete_graph(4));
    graphs.emplace_back("Petersen", petersen_graph());
    for (auto& [name, g] : graphs) {
        for (int i = 0; i < 3; ++i) {
            int v0 = static_cast<int>(counter_rng(seed, i, fnv1a64(name)) % g.n);
            TightSetCertificate cert = tight_independent_set(g, v0);
            bool tight = cert.tightness == 1 && cert.a0.test(v0) &&
                         is_independent(g, cert.a0) && cert.clique.valid(g) &&
                         cert.clique.total() == cert.chi_star;
            rep.add(name + " v0=" + std::to_string(v0) + ": tight independent set through v0",
                    "1", rat_str(cert.tightness), tight);
            // the inequality chain: for the constructed orientation, some
            // vertex of A0 sees weight >= chi* - 1 under any optimal
            // fractional coloring produced by the solver
            MaxOrientation mo = max_orientation(g, v0, FreePolicy::lexicographic);
            PsidStarResult ps = psi_d_star(mo.d);
            Rat best(-1);
            for (int v = mo.cert.a0.lowest(); v != -1; v = mo.cert.a0.next(v)) {
                Rat seen(0);
                for (const auto& [set, w] : ps.primal.weights)
                    if (set.intersects(g.adj[v])) seen += w;
                best = std::max(best, seen);
            }
            bool chain = best >= mo.cert.chi_star - 1;
            rep.add(name + " v0=" + std::to_string(v0) + ": some v in A0 sees >= chi*-1",
                    ">=" + rat_str(mo.cert.chi_star - 1), rat_str(best), chain);
            // the orientation leaves A0 with full out-neighborhoods
            bool outs_ok = true;
            for (int v = mo.cert.a0.lowest(); v != -1; v = mo.cert.a0.next(v))
                if (!(mo.d.out_exact(v) == g.adj[v])) outs_ok = false;
            rep.add(name + " v0=" + std::to_string(v0) + ": N+(v) = N(v) for v in A0", "yes",
                    outs_ok ? "yes" : "no", outs_ok);
        }
    }
    rep.wall_ms = timer.ms();
    return rep;
}

inline VerificationReport verify_frakceq(std::uint64_t seed = 42) {
    WallTimer timer;
    VerificationReport rep;
    rep.theorem = "frakceq";
    rep.seed = seed;
    std::vector<std::pair<std::string, Graph>> battery;
    battery.emplace_back("P4", path_graph(4));
    for (int n = 4; n <= 9; ++n) battery.emplace_back("C" + std::to_string(n), cycle_graph(n));
    for (int n = 2; n <= 6; ++n) battery.emplace_back("K" + std::to_string(n), complete_graph(n));
    battery.emplace_back("Petersen", petersen_graph());
    battery.emplace_back("U(4,3)", universal_undirected(4, 3));
    for (auto& [name, g] : battery) {
        for (int i = 0; i < 3; ++i) {
            int v0 = static_cast<int>(counter_rng(seed, i, fnv1a64(name)) % g.n);
            FrakceqReport fr = verify_frakceq(g, v0);
            rep.add(name + " v0=" + std::to_string(v0) + ": psi_d* of the built orientation = chi*",
                    rat_str(fr.chi_star), rat_str(fr.psi_d_star), fr.equal);
        }
    }
    rep.wall_ms = timer.ms();
    return rep;
}

inline VerificationReport verify_ratio_a(std::uint64_t seed = 7) {
    WallTimer timer;
    VerificationReport rep;
    rep.theorem = "ratio-a";
    rep.seed = seed;
    int violations = 0, checked = 0;
    for (int i = 0; i < 100; ++i) {
        int n = 5 + static_cast<int>(counter_rng(seed, i, 0) % 5);
        PartialOrientation d = random_digraph(n, 3, 10, seed * 1000 + i);
        VerifyRatioReport r = verify_ratio(d, PsidStarMethod::enumerate);
        ++checked;
        if (!r.holds) ++violations;
    }
    rep.add("chi* <= k^k/(k-1)^(k-1) on " + std::to_string(checked) + " random digraphs", "0",
            std::to_string(violations), violations == 0);
    for (int n : {3, 5}) {
        VerifyRatioReport r = verify_ratio(directed_cycle(n), PsidStarMethod::enumerate);
        rep.add("directed C" + std::to_string(n) + ": chi*=" + rat_str(r.chi_star) +
                    ", k=" + rat_str(r.k),
                "holds", r.holds ? "holds" : "violated", r.holds);
    }
    rep.wall_ms = timer.ms();
    return rep;
}

inline VerificationReport verify_ratio_b(int m = 5, int k = 3, Budget budget = {}) {
    WallTimer timer;
    VerificationReport rep;
    rep.theorem = "ratio-b";
    PartialOrientation ud = universal_directed(m, k);
    bool canonical_case = (m == 5 && k == 3);

    AlphaFormula formula = alpha_universal_directed(m, k);
    MisResult mis = max_independent_set(ud.base);
    std::string alpha_expect =
        canonical_case ? expected("ratio_b.5.3.alpha") : formula.value.get_str();
    rep.add("alpha(U_d(" + std::to_string(m) + "," + std::to_string(k) +
                ")) matches max_l (m-l)C(l,k-1)",
            alpha_expect, std::to_string(mis.alpha),
            std::to_string(mis.alpha) == alpha_expect && Int(mis.alpha) == formula.value);

    ChiStarResult chi = fractional_chromatic(ud.base);
    Rat by_transitivity = Rat(ud.n(), mis.alpha);
    by_transitivity.canonicalize();
    std::string chi_expect =
        canonical_case ? expected("ratio_b.5.3.chi_star") : rat_str(by_transitivity);
    rep.add("chi* = n/alpha by vertex transitivity", chi_expect, rat_str(chi.value),
            rat_str(chi.value) == chi_expect && chi.value == by_transitivity);

    // (1 - 1/m)^(k-1) * k^k/(k-1)^(k-1) <= chi* <= k^k/(k-1)^(k-1)
    Rat bound = ratio_bound(rat(k)).value;
    Rat lower = rat_pow(Rat(m - 1, m), k - 1) * bound;
    std::string lower_expect = canonical_case ? expected("ratio_b.5.3.lower") : rat_str(lower);
    rep.add("chi* >= (1-1/m)^(k-1) k^k/(k-1)^(k-1)", lower_expect, rat_str(lower),
            rat_str(lower) == lower_expect && chi.value >= lower);
    std::string upper_expect = canonical_case ? expected("ratio_b.5.3.upper") : rat_str(bound);
    rep.add("chi* <= k^k/(k-1)^(k-1)", upper_expect, rat_str(bound),
            rat_str(bound) == upper_expect && chi.value <= bound);

    Coloring nat = natural_coloring(ud.base, m);
    bool nat_local = locality_directed(ud, nat, OutMode::exact).max <= k;
    rep.add("natural coloring is a directed local k-coloring", "yes", nat_local ? "yes" : "no",
            nat_local);
    PsiResult psid = directed_local_chromatic(ud, budget);
    std::string psid_expect = canonical_case ? expected("ratio_b.5.3.psi_d") : std::to_string(k);
    rep.add("psi_d(U_d(m,k)) = k", psid_expect,
            psid.exact ? std::to_string(psid.value) : ">=" + std::to_string(psid.value),
            psid.exact && std::to_string(psid.value) == psid_expect);
    rep.wall_ms = timer.ms();
    return rep;
}

inline VerificationReport verify_sampler(std::uint64_t seed = 12345,
                                         std::uint64_t trials = 100000) {
    WallTimer timer;
    VerificationReport rep;
    rep.theorem = "sampler";
    rep.seed = seed;
    PartialOrientation ud = universal_directed(5, 3);
    MultiColoring mc = to_multicoloring(natural_coloring(ud.base, 5), 3);
    SamplerConfig cfg{optimal_gamma(3, 1), trials, seed};

    bool gamma_ok = cfg.gamma.exact && cfg.gamma.q == Rat(2, 3);
    rep.add("optimal gamma for (h,r)=(3,1)", "2/3", rat_str(cfg.gamma.q), gamma_ok);

    MembershipReport m = estimate_membership(ud, mc, cfg);
    bool all_exact = true;
    for (const auto& row : m.rows)
        if (!row.exact.exact || row.exact.q != rat_parse(expected("sampler.u53.exact_probability")))
            all_exact = false;
    rep.add("exact P[v in I] for every vertex", expected("sampler.u53.exact_probability"),
            m.rows.empty() ? "-" : rat_str(m.rows[0].exact.q), all_exact);
    bool bound_eq = m.bound.exact && m.bound.q == rat_parse(expected("sampler.u53.exact_probability"));
    rep.add("probability equals the (h/r-1)^(h/r-1)/(h/r)^(h/r) bound",
            expected("sampler.u53.exact_probability"), rat_str(m.bound.q), bound_eq);
    rep.add("empirical frequencies within 4 standard errors", "yes",
            m.all_within_4se ? "yes" : "no", m.all_within_4se);

    bool all_independent = true;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Bits s = sample_from_selected(ud, mc, selected_color_mask(mc, cfg, t));
        if (!is_independent(ud.base, s)) all_independent = false;
    }
    rep.add("every sampled set is independent", "yes", all_independent ? "yes" : "no",
            all_independent);

    Scalar ub = chi_upper_bound_from_sampler(ud, mc, cfg.gamma);
    Rat chi = fractional_chromatic(ud.base).value;
    bool ub_ok = ub.exact && rat_str(ub.q) == expected("sampler.u53.chi_upper") && ub.q >= chi;
    rep.add("1/min P[v in I] bounds chi* from above", expected("sampler.u53.chi_upper"),
            ub.exact ? rat_str(ub.q) : "inexact", ub_ok);
    rep.wall_ms = timer.ms();
    return rep;
}

}  // namespace lcn
