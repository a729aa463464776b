#include <doctest.h>

#include "lcn/generators.hpp"
#include "lcn/sampler.hpp"
#include "lcn/solver.hpp"
#include "lcn/universal.hpp"

#include "oracle.hpp"

using namespace lcn;

namespace {
MultiColoring natural_as_multi(const PartialOrientation& ud, int m, int h) {
    return to_multicoloring(natural_coloring(ud.base, m), h);
}
}  // namespace

TEST_CASE("optimal gamma") {
    Scalar g31 = optimal_gamma(3, 1);
    CHECK(g31.exact);
    CHECK(g31.q == rat(2, 3));
    Scalar g21 = optimal_gamma(2, 1);
    CHECK(g21.q == rat(1, 2));
    Scalar g42 = optimal_gamma(4, 2);
    CHECK_FALSE(g42.exact);
    CHECK(std::abs(g42.f.get_d() - 0.7071067811865476) < 1e-12);
    CHECK_THROWS(optimal_gamma(3, 3));
}

TEST_CASE("sampling from an explicit selected set") {
    // selecting every color leaves exactly the sinks
    PartialOrientation d((path_graph(3)));
    d.force(0, 1);
    d.force(1, 2);
    MultiColoring mc;
    mc.r = 1, mc.h = 2, mc.m = 2;
    mc.sets = {Bits::of(2, {0}), Bits::of(2, {1}), Bits::of(2, {0})};
    Bits all = sample_from_selected(d, mc, 0b11);
    CHECK(all == Bits::of(3, {2}));  // only the sink has no selected out-color

    // directed 3-cycle, singleton colors, C' = {color 0}: only vertex 0 is in
    PartialOrientation d3 = directed_cycle(3);
    MultiColoring m3;
    m3.r = 1, m3.h = 2, m3.m = 3;
    m3.sets = {Bits::of(3, {0}), Bits::of(3, {1}), Bits::of(3, {2})};
    CHECK(sample_from_selected(d3, m3, 0b001) == Bits::of(3, {0}));
    CHECK(sample_from_selected(d3, m3, 0b111) == Bits(3));  // everyone is blocked
}

TEST_CASE("every sampled set is independent") {
    PartialOrientation ud = universal_directed(5, 3);
    MultiColoring mc = natural_as_multi(ud, 5, 3);
    SamplerConfig cfg{optimal_gamma(3, 1), 10000, 424242};
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        Bits s = sample_from_selected(ud, mc, selected_color_mask(mc, cfg, t));
        REQUIRE(is_independent(ud.base, s));
    }
}

TEST_CASE("sampling validates the multi-coloring") {
    PartialOrientation d3 = directed_cycle(3);
    MultiColoring bad;
    bad.r = 1, bad.h = 2, bad.m = 1;
    bad.sets.assign(3, Bits::of(1, {0}));
    SamplerConfig cfg{optimal_gamma(2, 1), 1, 1};
    CHECK_THROWS(sample_independent_set(d3, bad, cfg, 0));
}

TEST_CASE("exact membership probabilities") {
    PartialOrientation ud = universal_directed(5, 3);
    MultiColoring mc = natural_as_multi(ud, 5, 3);
    Scalar gamma = Scalar::of(rat(2, 3));
    for (int v = 0; v < ud.n(); ++v) {
        Scalar p = membership_probability_exact(ud, mc, gamma, v);
        REQUIRE(p.exact);
        CHECK(p.q == rat(4, 27));  // (1 - 2/3) * (2/3)^2, since |S_v| = h - r
    }

    // sink vertex: |S_v| = 0 gives 1 - gamma^r
    PartialOrientation sink((path_graph(2)));
    sink.force(0, 1);
    MultiColoring smc;
    smc.r = 1, smc.h = 2, smc.m = 2;
    smc.sets = {Bits::of(2, {0}), Bits::of(2, {1})};
    CHECK(membership_probability_exact(sink, smc, gamma, 1).q == rat(1, 3));
}

TEST_CASE("membership probability is monotone decreasing in |S_v|") {
    // stars with out-degree 0,1,2,3 and distinct colors
    for (int deg = 0; deg <= 3; ++deg) {
        Graph g(4);
        for (int i = 1; i <= deg; ++i) g.add_edge(0, i);
        PartialOrientation d(std::move(g));
        for (int i = 1; i <= deg; ++i) d.force(0, i);
        MultiColoring mc;
        mc.r = 1, mc.h = 4, mc.m = 4;
        for (int v = 0; v < 4; ++v) mc.sets.push_back(Bits::of(4, {v}));
        Scalar p = membership_probability_exact(d, mc, Scalar::of(rat(1, 2)), 0);
        CHECK(p.q == rat(1, 2) * rat_pow(rat(1, 2), deg));
    }
}

TEST_CASE("closed form matches the full 2^|C| enumeration oracle") {
    Scalar gamma = Scalar::of(rat(2, 3));
    PartialOrientation ud = universal_directed(4, 3);
    MultiColoring mc = natural_as_multi(ud, 4, 3);
    for (int v = 0; v < ud.n(); ++v)
        CHECK(membership_probability_exact(ud, mc, gamma, v).q ==
              oracle::membership_brute(ud, mc, gamma.q, v));
    // and on seeded random digraphs with random proper colorings
    for (int i = 0; i < 5; ++i) {
        PartialOrientation d = random_digraph(6, 4, 10, 8600 + i);
        Coloring greedy = greedy_coloring(d.base);
        MultiColoring gm = to_multicoloring(greedy, d.n());
        if (!is_local_multicoloring(d, gm)) continue;  // h = n is always local, but be safe
        for (int v = 0; v < d.n(); ++v)
            CHECK(membership_probability_exact(d, gm, gamma, v).q ==
                  oracle::membership_brute(d, gm, gamma.q, v));
    }
}

TEST_CASE("estimate report: exact values, bound, 4-sigma band") {
    PartialOrientation ud = universal_directed(5, 3);
    MultiColoring mc = natural_as_multi(ud, 5, 3);
    SamplerConfig cfg{optimal_gamma(3, 1), 100000, 12345};
    MembershipReport rep = estimate_membership(ud, mc, cfg);
    CHECK(rep.bound.exact);
    CHECK(rep.bound.q == rat(4, 27));
    CHECK(rep.all_meet_bound);
    CHECK(rep.all_within_4se);
    for (const auto& row : rep.rows) {
        CHECK(row.exact.q == rat(4, 27));
        CHECK(std::abs(row.empirical - 4.0 / 27.0) <= 4 * row.stderr_est);
    }
}

TEST_CASE("arcless digraphs: every vertex has probability 1 - gamma^r") {
    Graph g(4);  // no edges at all
    PartialOrientation d(std::move(g));
    MultiColoring mc;
    mc.r = 1, mc.h = 2, mc.m = 2;
    mc.sets = {Bits::of(2, {0}), Bits::of(2, {1}), Bits::of(2, {0}), Bits::of(2, {1})};
    SamplerConfig cfg{Scalar::of(rat(1, 3)), 5000, 5};
    MembershipReport rep = estimate_membership(d, mc, cfg);
    for (const auto& row : rep.rows) CHECK(row.exact.q == rat(2, 3));  // 1 - 1/3
    CHECK(rep.all_within_4se);
}

TEST_CASE("membership bound at h/r = 2 is 1/4") {
    Scalar b = membership_bound(2, 1);
    CHECK(b.exact);
    CHECK(b.q == rat(1, 4));
    Scalar b42 = membership_bound(4, 2);
    CHECK(b42.exact);
    CHECK(b42.q == rat(1, 4));
    // non-integer ratio: h/r = 3/2 -> (1/2)^(1/2)/(3/2)^(3/2)
    Scalar b32 = membership_bound(3, 2);
    CHECK_FALSE(b32.exact);
    double want = std::pow(0.5, 0.5) / std::pow(1.5, 1.5);
    CHECK(std::abs(b32.f.get_d() - want) < 1e-12);
}

TEST_CASE("chi* upper bounds from the sampler") {
    PartialOrientation d3 = directed_cycle(3);
    MultiColoring m3;
    m3.r = 1, m3.h = 2, m3.m = 3;
    m3.sets = {Bits::of(3, {0}), Bits::of(3, {1}), Bits::of(3, {2})};
    Scalar ub = chi_upper_bound_from_sampler(d3, m3, Scalar::of(rat(1, 2)));
    CHECK(ub.exact);
    CHECK(ub.q == rat(4));  // 1 / ((1/2)(1/2)); chi*(C3) = 3 <= 4

    PartialOrientation ud = universal_directed(5, 3);
    Scalar u53 = chi_upper_bound_from_sampler(ud, natural_as_multi(ud, 5, 3), optimal_gamma(3, 1));
    CHECK(u53.q == rat(27, 4));
    CHECK(u53.q >= fractional_chromatic(ud.base).value);

    PartialOrientation bk2 = PartialOrientation::bidirected(complete_graph(2));
    Coloring two(2);
    two[0] = 0, two[1] = 1;
    Scalar ub2 = chi_upper_bound_from_sampler(bk2, to_multicoloring(two, 2), Scalar::of(rat(1, 2)));
    CHECK(ub2.q == rat(4));
}

TEST_CASE("empirical frequency tracks a hand-computed probability") {
    // single arc 0 -> 1, two colors, gamma = 1/2: P[0 in I] = 1/4, P[1 in I] = 1/2
    PartialOrientation d((path_graph(2)));
    d.force(0, 1);
    MultiColoring mc;
    mc.r = 1, mc.h = 2, mc.m = 2;
    mc.sets = {Bits::of(2, {0}), Bits::of(2, {1})};
    SamplerConfig cfg{Scalar::of(rat(1, 2)), 200000, 99};
    MembershipReport rep = estimate_membership(d, mc, cfg);
    CHECK(rep.rows[0].exact.q == rat(1, 4));
    CHECK(rep.rows[1].exact.q == rat(1, 2));
    CHECK(rep.all_within_4se);
}

TEST_CASE("counter rng is reproducible and order-free") {
    CHECK(counter_rng(1, 2, 3) == counter_rng(1, 2, 3));
    CHECK(counter_rng(1, 2, 3) != counter_rng(1, 3, 2));
    CHECK(counter_rng(2, 2, 3) != counter_rng(1, 2, 3));
}
