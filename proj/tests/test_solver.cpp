#include <doctest.h>

#include "lcn/generators.hpp"
#include "lcn/solver.hpp"
#include "lcn/universal.hpp"
#include "lcn/verify.hpp"

#include "oracle.hpp"

using namespace lcn;

TEST_CASE("psi: complete graphs and small bruteable graphs") {
    for (int n = 2; n <= 6; ++n) {
        PsiResult r = local_chromatic(complete_graph(n));
        CHECK(r.exact);
        CHECK(r.value == n);
    }
    CHECK(local_chromatic(cycle_graph(5)).value == oracle::psi_brute(cycle_graph(5)));
    CHECK(local_chromatic(path_graph(4)).value == 2);
}

TEST_CASE("psi agrees with the partition brute force on graphs up to 9 vertices") {
    for (int i = 0; i < 12; ++i) {
        Graph g = oracle::random_graph(5 + i % 5, 45, 40 + i);
        PsiResult r = local_chromatic(g);
        CHECK(r.exact);
        CHECK(r.value == oracle::psi_brute(g));
        CHECK(locality(g, r.witness).max == r.value);
    }
}

TEST_CASE("psi of U(5,3) is 3 with the natural coloring as witness class") {
    Graph u = universal_undirected(5, 3);
    PsiResult r = local_chromatic(u);
    CHECK(r.exact);
    CHECK(r.value == 3);
    CHECK(locality(u, r.witness).max == 3);
}

TEST_CASE("psi of the gap graph is exactly 4") {
    GapGraph gap = counterexample_graph();
    PsiResult r = local_chromatic(gap.g);
    CHECK(r.exact);
    CHECK(r.value == 4);
    CHECK(is_proper(gap.g, r.witness));
    CHECK(locality(gap.g, r.witness).max == 4);
}

TEST_CASE("directed psi_d: basics and brute-force agreement") {
    PsiResult r = directed_local_chromatic(directed_cycle(3));
    CHECK(r.exact);
    CHECK(r.value == 2);
    CHECK(oracle::psi_d_brute(directed_cycle(3)) == 2);

    for (int n = 2; n <= 5; ++n) {
        PsiResult b = directed_local_chromatic(PartialOrientation::bidirected(complete_graph(n)));
        CHECK(b.value == n);
    }
    for (int i = 0; i < 10; ++i) {
        PartialOrientation d = random_digraph(6, 4, 10, 1500 + i);
        PsiResult s = directed_local_chromatic(d);
        CHECK(s.exact);
        CHECK(s.value == oracle::psi_d_brute(d));
    }
    CHECK_THROWS(directed_local_chromatic(PartialOrientation(cycle_graph(4))));
}

TEST_CASE("psi_d of U_d(5,3) is 3") {
    PsiResult r = directed_local_chromatic(universal_directed(5, 3));
    CHECK(r.exact);
    CHECK(r.value == 3);
}

TEST_CASE("psi_d <= psi <= chi on random instances") {
    for (int i = 0; i < 10; ++i) {
        Graph g = oracle::random_graph(8, 40, 2000 + i);
        PsiResult psi = local_chromatic(g);
        PsiResult chi = chromatic(g);
        CHECK(psi.value <= chi.value);
        PartialOrientation d((Graph(g)));
        int e = 0;
        for (auto [u, v] : g.edges) (counter_rng(9, i, e++) & 1) ? d.force(u, v) : d.force(v, u);
        CHECK(directed_local_chromatic(d).value <= psi.value);
    }
}

TEST_CASE("chromatic numbers") {
    CHECK(chromatic(universal_undirected(4, 3)).value == 3);
    CHECK(chromatic(cycle_graph(5)).value == 3);
    PsiResult r = chromatic(universal_undirected(5, 3));
    CHECK(r.exact);
    CHECK(r.value >= 4);  // strictly above psi = 3
    CHECK(is_proper(universal_undirected(5, 3), r.witness));
    for (int i = 0; i < 8; ++i) {
        Graph g = oracle::random_graph(8, 45, 2600 + i);
        CHECK(chromatic(g).value == oracle::chi_brute(g));
    }
}

TEST_CASE("enumerate_local_colorings: universal graphs") {
    Graph u43 = universal_undirected(4, 3);
    auto e43 = enumerate_local_colorings(u43, 3, 12);
    CHECK(e43.status == LocalColoringEnum::Status::complete);
    CHECK(e43.classes.size() == 5);
    CHECK(oracle::count_local_k_classes(u43, 3) == 5);
    bool has_natural = false;
    Coloring nat43 = natural_coloring(u43, 4).canonical();
    for (const auto& c : e43.classes)
        if (c == nat43) has_natural = true;
    CHECK(has_natural);

    Graph u53 = universal_undirected(5, 3);
    auto e53 = enumerate_local_colorings(u53, 3, 30);
    CHECK(e53.status == LocalColoringEnum::Status::complete);
    REQUIRE(e53.classes.size() == 1);
    CHECK(e53.classes[0] == natural_coloring(u53, 5).canonical());

    auto ek3 = enumerate_local_colorings(complete_graph(3), 3, 3);
    CHECK(ek3.classes.size() == 1);
}

TEST_CASE("uniqueness of the local 3-coloring also holds at (6,3)") {
    Graph u63 = universal_undirected(6, 3);
    CHECK(local_chromatic(u63).value == 3);
    auto e = enumerate_local_colorings(u63, 3, 60, 100);
    CHECK(e.status == LocalColoringEnum::Status::complete);
    REQUIRE(e.classes.size() == 1);
    CHECK(e.classes[0] == natural_coloring(u63, 6).canonical());
}

TEST_CASE("enumerate agrees with the partition brute force") {
    for (int i = 0; i < 8; ++i) {
        Graph g = oracle::random_graph(7, 40, 3100 + i);
        for (int k = 2; k <= 4; ++k) {
            auto e = enumerate_local_colorings(g, k, g.n);
            CHECK(e.status == LocalColoringEnum::Status::complete);
            CHECK(static_cast<int>(e.classes.size()) == oracle::count_local_k_classes(g, k));
        }
    }
}

TEST_CASE("enumerate is nonempty exactly when psi <= k") {
    for (int i = 0; i < 6; ++i) {
        Graph g = oracle::random_graph(7, 50, 3300 + i);
        int psi = local_chromatic(g).value;
        for (int k = 2; k <= psi + 1; ++k) {
            auto e = enumerate_local_colorings(g, k, g.n);
            CHECK((e.classes.size() > 0) == (psi <= k));
        }
    }
}

TEST_CASE("enumeration cap overflows explicitly") {
    // an edgeless graph has Bell(6) = 203 partition classes, far past the cap
    auto e = enumerate_local_colorings(Graph(6), 2, 6, 3);
    CHECK(e.status == LocalColoringEnum::Status::cap_overflow);
    CHECK(e.classes.size() == 3);
    auto full = enumerate_local_colorings(Graph(6), 2, 6, 1000);
    CHECK(full.status == LocalColoringEnum::Status::complete);
    CHECK(full.classes.size() == 203);
    CHECK_THROWS(enumerate_local_colorings(path_graph(4), 2, 5));  // max_colors > n
}

TEST_CASE("budget exhaustion reports a usable lower bound") {
    GapGraph gap = counterexample_graph();
    PsiResult r = local_chromatic(gap.g, Budget::nodes(50));
    CHECK_FALSE(r.exact);
    CHECK(r.value >= 3);      // the clique bound has already been established
    CHECK(r.value <= 4);      // never above the true value
    CHECK(r.upper >= 4);      // greedy fallback stays an upper bound
    CHECK(is_proper(gap.g, r.witness));
}

TEST_CASE("psi_d_max exhaustive: C5 and K2") {
    PsidMaxResult c5 = psi_d_max_exhaustive(cycle_graph(5));
    CHECK(c5.exact);
    CHECK(c5.upper == 3);
    PsidMaxResult k2 = psi_d_max_exhaustive(complete_graph(2));
    CHECK(k2.upper == 2);
    CHECK_THROWS(psi_d_max_exhaustive(universal_undirected(5, 3)));  // > 20 edges
}

TEST_CASE("psi_d_max exhaustive agrees with per-orientation brute force") {
    auto brute_max = [](const Graph& g) {
        int brute = 0;
        for (std::uint64_t mask = 0; mask < (1ull << g.m()); ++mask) {
            PartialOrientation d((Graph(g)));
            for (int e = 0; e < g.m(); ++e) {
                auto [u, v] = g.edges[e];
                (mask >> e & 1) ? d.force(u, v) : d.force(v, u);
            }
            brute = std::max(brute, oracle::psi_d_brute(d));
        }
        return brute;
    };
    CHECK(brute_max(cycle_graph(5)) == 3);  // the frozen C5 value comes from here
    CHECK(psi_d_max_exhaustive(cycle_graph(5)).upper == 3);
    Graph g = oracle::random_graph(5, 60, 4100);
    CHECK(psi_d_max_exhaustive(g).upper == brute_max(g));
}

TEST_CASE("certificate mode bounds psi_d_max of the gap graph by 3") {
    GapCertificates gc = gap1_certificates();
    PsidMaxResult r = psi_d_max_certificates(gc.gap.g, gc.certs);
    CHECK(r.covered);
    CHECK(r.upper == 3);
    CHECK(r.lower == 3);
    CHECK(r.exact);
}

TEST_CASE("certificate bounds bracket the exhaustive value") {
    // on C5 any proper coloring is pessimistically local-3, so a two-leaf
    // decision tree over one edge is a valid certificate set
    Graph c5 = cycle_graph(5);
    Coloring c(5);
    c[0] = 0, c[1] = 1, c[2] = 0, c[3] = 1, c[4] = 2;
    std::vector<OrientationCertificate> certs;
    for (int dir = 0; dir < 2; ++dir) {
        PartialOrientation po((Graph(c5)));
        dir ? po.force(0, 1) : po.force(1, 0);
        certs.push_back({po, c});
    }
    PsidMaxResult cert = psi_d_max_certificates(c5, certs);
    PsidMaxResult exact = psi_d_max_exhaustive(c5);
    CHECK(cert.covered);
    CHECK(cert.upper >= exact.upper);
    CHECK(cert.lower <= exact.upper);
}

TEST_CASE("certificate mode reports uncovered orientations") {
    GapCertificates gc = gap1_certificates();
    std::vector<OrientationCertificate> one = {gc.certs[0]};
    PsidMaxResult r = psi_d_max_certificates(gc.gap.g, one);
    CHECK_FALSE(r.covered);
    REQUIRE(r.uncovered_example.has_value());
    // the gap example really does dodge the pattern
    CHECK(r.uncovered_example->has_arc(gc.gap.y, gc.gap.x));
    CHECK_FALSE(r.exact);
}
