#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gcanon/integrate.hpp"
#include "gcanon/rng.hpp"
#include "gcanon/zeta.hpp"

using namespace gcanon;

TEST_CASE("determinism and worker independence") {
    IntegrateOptions o1{Sampler::kHepp, 20000, 99, 1};
    IntegrateOptions o2{Sampler::kHepp, 20000, 99, 2};
    auto a = integrate(fixture("W3"), CanonicalFormSpec({1}), o1);
    auto b = integrate(fixture("W3"), CanonicalFormSpec({1}), o2);
    CHECK(a.value == b.value);  // bit identical
    CHECK(a.std_error == b.std_error);
    auto c = integrate(fixture("W3"), CanonicalFormSpec({1}), o1);
    CHECK(a.value == c.value);
    IntegrateOptions o3{Sampler::kHepp, 20000, 100, 2};
    auto d = integrate(fixture("W3"), CanonicalFormSpec({1}), o3);
    CHECK(a.value != d.value);  // different seed, different stream
}

TEST_CASE("samplers agree within 3 sigma on W3") {
    IntegrateOptions u{Sampler::kUniform, 200000, 5, 2};
    IntegrateOptions h{Sampler::kHepp, 200000, 5, 2};
    auto a = integrate(fixture("W3"), CanonicalFormSpec({1}), u);
    auto b = integrate(fixture("W3"), CanonicalFormSpec({1}), h);
    double sigma = std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error);
    CHECK(std::fabs(a.value - b.value) <= 3 * sigma);
    double target = 60 * ReferenceConstants::get().zeta3.to_double();
    CHECK(std::fabs(b.value - target) <= 4 * b.std_error);
}

TEST_CASE("vanishing short-circuits return exact zero without sampling") {
    IntegrateOptions o{Sampler::kHepp, 1000, 1, 1};
    // one-vertex join with 10 edges: omega^9 vanishes on the top stratum
    Graph j = one_vertex_join(wheel(3), 0, cycle_graph(4), 0);
    j.label = "join";
    REQUIRE(j.e() == 10);
    auto est = integrate(j, CanonicalFormSpec({2}), o);
    CHECK(est.exact_zero);
    CHECK(est.value == 0);

    // primitive spec on a graph of non-zero degree: K4 plus two chords has
    // e=8, h=5, so degree -2; spec must have degree 7 -- no canonical spec
    // has degree 7, so test the degree filter on a 6-edge h=2 graph instead
    Graph c6 = cycle_graph(5);
    c6.edges.emplace_back(0, 2);  // e=6, h=2, degree 2, min degree 2
    auto est2 = integrate(c6, CanonicalFormSpec({1}), o);
    CHECK(est2.exact_zero);
}

TEST_CASE("degree mismatch is rejected") {
    IntegrateOptions o{Sampler::kHepp, 10, 1, 1};
    CHECK_THROWS(integrate(fixture("W3"), CanonicalFormSpec({2}), o));
}

TEST_CASE("integrand scale invariance (homogeneous of degree -e)") {
    auto f = make_integrand(fixture("Z5"), CanonicalFormSpec({2}));
    CounterRng rng{31};
    for (int rep = 0; rep < 10; rep++) {
        double x[10];
        double tot = 0;
        for (int e = 0; e < 10; e++) {
            x[e] = rng.uniform(rep, e) + 0.05;
            tot += x[e];
        }
        double g1 = f->eval(x);
        // normalize to the simplex chart: same value scaled by tot^e
        double y[10];
        for (int e = 0; e < 10; e++) y[e] = x[e] / tot;
        double g2 = f->eval(y);
        CHECK(g1 * std::pow(tot, 10) == doctest::Approx(g2).epsilon(1e-9));
        // chart x_{e0} = 1 for every e0: chart independence of the estimator
        for (int e0 = 0; e0 < 10; e0++) {
            double z[10];
            for (int e = 0; e < 10; e++) z[e] = x[e] / x[e0];
            double g3 = f->eval(z);
            CHECK(g1 * std::pow(x[e0], 10) == doctest::Approx(g3).epsilon(1e-9));
        }
    }
}

TEST_CASE("closed-form registry engages and is positive on samples") {
    auto f3 = make_integrand(fixture("W3"), CanonicalFormSpec({1}));
    CHECK(f3->describe().find("psi-rational") == 0);
    auto f5 = make_integrand(fixture("W5"), CanonicalFormSpec({2}));
    CHECK(f5->describe().find("psi-rational") == 0);
    auto fk = make_integrand(fixture("K6"), CanonicalFormSpec({1, 2}));
    CHECK(fk->describe().find("psi-rational") == 0);
    CounterRng rng{77};
    for (int rep = 0; rep < 200; rep++) {
        double x[15];
        for (int e = 0; e < 15; e++) x[e] = rng.uniform(rep, e) + 1e-3;
        CHECK(f3->eval(x) > 0);
        CHECK(f5->eval(x) > 0);
        CHECK(fk->eval(x) > 0);
    }
}

TEST_CASE("feynman residue integrand") {
    auto f = feynman_residue_integrand(fixture("W3"));
    IntegrateOptions o{Sampler::kHepp, 300000, 3, 2};
    auto est = integrate_with(*f, o);
    double target = 6 * ReferenceConstants::get().zeta3.to_double();
    CHECK(std::fabs(est.value - target) <= 4 * est.std_error);
    CHECK_THROWS(feynman_residue_integrand(banana(3)));
    Graph w4 = wheel(4);
    auto f4 = feynman_residue_integrand(w4);  // degree 0, no divergent subgraphs
    CHECK(f4->edges() == 8);
}

TEST_CASE("stokes all-terms-vanish short circuit") {
    // A graph whose contractions all die and with no core gamma faces of
    // the right degrees: take the 3-banana subdivided everywhere (cycle
    // doubles...) -- use theta graph with both vertices tripled:
    // simplest honest case: C4 with doubled opposite edges has tadpole-free
    // faces that all vanish for w5 (e=6... ) -- verify on a known case:
    Graph g = banana(4);  // e=4; spec must have degree 2: no canonical spec
    // use a 7-edge graph with every face vanishing instead:
    // two triangles sharing a vertex + one extra parallel edge is 1VR; its
    // contractions stay 1VR and deletions leave 2-valent vertices.
    Graph tt = one_vertex_join(cycle_graph(3), 0, cycle_graph(3), 0);
    tt = duplicate_edge(tt, 0);
    REQUIRE(tt.e() == 7);
    IntegrateOptions o{Sampler::kHepp, 1000, 1, 1};
    auto r = stokes_residual(tt, CanonicalFormSpec({1}), o);
    CHECK(r.all_terms_vanish);
    CHECK(r.value == 0);
}
