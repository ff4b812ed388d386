#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gcanon/canform.hpp"
#include "gcanon/laplacian.hpp"
#include "gcanon/point_eval.hpp"

using namespace gcanon;

TEST_CASE("point engine matches the symbolic forms") {
    Graph w3 = wheel(3);
    DiffForm w5 = canonical_form(w3, CanonicalFormSpec({1}));
    for (uint64_t s = 1; s <= 5; s++) {
        auto pt = random_point(6, s, 500);
        std::vector<Rat> rp;
        for (auto& c : pt) rp.push_back(Rat(c));
        FormValue sym = w5.eval_at_point(rp);
        FormValue num = beta_route_lambda(w3, pt, 5);
        CHECK(sym == num);
    }
}

TEST_CASE("route equivalence: Lambda, dual, graph matrix") {
    // (graph, power, expect non-zero); the lemma covers beta^{4k+1}, k >= 1
    std::vector<std::tuple<Graph, int, bool>> pool = {
        {wheel(3), 5, true},        {fixture("Z5"), 9, true}, {fixture("T5"), 9, true},
        {wheel(5), 9, true},        {wheel(5), 5, true},      {banana(6), 5, false},
        {complete_graph(4), 5, true}};
    for (auto& [g, n, nonzero] : pool) {
        auto pt = random_point(g.e(), 11 + g.e() + n, 400);
        FormValue a = beta_route_lambda(g, pt, n);
        FormValue b = beta_route_dual(g, pt, n);
        FormValue c = beta_route_graph_matrix(g, pt, n);
        CHECK(a == b);
        CHECK(a == c);
        CHECK(a.empty() != nonzero);
    }
}

TEST_CASE("rational-point engine agrees with the integer one") {
    Graph g = wheel(3);
    auto pt = random_point(6, 3, 200);
    std::vector<Rat> rp;
    for (auto& c : pt) rp.push_back(Rat(c));
    FormValue a = beta_at_point(laplacian(g).Lambda, pt, 5);
    FormValue b = beta_at_point(laplacian(g).Lambda, rp, 5);
    CHECK(a == b);
}

TEST_CASE("dlog psi via the n = 1 path") {
    Graph g = banana(3);
    MultiPoly psi = graph_polynomial(g);
    auto pt = random_point(3, 9, 100);
    std::vector<Rat> rp;
    for (auto& c : pt) rp.push_back(Rat(c));
    FormValue v = beta_route_graph_matrix(g, pt, 1);
    Rat pv = psi.eval(rp);
    for (int j = 0; j < 3; j++) {
        auto it = v.find(1u << j);
        REQUIRE(it != v.end());
        CHECK(it->second == psi.derivative(j).eval(rp) / pv);
    }
}

TEST_CASE("pullback machinery: relabelling a form permutes components") {
    Graph g = wheel(3);
    auto pt = random_point(6, 21, 300);
    FormValue v = beta_route_lambda(g, pt, 5);
    // identity jacobian pullback is the identity
    std::vector<std::vector<Rat>> J(6, std::vector<Rat>(6, Rat(0)));
    for (int i = 0; i < 6; i++) J[i][i] = 1;
    CHECK(pullback_value(v, J, 6, 6, 5) == v);
    // scaling dx -> 2 dx multiplies a 5-form by 32
    for (int i = 0; i < 6; i++) J[i][i] = 2;
    FormValue w = pullback_value(v, J, 6, 6, 5);
    CHECK(w == scale_value(v, Rat(32)));
}

TEST_CASE("wedge of values is graded antisymmetric") {
    FormValue a{{0b0011u, Rat(2)}};   // dx1^dx2
    FormValue b{{0b0100u, Rat(3)}};   // dx3
    FormValue ab = wedge_values(a, b);
    FormValue ba = wedge_values(b, a);
    CHECK(ab == ba);  // deg 2 * deg 1: sign (+1)^{2*1}
    FormValue c{{0b1000u, Rat(5)}};
    CHECK(wedge_values(b, c).at(0b1100u) == 15);
    CHECK(wedge_values(c, b).at(0b1100u) == -15);
}
