#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gcanon/multipoly.hpp"
#include "gcanon/polymatrix.hpp"

using namespace gcanon;

static MultiPoly x(int nv, int i) { return MultiPoly::variable(nv, i); }

static uint64_t rng_state = 12345;
static long rnd(long lo, long hi) {
    rng_state = rng_state * 6364136223846793005ull + 1442695040888963407ull;
    return lo + long((rng_state >> 33) % uint64_t(hi - lo + 1));
}

static MultiPoly random_poly(int nv, int nterms, int maxdeg) {
    MultiPoly p(nv);
    for (int t = 0; t < nterms; t++) {
        ExpVec e;
        e.fill(0);
        for (int v = 0; v < nv; v++) e[v] = uint8_t(rnd(0, maxdeg));
        p.add_term(e, Rat(rnd(-9, 9)));
    }
    return p;
}

TEST_CASE("arithmetic basics") {
    int nv = 3;
    MultiPoly a = x(nv, 0) + x(nv, 1);
    MultiPoly b = x(nv, 0) - x(nv, 1);
    CHECK((a * b).str() == "x1^2 - x2^2");
    CHECK((a + b).str() == "2*x1");
    MultiPoly z = a - a;
    CHECK(z.is_zero());
    CHECK(z.str() == "0");
}

TEST_CASE("ring axioms on random inputs") {
    for (int rep = 0; rep < 30; rep++) {
        MultiPoly a = random_poly(4, 5, 3), b = random_poly(4, 5, 3), c = random_poly(4, 5, 3);
        CHECK((a * b) == (b * a));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
    }
}

TEST_CASE("substitution and evaluation") {
    int nv = 2;
    MultiPoly p = x(nv, 0) + x(nv, 1);
    CHECK(p.set_var_zero(0).str() == "x2");
    // series substitution x1 -> x1+x2 in a 2-variable target ring
    std::vector<MultiPoly> assign{x(2, 0) + x(2, 1), x(2, 1)};
    CHECK(p.substitute(assign).str() == "x1 + 2*x2");
    CHECK(p.eval({Rat(2), Rat(3, 2)}) == Rat(7, 2));
}

TEST_CASE("exact division") {
    int nv = 2;
    MultiPoly num = x(nv, 0) * x(nv, 0) - x(nv, 1) * x(nv, 1);
    MultiPoly den = x(nv, 0) - x(nv, 1);
    auto q = MultiPoly::exact_divide(num, den);
    REQUIRE(q.has_value());
    CHECK(q->str() == "x1 + x2");
    CHECK(!MultiPoly::exact_divide(x(nv, 0) + MultiPoly::constant(nv, 1), x(nv, 1)).has_value());
    CHECK_THROWS(MultiPoly::exact_divide(num, MultiPoly(nv)));
}

TEST_CASE("exact_divide(a*b, b) == a randomized") {
    for (int rep = 0; rep < 30; rep++) {
        MultiPoly a = random_poly(3, 4, 3), b = random_poly(3, 4, 3);
        if (b.is_zero()) continue;
        auto q = MultiPoly::exact_divide(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
}

TEST_CASE("derivative") {
    int nv = 2;
    MultiPoly p = x(nv, 0) * x(nv, 0) * x(nv, 1);
    CHECK(p.derivative(0).str() == "2*x1*x2");
    CHECK(p.derivative(1).str() == "x1^2");
}

TEST_CASE("determinants: diagonal and golden") {
    PolyMatrix d(2, 2, 2);
    d.at(0, 0) = x(2, 0);
    d.at(1, 1) = x(2, 1);
    CHECK(d.det().str() == "x1*x2");
}

TEST_CASE("Bareiss equals cofactor on random linear-entry matrices") {
    for (int rep = 0; rep < 12; rep++) {
        int n = 4, nv = 5;
        PolyMatrix m(n, n, nv);
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) {
                MultiPoly p(nv);
                for (int v = 0; v < nv; v++) {
                    long c = rnd(-2, 2);
                    if (c) p += x(nv, v) * Rat(c);
                }
                m.at(i, j) = p;
            }
        CHECK(m.det() == m.det_cofactor());
    }
}

TEST_CASE("det is alternating and multilinear in rows") {
    int n = 4, nv = 4;
    for (int rep = 0; rep < 8; rep++) {
        PolyMatrix m(n, n, nv);
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) m.at(i, j) = random_poly(nv, 2, 1);
        // swap two rows -> sign flip
        PolyMatrix s = m;
        for (int j = 0; j < n; j++) std::swap(s.at(0, j), s.at(2, j));
        CHECK(s.det() == -m.det());
        // scale one row by x1 -> det scales
        PolyMatrix t = m;
        for (int j = 0; j < n; j++) t.at(1, j) = t.at(1, j) * x(nv, 0);
        CHECK(t.det() == m.det() * x(nv, 0));
    }
}

TEST_CASE("adjugate identity M adj(M) = det I") {
    for (int rep = 0; rep < 5; rep++) {
        int n = 3, nv = 3;
        PolyMatrix m(n, n, nv);
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) m.at(i, j) = random_poly(nv, 2, 1);
        MultiPoly d = m.det();
        PolyMatrix prod = m * m.adjugate();
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) {
                if (i == j)
                    CHECK(prod.at(i, j) == d);
                else
                    CHECK(prod.at(i, j).is_zero());
            }
    }
}
