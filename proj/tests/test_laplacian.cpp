#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gcanon/graph.hpp"
#include "gcanon/laplacian.hpp"
#include "gcanon/canonical.hpp"

using namespace gcanon;

static uint64_t rng_state = 77;
static long rnd(long lo, long hi) {
    rng_state = rng_state * 6364136223846793005ull + 1442695040888963407ull;
    return lo + long((rng_state >> 33) % uint64_t(hi - lo + 1));
}

static Graph random_connected_graph(int maxv, int maxe, bool allow_tadpole = true) {
    for (;;) {
        int v = int(rnd(2, maxv));
        int e = int(rnd(v, maxe));
        Graph g;
        g.v = v;
        for (int i = 0; i < e; i++) {
            int a = int(rnd(0, v - 1)), b = int(rnd(0, v - 1));
            if (!allow_tadpole && a == b) b = (b + 1) % v;
            g.edges.emplace_back(a, b);
        }
        if (g.is_connected() && g.loops() >= 1) return g;
    }
}

// The worked 3-spoke wheel example: cycles {1,5,6}, {2,4,6}, {3,5,4} with
// the displayed signs.
static std::vector<std::vector<int>> w3_paper_basis() {
    // rows H^T: (1,0,0,0,1,-1), (0,1,0,-1,0,1), (0,0,1,1,-1,0); H is e x h.
    std::vector<std::vector<int>> H(6, std::vector<int>(3, 0));
    int HT[3][6] = {{1, 0, 0, 0, 1, -1}, {0, 1, 0, -1, 0, 1}, {0, 0, 1, 1, -1, 0}};
    for (int c = 0; c < 3; c++)
        for (int e = 0; e < 6; e++) H[e][c] = HT[c][e];
    return H;
}

static const char* kPsiW3 =
    "x1*x2*x3 + x1*x2*x4 + x1*x2*x5 + x1*x3*x4 + x1*x3*x6 + x1*x4*x5 + x1*x4*x6 + x1*x5*x6 + "
    "x2*x3*x5 + x2*x3*x6 + x2*x4*x5 + x2*x4*x6 + x2*x5*x6 + x3*x4*x5 + x3*x4*x6 + x3*x5*x6";

TEST_CASE("W3 with the paper basis reproduces the displayed Laplacian") {
    Graph w3 = wheel(3);
    auto b = laplacian_with_basis(w3, w3_paper_basis());
    int nv = 6;
    auto X = [&](int i) { return MultiPoly::variable(nv, i); };
    PolyMatrix expect(3, 3, nv);
    expect.at(0, 0) = X(0) + X(4) + X(5);
    expect.at(0, 1) = -X(5);
    expect.at(0, 2) = -X(4);
    expect.at(1, 0) = -X(5);
    expect.at(1, 1) = X(1) + X(3) + X(5);
    expect.at(1, 2) = -X(3);
    expect.at(2, 0) = -X(4);
    expect.at(2, 1) = -X(3);
    expect.at(2, 2) = X(2) + X(3) + X(4);
    CHECK(b.Lambda == expect);
    CHECK(b.psi.str() == kPsiW3);
}

TEST_CASE("default basis: symmetric Lambda, same psi") {
    Graph w3 = wheel(3);
    auto b = laplacian(w3);
    CHECK(b.Lambda == b.Lambda.transpose());
    CHECK(b.psi.str() == kPsiW3);
    CHECK(b.psi == graph_polynomial(w3));
    CHECK_THROWS(laplacian(Graph(3, {{0, 1}, {1, 2}})));  // tree
    CHECK_THROWS(laplacian(Graph(4, {{0, 1}, {2, 3}})));  // disconnected
}

TEST_CASE("banana(2) gives the 1x1 matrix (x1+x2)") {
    auto b = laplacian(banana(2));
    CHECK(b.Lambda.rows() == 1);
    CHECK(b.Lambda.at(0, 0).str() == "x1 + x2");
}

TEST_CASE("matrix tree equals det(Lambda) on random graphs; Lambda symmetric") {
    for (int rep = 0; rep < 50; rep++) {
        Graph g = random_connected_graph(6, 10);
        auto b = laplacian(g);
        CHECK(b.Lambda == b.Lambda.transpose());
        CHECK(b.psi == graph_polynomial(g));
    }
}

TEST_CASE("psi at all-ones counts spanning trees") {
    Graph z5 = fixture("Z5");
    MultiPoly psi = graph_polynomial(z5);
    std::vector<Rat> ones(z5.e(), Rat(1));
    CHECK(psi.eval(ones) == Rat(long(spanning_trees(z5).size())));
}

TEST_CASE("basis independence: P^T Lambda P with det P = +-1, psi fixed") {
    Graph g = wheel(4);
    auto b1 = laplacian(g);
    // an alternative basis: add column 0 to column 1
    auto H2 = b1.H;
    for (size_t e = 0; e < H2.size(); e++) H2[e][1] += H2[e][0];
    auto b2 = laplacian_with_basis(g, H2);
    CHECK(b2.psi == b1.psi);
}

TEST_CASE("dual Laplacian: K3 display and det identity") {
    Graph k3 = complete_graph(3);
    PolyMatrix L = dual_laplacian(k3);
    // edges of K3: 1=(0,1), 2=(0,2), 3=(1,2); deleted vertex = 2 (highest)
    int nv = 3;
    auto Y = [&](int i) { return MultiPoly::variable(nv, i); };
    CHECK(L.at(0, 0) == Y(0) + Y(1));
    CHECK(L.at(0, 1) == -Y(0));
    CHECK(L.at(1, 0) == -Y(0));
    CHECK(L.at(1, 1) == Y(0) + Y(2));

    // single edge: L = (y1), det * x1 = 1 = psi
    Graph be(2, {{0, 1}});
    PolyMatrix L1 = dual_laplacian(be);
    CHECK(L1.at(0, 0).str() == "x1");  // y_1 lives in slot 1

    // det(L)(1/x) * prod x = psi on random graphs
    for (int rep = 0; rep < 25; rep++) {
        Graph g = random_connected_graph(5, 8, false);
        MultiPoly detL = dual_laplacian(g).det();
        MultiPoly psi = graph_polynomial(g);
        std::vector<Rat> pt(g.e());
        for (int e = 0; e < g.e(); e++) pt[e] = rat(rnd(1, 40), rnd(1, 7));
        std::vector<Rat> inv(g.e());
        Rat prod(1);
        for (int e = 0; e < g.e(); e++) {
            inv[e] = 1 / pt[e];
            prod *= pt[e];
        }
        CHECK(detL.eval(inv) * prod == psi.eval(pt));
    }
}

TEST_CASE("graph matrix: det equals psi") {
    CHECK(graph_matrix(wheel(3)).det().str() == kPsiW3);
    CHECK(graph_matrix(banana(2)).det().str() == "x1 + x2");
    for (int rep = 0; rep < 15; rep++) {
        Graph g = random_connected_graph(5, 8, false);
        CHECK(graph_matrix(g).det() == graph_polynomial(g));
    }
}

TEST_CASE("graph matrix LBU factorisation at random rational points") {
    Graph g = wheel(3);
    int m = g.e(), n = g.v - 1;
    PolyMatrix M = graph_matrix(g);
    auto inc = incidence_matrix(g);
    for (int rep = 0; rep < 20; rep++) {
        std::vector<Rat> pt(m);
        for (int e = 0; e < m; e++) pt[e] = rat(rnd(1, 30), rnd(1, 5));
        // L = [[I,0],[eps D^-1, I]], B = diag(D, L_G), U = [[I, -D^-1 eps^T],[0, I]]
        int N = m + n;
        std::vector<std::vector<Rat>> L(N, std::vector<Rat>(N, Rat(0))),
            B(N, std::vector<Rat>(N, Rat(0))), U(N, std::vector<Rat>(N, Rat(0))),
            Mv(N, std::vector<Rat>(N, Rat(0)));
        for (int i = 0; i < N; i++) L[i][i] = U[i][i] = Rat(1);
        for (int e = 0; e < m; e++) B[e][e] = pt[e];
        for (int u = 0; u < n; u++)
            for (int w = 0; w < n; w++) {
                Rat s(0);
                for (int e = 0; e < m; e++) s += Rat(inc[u][e] * inc[w][e]) / pt[e];
                B[m + u][m + w] = s;
            }
        for (int u = 0; u < n; u++)
            for (int e = 0; e < m; e++) {
                L[m + u][e] = Rat(inc[u][e]) / pt[e];
                U[e][m + u] = Rat(-inc[u][e]) / pt[e];
            }
        auto Mp = M.eval(pt);
        auto mul = [&](const std::vector<std::vector<Rat>>& A,
                       const std::vector<std::vector<Rat>>& Bm) {
            std::vector<std::vector<Rat>> C(N, std::vector<Rat>(N, Rat(0)));
            for (int i = 0; i < N; i++)
                for (int k = 0; k < N; k++) {
                    if (A[i][k] == 0) continue;
                    for (int j = 0; j < N; j++) C[i][j] += A[i][k] * Bm[k][j];
                }
            return C;
        };
        auto LBU = mul(mul(L, B), U);
        for (int i = 0; i < N; i++)
            for (int j = 0; j < N; j++) CHECK(LBU[i][j] == Mp[i][j]);
    }
}

TEST_CASE("dodgson polynomials") {
    for (int rep = 0; rep < 20; rep++) {
        Graph g = random_connected_graph(5, 7, false);
        MultiPoly psi = graph_polynomial(g);
        int i = int(rnd(0, g.e() - 1));
        CHECK(dodgson(g, {i}, {i}) == psi.derivative(i));
        int j = int(rnd(0, g.e() - 1));
        CHECK(dodgson(g, {i}, {j}) == dodgson(g, {j}, {i}));
    }
    Graph w3 = wheel(3);
    CHECK(dodgson(w3, {}, {}) == graph_polynomial(w3));
    CHECK_THROWS(dodgson(w3, {0}, {}));
}

TEST_CASE("contraction deletion: psi_{G/e} = psi|x_e=0, psi_{G\\e} = dpsi/dx_e") {
    for (int rep = 0; rep < 25; rep++) {
        Graph g = random_connected_graph(6, 9, false);
        int e = int(rnd(0, g.e() - 1));
        MultiPoly psi = graph_polynomial(g);
        // Contraction: variables of G/e are the remaining edges in order;
        // rebuild psi_{G/e} in the big ring by inserting a gap at e.
        if (!is_bridge(g, e) || true) {
            Graph gc = contract(g, e);
            if (gc.loops() >= 1 && gc.is_connected()) {
                MultiPoly sub = graph_polynomial(gc);
                // embed: variable k of gc -> variable (k < e ? k : k+1) of g
                std::vector<MultiPoly> assign;
                for (int k = 0; k < gc.e(); k++)
                    assign.push_back(MultiPoly::variable(g.e(), k < e ? k : k + 1));
                CHECK(sub.substitute(assign) == psi.set_var_zero(e));
            }
        }
        Graph gd = delete_edge(g, e);
        if (gd.is_connected()) {
            MultiPoly sub = graph_polynomial(gd);
            std::vector<MultiPoly> assign;
            for (int k = 0; k < gd.e(); k++)
                assign.push_back(MultiPoly::variable(g.e(), k < e ? k : k + 1));
            CHECK(sub.substitute(assign) == psi.derivative(e));
        }
    }
}

TEST_CASE("planar duality of psi: wheels and banana/cycle pairs") {
    auto dual_check = [&](const Graph& g, const Graph& gd) {
        MultiPoly a = graph_polynomial(g);
        MultiPoly b = graph_polynomial(gd);
        for (int rep = 0; rep < 10; rep++) {
            std::vector<Rat> pt(g.e()), inv(g.e());
            Rat prod(1);
            for (int e = 0; e < g.e(); e++) {
                pt[e] = rat(rnd(1, 50), rnd(1, 6));
                inv[e] = 1 / pt[e];
                prod *= pt[e];
            }
            CHECK(b.eval(pt) == a.eval(inv) * prod);
        }
    };
    dual_check(banana(4), cycle_graph(4));
    dual_check(cycle_graph(5), banana(5));
    dual_check(wheel(3), wheel_dual(3));
    dual_check(wheel(5), wheel_dual(5));
    // sanity: the dual wheel really is a wheel
    CHECK(canonical_certificate(wheel_dual(4)).canonical_key ==
          canonical_certificate(wheel(4)).canonical_key);
}
