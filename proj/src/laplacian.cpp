#include "gcanon/laplacian.hpp"

#include <stdexcept>

namespace gcanon {

LaplacianBundle laplacian_with_basis(const Graph& g, const std::vector<std::vector<int>>& H) {
    if (!g.is_connected()) throw std::domain_error("laplacian: disconnected graph");
    int m = g.e();
    int h = g.loops();
    if (h < 1) throw std::domain_error("laplacian: tree has no cycle space");
    LaplacianBundle b;
    b.graph = g;
    b.H = H;
    // Lambda = H^T diag(x) H.
    PolyMatrix lam(h, h, m);
    for (int c1 = 0; c1 < h; c1++)
        for (int c2 = 0; c2 < h; c2++) {
            MultiPoly s(m);
            for (int e = 0; e < m; e++) {
                int prod = H[e][c1] * H[e][c2];
                if (prod) s += MultiPoly::variable(m, e) * Rat(prod);
            }
            lam.at(c1, c2) = s;
        }
    b.Lambda = lam;
    b.psi = lam.det();

    auto inc = incidence_matrix(g);
    b.eps.assign(g.v - 1, std::vector<int>(m, 0));
    for (int v = 0; v < g.v - 1; v++) b.eps[v] = inc[v];
    return b;
}

LaplacianBundle laplacian(const Graph& g) { return laplacian_with_basis(g, cycle_basis(g)); }

MultiPoly graph_polynomial(const Graph& g) {
    if (!g.is_connected()) throw std::domain_error("graph_polynomial: disconnected graph");
    int m = g.e();
    MultiPoly psi(m);
    std::vector<Term> ts;
    for (const auto& tree : spanning_trees(g)) {
        std::vector<bool> in(m, false);
        for (int e : tree) in[e] = true;
        Term t;
        t.e.fill(0);
        t.c = 1;
        for (int e = 0; e < m; e++)
            if (!in[e]) t.e[e] = 1;
        ts.push_back(t);
    }
    return MultiPoly::from_terms(m, std::move(ts));
}

PolyMatrix dual_laplacian(const Graph& g) {
    if (!g.is_connected()) throw std::domain_error("dual_laplacian: disconnected graph");
    int m = g.e(), n = g.v - 1;
    auto inc = incidence_matrix(g);
    PolyMatrix L(n, n, m);
    for (int u = 0; u < n; u++)
        for (int w = 0; w < n; w++) {
            MultiPoly s(m);
            for (int e = 0; e < m; e++) {
                int prod = inc[u][e] * inc[w][e];
                if (prod) s += MultiPoly::variable(m, e) * Rat(prod);
            }
            L.at(u, w) = s;
        }
    return L;
}

PolyMatrix graph_matrix(const Graph& g) {
    if (!g.is_connected()) throw std::domain_error("graph_matrix: disconnected graph");
    int m = g.e(), n = g.v - 1, N = m + n;
    auto inc = incidence_matrix(g);
    PolyMatrix M(N, N, m);
    for (int e = 0; e < m; e++) M.at(e, e) = MultiPoly::variable(m, e);
    for (int v = 0; v < n; v++)
        for (int e = 0; e < m; e++) {
            if (!inc[v][e]) continue;
            M.at(m + v, e) = MultiPoly::constant(m, Rat(inc[v][e]));
            M.at(e, m + v) = MultiPoly::constant(m, Rat(-inc[v][e]));
        }
    return M;
}

MultiPoly dodgson(const Graph& g, const std::vector<int>& I, const std::vector<int>& J) {
    if (I.size() != J.size()) throw std::domain_error("dodgson: |I| != |J|");
    PolyMatrix M = graph_matrix(g);
    for (int i : I)
        if (i < 0 || i >= g.e()) throw std::out_of_range("dodgson: edge index");
    for (int j : J)
        if (j < 0 || j >= g.e()) throw std::out_of_range("dodgson: edge index");
    return M.minor_matrix(I, J).det();
}

}  // namespace gcanon
