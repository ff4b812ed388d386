#pragma once

#include <vector>

#include "gcanon/graph.hpp"
#include "gcanon/polymatrix.hpp"

namespace gcanon {

// The three matrix avatars of a connected graph.  The deleted vertex for
// the reduced incidence matrix is always the highest-index one, which pins
// the Dodgson sign convention.
struct LaplacianBundle {
    Graph graph;
    std::vector<std::vector<int>> H;    // e x h cycle basis
    PolyMatrix Lambda;                  // h x h, entries linear in x_e
    std::vector<std::vector<int>> eps;  // (v-1) x e reduced incidence
    MultiPoly psi;                      // det(Lambda), cross-checked against matrix-tree
};

LaplacianBundle laplacian(const Graph& g);
LaplacianBundle laplacian_with_basis(const Graph& g, const std::vector<std::vector<int>>& H);

// Matrix-tree polynomial, computed from the spanning tree sum.
MultiPoly graph_polynomial(const Graph& g);

// (v-1) x (v-1) dual Laplacian over fresh variables y_e := 1/x_e (variable
// slot e holds y_e).
PolyMatrix dual_laplacian(const Graph& g);

// (e+v-1) x (e+v-1) block matrix [[diag(x), -eps^T], [eps, 0]].
PolyMatrix graph_matrix(const Graph& g);

// det of graph_matrix with edge rows I and edge columns J removed
// (ascending index order, deleted vertex = highest).  Sign is convention
// dependent; Psi^{ii} = dPsi/dx_i holds with this convention.
MultiPoly dodgson(const Graph& g, const std::vector<int>& I, const std::vector<int>& J);

}  // namespace gcanon
