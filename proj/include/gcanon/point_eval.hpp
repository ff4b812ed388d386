#pragma once

#include <vector>

#include "gcanon/diff_form.hpp"
#include "gcanon/graph.hpp"
#include "gcanon/polymatrix.hpp"

namespace gcanon {

// Exact evaluation of beta^n_X at a point, without expanding the form
// symbolically.  Both engines build nu_j = adj(X) * dX/dx_j at the point
// and take graded-wedge powers; the integer path never divides until the
// very end, which keeps it fast enough for the large certification runs
// (wheels up to W7, K6).
FormValue beta_at_point(const PolyMatrix& X, const std::vector<Int>& point, int n);
FormValue beta_at_point(const PolyMatrix& X, const std::vector<Rat>& point, int n);

// The three graph routes, all expressed in the edge variables dx_e at an
// x-point.  The dual route evaluates L_G at y = 1/x and pulls dy back.
FormValue beta_route_lambda(const Graph& g, const std::vector<Int>& x, int n);
FormValue beta_route_dual(const Graph& g, const std::vector<Int>& x, int n);
FormValue beta_route_graph_matrix(const Graph& g, const std::vector<Int>& x, int n);

// Pointwise wedge of two exact form values.
FormValue wedge_values(const FormValue& a, const FormValue& b);

FormValue add_values(const FormValue& a, const FormValue& b);
FormValue scale_value(const FormValue& a, const Rat& c);
bool value_is_zero(const FormValue& a);

// Pullback of a k-form value along a map phi with dx_i = sum_t J[i][t] du_t:
// (phi^* w)_T = sum_S w_S det(J[S,T]).  src_vars/dst_vars bound the masks.
FormValue pullback_value(const FormValue& w, const std::vector<std::vector<Rat>>& J,
                         int src_vars, int dst_vars, int degree);

// Deterministic pseudo-random integer points with coordinates in
// [1, range]; positive so that graph polynomials cannot vanish.
std::vector<Int> random_point(int nvars, uint64_t seed, long range = 999983);

}  // namespace gcanon
