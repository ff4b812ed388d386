#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gcanon/multipoly.hpp"
#include "gcanon/polymatrix.hpp"

namespace gcanon {

// Parity of moving every dx in mask b past the dx's of the disjoint mask a
// when concatenating a^b into ascending order.
int wedge_sign(uint32_t a, uint32_t b);

// Exact values of a form's components at a rational point.
using FormValue = std::map<uint32_t, Rat>;

// Element of the exterior algebra on dx_1..dx_nv whose coefficients are
// num / den_base^den_pow.  Only ascending index subsets (bitmasks) are
// stored; all components share the denominator.
class DiffForm {
  public:
    DiffForm() : nv_(0), deg_(0), den_pow_(0) {}
    DiffForm(int nvars, int degree, MultiPoly den_base, int den_pow = 0)
        : nv_(nvars), deg_(degree), den_(std::move(den_base)), den_pow_(den_pow) {}

    static DiffForm zero(int nvars, int degree);
    static DiffForm unit(int nvars);  // the constant 0-form 1

    int nvars() const { return nv_; }
    int degree() const { return deg_; }
    int den_pow() const { return den_pow_; }
    const MultiPoly& den_base() const { return den_; }
    const std::map<uint32_t, MultiPoly>& comps() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    void set_comp(uint32_t mask, MultiPoly num);
    void add_comp(uint32_t mask, const MultiPoly& num);

    DiffForm operator+(const DiffForm& o) const;
    DiffForm operator-(const DiffForm& o) const;
    DiffForm operator-() const;
    DiffForm operator*(const Rat& c) const;
    DiffForm scale_poly(const MultiPoly& p) const;
    DiffForm wedge(const DiffForm& o) const;

    // Divide out the largest possible power of den_base from all numerators.
    void reduce();

    DiffForm exterior_derivative() const;
    // Contraction with the Euler field sum x_e d/dx_e; zero iff projective.
    DiffForm euler_contraction() const;
    // x_e -> 0, dx_e -> 0.  Throws if the denominator vanishes on the face.
    DiffForm restrict_edge_zero(int var) const;

    FormValue eval_at_point(const std::vector<Rat>& point) const;

    std::string str() const;  // canonical serialization

    // Equality as rational-coefficient forms (handles different den_pow).
    static bool equal(const DiffForm& a, const DiffForm& b);

  private:
    int nv_, deg_;
    MultiPoly den_;
    int den_pow_;
    std::map<uint32_t, MultiPoly> comps_;
};

// Sum_i (-1)^i x_i dx_1 ^ .. ^ \hat{dx_i} ^ .. ^ dx_m (1-based sign).
DiffForm projective_volume_form(int nvars);

// Square matrix over the exterior algebra with a shared denominator power;
// represents den^pow * (matrix of forms).  Used for powers of X^{-1}dX.
struct FormMatrix {
    int n = 0;
    int nv = 0;
    int deg = 0;
    int den_pow = 0;
    MultiPoly den;
    std::vector<std::map<uint32_t, MultiPoly>> entry;  // n*n maps

    std::map<uint32_t, MultiPoly>& at(int i, int j) { return entry[size_t(i) * n + j]; }
    const std::map<uint32_t, MultiPoly>& at(int i, int j) const { return entry[size_t(i) * n + j]; }

    static FormMatrix mul(const FormMatrix& a, const FormMatrix& b);
    static DiffForm trace_product(const FormMatrix& a, const FormMatrix& b);
    DiffForm trace() const;
    // Entry-wise division by den while every entry stays polynomial.
    void try_reduce();
};

// tr((X^{-1} dX)^n) as an exact form with denominator det(X)^k, reduced to
// the minimal power.  Throws if det(X) = 0.
DiffForm maurer_cartan_trace(const PolyMatrix& X, int n);

}  // namespace gcanon
