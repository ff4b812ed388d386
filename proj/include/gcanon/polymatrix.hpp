#pragma once

#include <vector>

#include "gcanon/multipoly.hpp"

namespace gcanon {

// Dense matrix of polynomials; the workhorse for Laplacians and graph
// matrices at desk scale (dimensions stay well below 25).
class PolyMatrix {
  public:
    PolyMatrix() : r_(0), c_(0), nv_(0) {}
    PolyMatrix(int rows, int cols, int nvars)
        : r_(rows), c_(cols), nv_(nvars), a_(size_t(rows) * cols, MultiPoly(nvars)) {}

    int rows() const { return r_; }
    int cols() const { return c_; }
    int nvars() const { return nv_; }

    MultiPoly& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const MultiPoly& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    PolyMatrix transpose() const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    bool operator==(const PolyMatrix& o) const;

    // Remove the given row and column (zero-based).
    PolyMatrix minor_matrix(int row, int col) const;
    // Remove sorted row and column index sets.
    PolyMatrix minor_matrix(const std::vector<int>& rows_out,
                            const std::vector<int>& cols_out) const;

    // Exact determinant: cofactor expansion below size 4, fraction-free
    // Bareiss elimination with exact division otherwise.
    MultiPoly det() const;
    MultiPoly det_cofactor() const;  // exposed as an independent oracle

    // adj(M)[i][j] = (-1)^{i+j} det(minor(j, i)), so that M * adj = det * I.
    PolyMatrix adjugate() const;

    PolyMatrix derivative(int var) const;

    std::vector<std::vector<Rat>> eval(const std::vector<Rat>& point) const;

    std::string str() const;

  private:
    int r_, c_, nv_;
    std::vector<MultiPoly> a_;
};

// Exact rational determinant of a numeric matrix (fraction-free not needed).
Rat det_rat(std::vector<std::vector<Rat>> m);

// Exact integer determinant via Bareiss.
Int det_int(std::vector<std::vector<Int>> m);

}  // namespace gcanon
