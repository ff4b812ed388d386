#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcanon/rational.hpp"

namespace gcanon {

// Hard cap on the number of variables of any one polynomial ring instance.
// The largest rings in use are K_6 (15 edge variables) and the generic 4x4
// matrix (16 entries, +1 for a projective scalar).
constexpr int kMaxVars = 24;

using ExpVec = std::array<uint8_t, kMaxVars>;

// Graded lexicographic: higher total degree first, ties broken by
// lexicographically larger exponent vector first.
int exp_cmp(const ExpVec& a, const ExpVec& b, int nv);
int exp_deg(const ExpVec& a, int nv);

struct Term {
    ExpVec e;
    Rat c;
};

// Sparse multivariate polynomial over exact rationals.  Terms are kept
// sorted in descending graded-lex order with no zero coefficients.
class MultiPoly {
  public:
    MultiPoly() : nv_(0) {}
    explicit MultiPoly(int nvars) : nv_(nvars) {}

    static MultiPoly constant(int nvars, const Rat& c);
    static MultiPoly variable(int nvars, int var, int pow = 1);
    static MultiPoly monomial(int nvars, const ExpVec& e, const Rat& c);

    int nvars() const { return nv_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    int total_degree() const;       // -1 for the zero polynomial
    int degree_in(int var) const;   // -1 for the zero polynomial
    bool is_constant() const;
    Rat constant_value() const;     // 0 if zero, else requires is_constant()

    void add_term(const ExpVec& e, const Rat& c);  // merge one term in place

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& c) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly derivative(int var) const;

    // Substitute x_var = 0.
    MultiPoly set_var_zero(int var) const;

    // Full composition: assignment[v] replaces x_v (must cover all vars
    // appearing; all images over the same target ring).
    MultiPoly substitute(const std::vector<MultiPoly>& assignment) const;

    Rat eval(const std::vector<Rat>& point) const;
    double eval_double(const std::vector<double>& point) const;

    // Exact quotient, or nullopt when den does not divide exactly.
    static std::optional<MultiPoly> exact_divide(const MultiPoly& num, const MultiPoly& den);

    // Canonical text, terms in descending graded-lex order, e.g.
    // "x1^2*x2 - 3/2*x3 + 1".
    std::string str() const;

    // Rebuild invariants from an unsorted/duplicated term list.
    static MultiPoly from_terms(int nvars, std::vector<Term>&& ts);

  private:
    int nv_;
    std::vector<Term> terms_;
    void normalize();
};

MultiPoly operator*(const Rat& c, const MultiPoly& p);

}  // namespace gcanon
