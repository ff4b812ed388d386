#pragma once

#include <mpfr.h>

#include <string>

#include "gcanon/rational.hpp"

namespace gcanon {

// Thin RAII wrapper over mpfr with a fixed working precision, enough for
// the 30+ significant digits the reference constants need.
class Real {
  public:
    static constexpr mpfr_prec_t kPrec = 384;

    Real() { mpfr_init2(x_, kPrec); mpfr_set_zero(x_, 1); }
    explicit Real(double v) { mpfr_init2(x_, kPrec); mpfr_set_d(x_, v, MPFR_RNDN); }
    explicit Real(long v) { mpfr_init2(x_, kPrec); mpfr_set_si(x_, v, MPFR_RNDN); }
    explicit Real(const Rat& q) {
        mpfr_init2(x_, kPrec);
        mpfr_set_q(x_, q.get_mpq_t(), MPFR_RNDN);
    }
    Real(const Real& o) { mpfr_init2(x_, kPrec); mpfr_set(x_, o.x_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(x_, kPrec); mpfr_swap(x_, o.x_); }
    Real& operator=(Real o) {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~Real() { mpfr_clear(x_); }

    mpfr_ptr get() { return x_; }
    mpfr_srcptr get() const { return x_; }

    Real operator+(const Real& o) const;
    Real operator-(const Real& o) const;
    Real operator*(const Real& o) const;
    Real operator/(const Real& o) const;
    Real& operator+=(const Real& o);
    Real operator-() const;

    static Real pow_si(const Real& b, long e);
    static Real ui_div(unsigned long a, const Real& b);

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    std::string str(int digits = 35) const;

  private:
    mpfr_t x_;
};

// zeta(s) for integer s >= 2, via Euler-Maclaurin summation.
Real zeta_int(int s);
// The double zeta value zeta(a,b) = sum_{1 <= m < n} m^{-a} n^{-b}.
Real zeta_double(int a, int b);
// pi via the Machin arctan formula (independent of mpfr_const_pi).
Real pi_machin();

struct ReferenceConstants {
    Real zeta3, zeta5, zeta7, zeta9, zeta11;
    Real zeta35;  // zeta(3,5)
    Real pi8;
    static const ReferenceConstants& get();
};

}  // namespace gcanon
