#include "gcanon/zeta.hpp"

#include <stdexcept>
#include <vector>

namespace gcanon {

Real Real::operator+(const Real& o) const {
    Real r;
    mpfr_add(r.x_, x_, o.x_, MPFR_RNDN);
    return r;
}
Real Real::operator-(const Real& o) const {
    Real r;
    mpfr_sub(r.x_, x_, o.x_, MPFR_RNDN);
    return r;
}
Real Real::operator*(const Real& o) const {
    Real r;
    mpfr_mul(r.x_, x_, o.x_, MPFR_RNDN);
    return r;
}
Real Real::operator/(const Real& o) const {
    Real r;
    mpfr_div(r.x_, x_, o.x_, MPFR_RNDN);
    return r;
}
Real& Real::operator+=(const Real& o) {
    mpfr_add(x_, x_, o.x_, MPFR_RNDN);
    return *this;
}
Real Real::operator-() const {
    Real r;
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
}
Real Real::pow_si(const Real& b, long e) {
    Real r;
    mpfr_pow_si(r.x_, b.x_, e, MPFR_RNDN);
    return r;
}
Real Real::ui_div(unsigned long a, const Real& b) {
    Real r;
    mpfr_ui_div(r.x_, a, b.x_, MPFR_RNDN);
    return r;
}

std::string Real::str(int digits) const {
    char buf[256];
    mpfr_snprintf(buf, sizeof(buf), "%.*Rg", digits, x_);
    return buf;
}

namespace {

// Exact Bernoulli numbers B_0..B_max via the defining recurrence.
const std::vector<Rat>& bernoulli(int maxn) {
    static std::vector<Rat> B;
    if (int(B.size()) > maxn) return B;
    B.assign(maxn + 1, Rat(0));
    B[0] = 1;
    for (int m = 1; m <= maxn; m++) {
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        Rat s(0);
        Rat binom(1);  // C(m+1, 0)
        for (int j = 0; j < m; j++) {
            s += binom * B[j];
            binom = binom * Rat(m + 1 - j) / Rat(j + 1);
        }
        B[m] = -s / binom;  // binom = C(m+1, m)
    }
    return B;
}

// Euler-Maclaurin tail sum_{m >= n} m^{-a} as a list of (coef, power)
// pairs: t_a(n) = sum coef * n^{-power}.
std::vector<std::pair<Rat, int>> tail_series(int a, int K) {
    const auto& B = bernoulli(2 * K + 2);
    std::vector<std::pair<Rat, int>> terms;
    terms.emplace_back(Rat(1, a - 1), a - 1);
    terms.emplace_back(Rat(1, 2), a);
    Rat rising(1);
    Rat fact(1);
    for (int k = 1; k <= K; k++) {
        // rising factorial a(a+1)...(a+2k-2), (2k)! incremental
        if (k == 1) {
            rising = Rat(a);
            fact = Rat(2);
        } else {
            rising *= Rat(a + 2 * k - 3) * Rat(a + 2 * k - 2);
            fact *= Rat(2 * k - 1) * Rat(2 * k);
        }
        Rat coef = B[2 * k] / fact * rising;
        terms.emplace_back(coef, a + 2 * k - 1);
    }
    return terms;
}

Real eval_tail(int a, long n, int K) {
    Real t;
    Real nn{n};
    for (auto& [c, p] : tail_series(a, K)) {
        t += Real(c) * Real::pow_si(nn, -long(p));
    }
    return t;
}

Real zeta_int_impl(int s, long N, int K) {
    if (s < 2) throw std::domain_error("zeta_int: s >= 2 required");
    Real sum;
    for (long n = 1; n < N; n++) sum += Real::pow_si(Real(n), -long(s));
    return sum + eval_tail(s, N, K);
}

}  // namespace

Real zeta_int(int s) { return zeta_int_impl(s, 160, 28); }

Real zeta_double(int a, int b) {
    // sum_{1 <= m < n} m^{-a} n^{-b}
    if (a < 2 || b < 2) throw std::domain_error("zeta_double: arguments >= 2");
    const long N = 160;
    const int K = 28;
    Real za = zeta_int(a);
    Real sum;
    Real partial;  // S_a(n-1)
    for (long n = 2; n <= N; n++) {
        partial += Real::pow_si(Real(n - 1), -long(a));
        sum += partial * Real::pow_si(Real(n), -long(b));
    }
    // Tail over n > N: zeta(a) t_b(N+1) - sum_{n>N} t_a(n) n^{-b}
    Real tb = eval_tail(b, N + 1, K);
    Real tail = za * tb;
    for (auto& [c, p] : tail_series(a, K)) {
        tail = tail - Real(c) * eval_tail(b + p, N + 1, K);
    }
    return sum + tail;
}

Real pi_machin() {
    auto atan_inv = [](long k) {
        // arctan(1/k) = sum_j (-1)^j / ((2j+1) k^{2j+1})
        Real sum;
        Real kk(k);
        Real term = Real::ui_div(1, kk);
        Real k2 = kk * kk;
        long j = 0;
        for (;;) {
            Real contrib = term / Real(2 * j + 1);
            if (j % 2) contrib = -contrib;
            sum += contrib;
            if (mpfr_get_exp(contrib.get()) < -int(Real::kPrec) - 16 &&
                mpfr_zero_p(contrib.get()) == 0)
                break;
            if (mpfr_zero_p(term.get())) break;
            term = term / k2;
            j++;
        }
        return sum;
    };
    return Real(16L) * atan_inv(5) - Real(4L) * atan_inv(239);
}

const ReferenceConstants& ReferenceConstants::get() {
    static ReferenceConstants* rc = [] {
        auto* r = new ReferenceConstants{zeta_int(3),    zeta_int(5), zeta_int(7),
                                         zeta_int(9),    zeta_int(11), zeta_double(3, 5),
                                         Real()};
        Real pi = pi_machin();
        r->pi8 = Real::pow_si(pi, 8);
        // Internal consistency gates, each far beyond 30 digits:
        // two Euler-Maclaurin parameterisations agree,
        Real z3b = zeta_int_impl(3, 320, 36);
        Real d = r->zeta3 - z3b;
        if (!mpfr_zero_p(d.get()) && mpfr_get_exp(d.get()) > -200)
            throw std::logic_error("zeta oracle: parameterisations disagree");
        // zeta(2) = pi^2/6,
        Real z2 = zeta_int(2);
        Real rhs = pi * pi / Real(6L);
        d = z2 - rhs;
        if (!mpfr_zero_p(d.get()) && mpfr_get_exp(d.get()) > -200)
            throw std::logic_error("zeta oracle: zeta(2) != pi^2/6");
        // and the Euler reflection zeta(3)zeta(5) = zeta(3,5)+zeta(5,3)+zeta(8).
        Real lhs = r->zeta3 * r->zeta5;
        Real rr = r->zeta35 + zeta_double(5, 3) + zeta_int(8);
        d = lhs - rr;
        if (!mpfr_zero_p(d.get()) && mpfr_get_exp(d.get()) > -200)
            throw std::logic_error("zeta oracle: MZV reflection fails");
        return r;
    }();
    return *rc;
}

}  // namespace gcanon
