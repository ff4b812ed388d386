#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gcanon/wheel_moments.hpp"
#include "gcanon/zeta.hpp"

using namespace gcanon;

static double rel_err(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

TEST_CASE("reference constants exist and satisfy the internal gates") {
    const auto& rc = ReferenceConstants::get();  // throws if any gate fails
    CHECK(rel_err(rc.zeta3.to_double(), 1.2020569031595942854) < 1e-15);
    CHECK(rel_err(rc.zeta5.to_double(), 1.0369277551433699263) < 1e-15);
    CHECK(rel_err(rc.zeta7.to_double(), 1.0083492773819228268) < 1e-15);
    CHECK(rel_err(rc.pi8.to_double(), std::pow(M_PI, 8)) < 1e-12);
}

TEST_CASE("zeta(2k) against even closed forms") {
    Real pi = pi_machin();
    Real z4 = zeta_int(4);
    Real rhs = Real::pow_si(pi, 4) / Real(90L);
    CHECK(std::fabs((z4 - rhs).to_double()) < 1e-80);
    Real z8 = zeta_int(8);
    Real rhs8 = Real::pow_si(pi, 8) / Real(9450L);
    CHECK(std::fabs((z8 - rhs8).to_double()) < 1e-80);
}

TEST_CASE("zeta(3,5) via the paper's K6 constant") {
    const auto& rc = ReferenceConstants::get();
    // (9!/16) (360 zeta(3,5) + 690 zeta(3) zeta(5) - 29 pi^8/315) = 1708.1901..
    Real v = Real(Rat(362880, 16)) *
             (Real(360L) * rc.zeta35 + Real(690L) * rc.zeta3 * rc.zeta5 -
              Real(Rat(29, 315)) * rc.pi8);
    CHECK(v.to_double() == doctest::Approx(1708.1901).epsilon(1e-6));
}

TEST_CASE("wheel moments: closed evaluations") {
    const auto& rc = ReferenceConstants::get();
    // I^(0)_1 = 6 zeta(3)
    Real i01 = wheel_moment(1, 0);
    CHECK(std::fabs((i01 - Real(6L) * rc.zeta3).to_double()) < 1e-60);
    // I^(0)_2 = 70 zeta(7)
    Real i02 = wheel_moment(2, 0);
    CHECK(std::fabs((i02 - Real(70L) * rc.zeta7).to_double()) < 1e-60);
    CHECK_THROWS(wheel_moment(1, 1));  // 4n-2k-1 = 1: divergent
}

TEST_CASE("series oracle consistency: the wheel closed forms") {
    const auto& rc = ReferenceConstants::get();
    // 18 (I^(0)_2 + 12 I^(1)_2) = 1260 zeta(5)
    Real lhs = Real(18L) * (wheel_moment(2, 0) + Real(12L) * wheel_moment(2, 1));
    Real rhs = Real(1260L) * rc.zeta5;
    CHECK(rel_err(lhs.to_double(), rhs.to_double()) < 1e-13);
    // 26 (I^(0)_3 + 60 I^(1)_3 + 360 I^(2)_3) = 24024 zeta(7)
    Real lhs2 = Real(26L) * (wheel_moment(3, 0) + Real(60L) * wheel_moment(3, 1) +
                             Real(360L) * wheel_moment(3, 2));
    Real rhs2 = Real(24024L) * rc.zeta7;
    CHECK(rel_err(lhs2.to_double(), rhs2.to_double()) < 1e-13);
}
