#pragma once

#include "gcanon/zeta.hpp"

namespace gcanon {

// The odd-wheel moment integrals
//   I^(k)_n = int_{sigma_{W_{2n+1}}} (prod_spokes x / Psi)^k Omega / Psi^2
//           = 2/(2k+2)! * C(4n, 2n) * sum_m prod_{l=1..k}(m^2 - l^2) / m^{4n-1},
// evaluated exactly as an integer combination of odd zeta values.
// Requires 4n - 2k - 1 >= 3.
Real wheel_moment(int n, int k);

}  // namespace gcanon
