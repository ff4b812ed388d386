#include "gcanon/wheel_moments.hpp"

#include <stdexcept>
#include <vector>

namespace gcanon {

Real wheel_moment(int n, int k) {
    if (n < 1 || k < 0) throw std::domain_error("wheel_moment: n >= 1, k >= 0");
    if (4 * n - 2 * k - 1 < 3) throw std::domain_error("wheel_moment: series diverges");

    // prod_{l=1}^{k} (m^2 - l^2) = sum_j c_j m^{2j} with
    // c_j = (-1)^{k-j} e_{k-j}(1^2, ..., k^2).
    std::vector<Int> c(k + 1, 0);
    c[0] = 1;  // polynomial "1" in m^2 before multiplying factors
    int deg = 0;
    for (int l = 1; l <= k; l++) {
        std::vector<Int> nc(k + 1, 0);
        long l2 = long(l) * l;
        for (int j = 0; j <= deg; j++) {
            nc[j + 1] += c[j];
            nc[j] -= c[j] * l2;
        }
        deg++;
        c = nc;
    }

    Real sum;
    for (int j = 0; j <= k; j++) {
        if (c[j] == 0) continue;
        int arg = 4 * n - 1 - 2 * j;
        sum += Real(Rat(c[j])) * zeta_int(arg);
    }
    // 2/(2k+2)! * C(4n, 2n)
    Rat pref(2);
    for (long i = 2; i <= 2 * k + 2; i++) pref /= i;
    Rat binom(1);
    for (long i = 1; i <= 2 * n; i++) binom = binom * Rat(2 * n + i) / Rat(i);
    return Real(pref * binom) * sum;
}

}  // namespace gcanon
