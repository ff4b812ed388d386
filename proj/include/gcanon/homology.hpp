#pragma once

#include <map>
#include <string>
#include <vector>

#include "gcanon/rational.hpp"
#include "gcanon/strata.hpp"

namespace gcanon {

// Boundary matrix of the contraction differential d from the (h, e) stratum
// to (h, e-1): entry[t][s] = coefficient of target basis element t in
// d(source basis element s).  Entries are exact integers.
std::vector<std::vector<Int>> boundary_matrix_d(const StratumBasis& src, const StratumBasis& dst);
// Same for the deletion differential delta: (h, e) -> (h-1, e-1).
std::vector<std::vector<Int>> boundary_matrix_delta(const StratumBasis& src,
                                                    const StratumBasis& dst);

// Rank over F_p (p = 2^61 - 1 by default), a second prime for
// cross-checking, and exact rational rank for matrices up to the stated
// budget.
long rank_mod_p(const std::vector<std::vector<Int>>& m, uint64_t p);
long rank_exact(const std::vector<std::vector<Int>>& m);

constexpr uint64_t kPrime61 = 2305843009213693951ull;  // 2^61 - 1
constexpr uint64_t kPrime31 = 2147483647ull;           // 2^31 - 1

struct HomologyReport {
    int hmax = 0;
    // dims[h][e] = stratum dimension; ranks[h][e] = rank of d: e -> e-1.
    std::map<int, std::map<int, long>> stratum_dim;
    std::map<int, std::map<int, long>> rank_d;
    // homology[h][n] with n = e - 2h (only entries with a stratum present).
    std::map<int, std::map<int, long>> homology;

    std::string table_text() const;  // loop-order columns, H_n rows
    std::string to_json() const;
};

// Full homology of GC2 for loop orders 1..hmax; exact ranks confirmed
// against two primes on every boundary matrix.
HomologyReport homology_dimensions(int hmax, const std::string& cache_dir = "",
                                   bool verbose = false);

}  // namespace gcanon
