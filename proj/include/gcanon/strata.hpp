#pragma once

#include <string>
#include <vector>

#include "gcanon/graph.hpp"

namespace gcanon {

// Basis of the (h, e) stratum of GC2: connected simple graphs with min
// degree 3, no odd automorphism, one canonical representative per class,
// sorted by canonical key.  Multigraph classes all vanish (a doubled edge
// admits the odd automorphism swapping the pair), so only simple graphs
// are enumerated.
struct StratumBasis {
    int h = 0;
    int e = 0;
    std::vector<Graph> basis;             // canonical representatives
    std::vector<std::string> keys;        // canonical keys, ascending
    long generated = 0;                   // isomorphism classes before the parity filter
};

// Orderly (lex-max, column-major) generation per degree sequence.
StratumBasis generate_stratum(int h, int e, const std::string& cache_dir = "");

// Edge range with possibly non-empty strata at loop order h.
int stratum_min_edges(int h);
int stratum_max_edges(int h);

}  // namespace gcanon
