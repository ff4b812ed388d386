#pragma once

#include <string>
#include <vector>

#include "gcanon/graph.hpp"

namespace gcanon {

struct IsoCertificate {
    std::string canonical_key;      // equal iff isomorphic as multigraphs
    std::vector<int> vertex_map;    // original vertex -> canonical label
    std::vector<int> edge_map;      // original edge index -> canonical position
    int edge_sign = 1;              // parity of edge_map
    Graph canonical_graph;          // relabelled representative
};

// Deterministic canonical form via partition refinement with backtracking.
// Handles multigraphs (parallel edges, tadpoles) and disconnected graphs.
IsoCertificate canonical_certificate(const Graph& g);

// All vertex permutations fixing the multiplicity structure.
std::vector<std::vector<int>> automorphisms(const Graph& g);

// True iff some automorphism induces an odd edge permutation.  Any multiple
// edge yields one immediately (swap the parallel pair).
bool has_odd_automorphism(const Graph& g);

int permutation_sign(const std::vector<int>& p);

}  // namespace gcanon
