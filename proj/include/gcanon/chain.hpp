#pragma once

#include <map>
#include <string>
#include <vector>

#include "gcanon/canonical.hpp"
#include "gcanon/graph.hpp"
#include "gcanon/rational.hpp"

namespace gcanon {

// Formal rational combination of oriented isomorphism classes.  Keys are
// canonical keys; each term stores the canonical representative, and the
// coefficient is relative to the representative's edge order.  Classes with
// an odd automorphism collapse to zero on insertion.
class GraphChain {
  public:
    struct Entry {
        Graph rep;
        Rat coeff;
    };

    GraphChain() = default;

    // Adds coeff * [g, stored edge order].  The empty sentinel is absorbed.
    void insert(const Graph& g, const Rat& coeff);

    GraphChain operator+(const GraphChain& o) const;
    GraphChain operator-(const GraphChain& o) const;
    GraphChain operator*(const Rat& c) const;
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<std::string, Entry>& terms() const { return terms_; }

    Rat coeff_of(const Graph& g) const;  // includes the relative orientation sign

    // Drop terms that are not GC2 generators: tadpoles, vertices of degree
    // <= 2, disconnected graphs.
    GraphChain project_gc2() const;

    std::string str() const;

  private:
    std::map<std::string, Entry> terms_;
};

// d[G] = sum_i (-1)^i [G//e_i] (1-based sign; loop contractions drop).
GraphChain differential_d(const Graph& g, bool project = true);
GraphChain differential_d(const GraphChain& c, bool project = true);

// delta[G] = sum_i (-1)^i [G \ e_i].
GraphChain differential_delta(const Graph& g, bool project = true);
GraphChain differential_delta(const GraphChain& c, bool project = true);

// Core (1PI) proper subgraphs gamma with h_gamma >= 1, paired with G/gamma.
struct CoreSubgraphTerm {
    std::vector<int> gamma_edges;  // ascending
    Graph gamma;
    Graph quotient;
};
std::vector<CoreSubgraphTerm> coproduct_ck(const Graph& g);

}  // namespace gcanon
