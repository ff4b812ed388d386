#pragma once

#include <string>
#include <vector>

#include "gcanon/diff_form.hpp"
#include "gcanon/graph.hpp"
#include "gcanon/laplacian.hpp"

namespace gcanon {

// Element of the exterior algebra Omega_can: a strictly increasing list of
// indices k, standing for w^{4k_1+1} ^ ... ^ w^{4k_r+1}.  Empty = unit.
struct CanonicalFormSpec {
    std::vector<int> ks;

    CanonicalFormSpec() = default;
    explicit CanonicalFormSpec(std::vector<int> indices);

    int degree() const;
    bool is_unit() const { return ks.empty(); }
    bool is_primitive() const { return ks.size() == 1; }
    std::string str() const;  // e.g. "w5^w9"
    bool operator==(const CanonicalFormSpec& o) const { return ks == o.ks; }
    bool operator<(const CanonicalFormSpec& o) const { return ks < o.ks; }
};

struct CoproductTerm {
    CanonicalFormSpec left, right;
    int sign;
};

// Graded shuffle coproduct; every generator is primitive.
std::vector<CoproductTerm> coproduct(const CanonicalFormSpec& spec);
// Coproduct with 1 (x) w and w (x) 1 dropped.
std::vector<CoproductTerm> reduced_coproduct(const CanonicalFormSpec& spec);

// w^{4k+1}_G as beta^{4k+1} of the graph Laplacian, wedged over the spec.
// Denominator is a power of Psi_G.  May be the zero form.
DiffForm canonical_form(const Graph& g, const CanonicalFormSpec& spec);
DiffForm canonical_form(const LaplacianBundle& bundle, const CanonicalFormSpec& spec);

// Independent route: trace of powers of the Dodgson matrix
// eta_ij = (M^{-1})_ij dx_j built from the graph matrix.
DiffForm canonical_form_via_eta(const Graph& g, int k);

// Top-degree vanishing tests for e_G = deg+1 (degree <= 2 vertex, multiple
// edge, tadpole, one-vertex reducible).
bool canonical_form_vanishes_on(const Graph& g);

// For a primitive spec, the canonical integral vanishes unless the graph
// has degree zero (e = 2h).
bool integral_vanishes(const Graph& g, const CanonicalFormSpec& spec);

}  // namespace gcanon
