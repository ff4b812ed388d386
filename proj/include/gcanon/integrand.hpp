#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gcanon/canform.hpp"
#include "gcanon/graph.hpp"

namespace gcanon {

// Evaluates the scalar g(x) with omega_G = g * Omega_G on the open simplex;
// g is homogeneous of degree -e_G.
class Integrand {
  public:
    virtual ~Integrand() = default;
    virtual int edges() const = 0;
    virtual double eval(const double* x) const = 0;
    virtual std::string describe() const = 0;
    virtual bool always_zero() const { return false; }
};

// sum_t c_t * x^mono_t / Psi^{p_t}, with Psi accumulated from its monomial
// list with Kahan compensation.  Closed wheel/K6 forms and the Feynman
// residue integrand live here.
class PsiRationalIntegrand : public Integrand {
  public:
    struct Piece {
        double coef;
        std::vector<int> mono;  // exponent per edge
        int psi_pow;
    };
    PsiRationalIntegrand(const Graph& g, std::vector<Piece> pieces);
    int edges() const override { return m_; }
    double eval(const double* x) const override;
    std::string describe() const override { return desc_; }

  private:
    int m_;
    std::vector<std::pair<std::vector<int>, double>> psi_;  // monomial, coef
    std::vector<Piece> pieces_;
    std::string desc_;
    friend std::unique_ptr<Integrand> make_integrand(const Graph&, const CanonicalFormSpec&);
};

// General route for primitive specs: per point, invert the graph matrix to
// get the Dodgson ratios, then a signed-path DP over the edge subset gives
// the single top component of tr(eta^{4k+1}).
class EtaTopIntegrand : public Integrand {
  public:
    EtaTopIntegrand(const Graph& g, int k);
    int edges() const override { return m_; }
    double eval(const double* x) const override;
    std::string describe() const override;

  private:
    Graph g_;
    int m_, n_, power_;
    std::vector<std::vector<int>> inc_;
};

// Wedge specs evaluated by pairing DP tables of the two factors over the
// complementary edge subsets.  Correct for any spec, but costly; the
// acceptance path only uses it where no verified closed form applies.
class WedgeEtaIntegrand : public Integrand {
  public:
    WedgeEtaIntegrand(const Graph& g, CanonicalFormSpec spec);
    int edges() const override { return m_; }
    double eval(const double* x) const override;
    std::string describe() const override;

  private:
    Graph g_;
    CanonicalFormSpec spec_;
    int m_;
    std::vector<std::vector<int>> inc_;
};

class ZeroIntegrand : public Integrand {
  public:
    explicit ZeroIntegrand(int m) : m_(m) {}
    int edges() const override { return m_; }
    double eval(const double*) const override { return 0.0; }
    std::string describe() const override { return "zero (vanishing short-circuit)"; }
    bool always_zero() const override { return true; }

  private:
    int m_;
};

// Chooses the integrand: vanishing short-circuits, then the verified
// closed-form registry (wheels, K6 — each candidate is checked against the
// exact beta engine at random integer points before use, up to an overall
// sign fixed by the graph's labelling), then the eta-route fallback.
std::unique_ptr<Integrand> make_integrand(const Graph& g, const CanonicalFormSpec& spec);

// Omega_G/Psi^2 for a degree-zero graph without divergent subgraphs.
std::unique_ptr<Integrand> feynman_residue_integrand(const Graph& g);
// The subgraph test behind the rejection above.
bool has_divergent_subgraph(const Graph& g);

}  // namespace gcanon
