#pragma once

#include <optional>
#include <string>

#include "gcanon/canform.hpp"
#include "gcanon/graph.hpp"
#include "gcanon/integrand.hpp"

namespace gcanon {

enum class Sampler { kUniform, kHepp };

Sampler sampler_from_string(const std::string& s);
std::string sampler_name(Sampler s);

struct IntegralEstimate {
    double value = 0;
    double std_error = 0;
    long samples = 0;
    Sampler sampler = Sampler::kHepp;
    uint64_t seed = 0;
    bool exact_zero = false;  // vanishing short-circuit, no sampling
    std::string integrand;

    // |value| <= max(1e-6 * scale, 3 std_error), scale = mean |integrand|
    double zero_scale = 0;
    bool consistent_with_zero() const;
    std::string to_json(const Graph& g, const std::string& spec,
                        std::optional<double> target = {}) const;
};

struct IntegrateOptions {
    Sampler sampler = Sampler::kHepp;
    long samples = 1000000;
    uint64_t seed = 1;
    int workers = 0;  // 0: hardware concurrency
};

// Monte-Carlo estimate of int_{sigma_G} omega for omega = the spec's
// canonical form; deterministic for fixed (sampler, seed, samples)
// independent of the worker count.
IntegralEstimate integrate(const Graph& g, const CanonicalFormSpec& spec,
                           const IntegrateOptions& opt);
// Same machinery for an explicit integrand (Feynman residues).
IntegralEstimate integrate_with(const Integrand& f, const IntegrateOptions& opt);

struct StokesTerm {
    std::string kind;  // "contract", "delete", "coproduct"
    int edge = -1;     // for contract/delete
    std::string gamma;
    int sign = 1;
    IntegralEstimate estimate;
};

struct StokesResidual {
    double value = 0;
    double std_error = 0;
    bool all_terms_vanish = false;
    std::vector<StokesTerm> terms;
    std::string to_json(const Graph& g, const std::string& spec) const;
};

// Boundary-face sum for a graph with e = deg(spec) + 2 and no tadpoles:
// faces x_e = 0 carry (-1)^e; product faces sigma_gamma x sigma_{G/gamma}
// carry the shuffle parity of (E_gamma, complement), paired through the
// reduced coproduct.  The result should be 0 within Monte-Carlo error.
StokesResidual stokes_residual(const Graph& g, const CanonicalFormSpec& spec,
                               const IntegrateOptions& opt);

}  // namespace gcanon
