#pragma once

#include <string>
#include <vector>

#include "gcanon/graph.hpp"

namespace gcanon {

struct PropertyResult {
    std::string name;
    bool pass = false;
    int instances = 0;
    std::string detail;
};

// The randomized identity/property battery behind `selftest` and the
// acceptance suite: invariant-trace vanishing laws, projective invariance,
// pole bounds, restriction, duality/series/parallel/join, vanishing
// conditions, route equivalences, closedness.  Every check runs on at
// least `instances` randomized cases.
std::vector<PropertyResult> run_property_suite(uint64_t seed = 1, int instances = 20);

// Per-graph identity report (series, parallel, join, restriction, and
// duality when a known dual partner exists), evaluated at random points.
std::vector<PropertyResult> identity_checks(const Graph& g, uint64_t seed = 1);

// Empirical check of the stronger mu^{2n} = 0 statement (reported, not
// asserted as an invariant).
PropertyResult mu_even_power_report(uint64_t seed = 1);

}  // namespace gcanon
