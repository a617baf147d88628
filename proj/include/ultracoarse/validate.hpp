#pragma once

#include <utility>

#include "ultracoarse/space.hpp"

namespace ultracoarse {

/// One failure of the strong triangle inequality: d(x,z) > max(d(x,y), d(y,z)).
struct TripleViolation {
    std::size_t x, y, z;
    Dist d_xz, d_xy, d_yz;
};

struct UltrametricReport {
    std::vector<std::string> structural;    // malformed matrix: non-square, negative entries
    std::vector<std::string> basic;         // symmetry / diagonal / positivity failures
    std::vector<TripleViolation> triples;   // strong triangle inequality failures

    bool well_formed() const { return structural.empty(); }
    bool ok() const { return structural.empty() && basic.empty() && triples.empty(); }
};

/// Checks every axiom and reports all violations. Works on arbitrary matrix
/// contents; a malformed matrix yields structural entries instead of throwing.
UltrametricReport validate_ultrametric(const FiniteUltrametricSpace& s);

/// Plain metric axioms for real-valued spaces (slack 1e-9 on the triangle
/// inequality). Empty result means valid.
std::vector<std::string> metric_violations(const FiniteMetricSpace& s);

/// The minimal distance-value set of a space: {0} plus all off-diagonal values.
DistanceSet distance_set(const FiniteUltrametricSpace& s);

/// Maximal chains under d(x,y) < r. r must be positive.
Partition r_components(const FiniteUltrametricSpace& s, Dist r);

/// For each r, the maximum diameter over r-components. In a valid
/// ultrametric space every entry is < r; merely-metric matrices can exceed it.
std::vector<std::pair<Dist, Dist>> asdim0_witness(const FiniteUltrametricSpace& s,
                                                  const std::vector<Dist>& r_list);

Dist block_diameter(const FiniteUltrametricSpace& s, const std::vector<std::size_t>& block);

}  // namespace ultracoarse
