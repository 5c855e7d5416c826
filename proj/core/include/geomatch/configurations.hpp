#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "geomatch/pointset.hpp"

namespace geomatch {

// Witness that a point set is in R-position: n pairwise non-parallel lines
// whose arrangement has exactly one point in each open unbounded region.
struct RPositionCertificate {
  std::vector<Line> lines;
  // region_assignment[i] = unbounded-region index (counterclockwise) holding
  // point i.
  std::vector<int> region_assignment;
};

struct RPositionCheck {
  bool ok = false;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

// 2n points labeled counterclockwise on a large-radius polygon.
PointSet gen_convex(int two_n);

// 2n-1 regularly spaced circle points plus the center as the last point.
PointSet gen_wheel(int two_n);

// n pairwise non-parallel lines near the origin with seed-chosen slopes; one
// point at the angular midpoint of each of the 2n unbounded direction cones,
// at large radius, labeled counterclockwise. Validated exactly before return.
std::pair<PointSet, RPositionCertificate> gen_r_position(int two_n,
                                                         std::uint64_t seed);

// Verifies the certificate: pairwise non-parallel lines, every point strictly
// inside its claimed unbounded region, regions distinct and labeled in
// counterclockwise cyclic order. Never throws; failures carry a diagnostic.
RPositionCheck check_r_position(const PointSet& ps,
                                const RPositionCertificate& cert);

// Admission hypothesis for R-position congruence families: for every pair (i, j)
// of different parity with j in the cyclic half-range (i, i+n], the points
// v_i and v_j are not separated by the line through v_{i-1} and v_{j+1}.
bool check_rpost_hypothesis(const PointSet& ps);

// Uniform random integer points, rejection-sampled until no three are
// collinear and no two share an x-projection.
PointSet gen_general(int two_n, std::uint64_t seed);

// Outer regular polygon plus an inner copy scaled by 1/2 and rotated by half
// a step; cycle length two_n/2 must be even so the cycle edges 2-color.
PointSet gen_prism(int two_n);

}  // namespace geomatch
