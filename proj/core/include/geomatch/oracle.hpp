#pragma once

#include <string>
#include <vector>

#include "geomatch/constructions.hpp"
#include "geomatch/pointset.hpp"

namespace geomatch {

enum class PackingConstraint { none, triangle_free_union, plane_triangle_free_union };

std::string to_string(PackingConstraint c);
PackingConstraint constraint_from_string(const std::string& s);

// Point-count guard for the brute-force oracle; GEOMATCH_SIZE_LIMIT overrides
// the default of 16. Sets above the guard raise size_guard_error.
int oracle_size_limit();

// All non-crossing perfect matchings, in lexicographic edge-list order.
// Recursion anchors the lowest unmatched index and prunes on any crossing
// with the chosen edges. size_limit < 0 uses oracle_size_limit().
std::vector<Matching> enumerate_ncpms(const PointSet& ps, int size_limit = -1);

struct PackingResult {
  PackingConstraint constraint = PackingConstraint::none;
  int max_size = 0;
  bool exhaustive = false;  // witnesses hold every optimum family
  int witness_cap = 64;
  std::vector<MatchingFamily> witnesses;
};

// Exact maximum number of pairwise edge-disjoint NCPMs whose union satisfies
// the constraint, by backtracking over the enumerated matchings with
// edge-conflict and incremental triangle/crossing pruning.
PackingResult max_packing(const PointSet& ps, PackingConstraint constraint,
                          int witness_cap = 64, bool exhaustive = false,
                          int size_limit = -1);

// True iff every maximum family of n edge-disjoint NCPMs on the convex set
// has union edge set exactly { (a,b) : a+b odd }.
bool all_max_packings_union_check(const PointSet& ps, int size_limit = -1);

struct WheelEquivalenceReport {
  int n = 0;
  bool asserted = false;  // odd n asserts the equivalence; even n reports
  bool holds = false;
  long long families = 0;
  long long two_boundary_families = 0;
  long long consecutive_families = 0;
  std::string counterexample;
};

// Enumerates every family of ceil(n/2) edge-disjoint NCPMs with triangle-free
// union on the wheel set and checks, per family, that "every matching has
// exactly two boundary edges" holds iff "the radial edges are consecutive".
WheelEquivalenceReport wheel_equivalence_check(int n, int size_limit = -1);

}  // namespace geomatch
