#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geomatch/pointset.hpp"

namespace geomatch {

// A perfect matching as a sorted set of disjoint index pairs. `stone` is the
// leftover same-side edge the divide-and-conquer matcher can produce.
struct Matching {
  std::vector<Edge> edges;
  std::optional<Edge> stone;
};

// Normalizes edge order and collapses duplicates (set semantics).
Matching make_matching(std::vector<Edge> edges,
                       std::optional<Edge> stone = std::nullopt);

// One recursive split of the general construction, kept as provenance.
struct SplitRecord {
  int round = 0;
  std::vector<int> block;
  std::optional<Edge> carried_stone;
  std::vector<int> low;
  std::vector<int> high;
};

struct MatchingFamily {
  std::string method;
  std::vector<Matching> matchings;
  std::vector<Edge> stones;
  std::vector<SplitRecord> splits;

  int size() const { return static_cast<int>(matchings.size()); }
};

// F_i = { (a,b) : a+b = 2i+1 (mod 2n) } for i = 0..n-1; n matchings whose
// union is the maximal triangle-free graph on the convex labels.
MatchingFamily convex_family(const PointSet& ps);

// k+l = 2i+1 (mod 2n) where `boundary` is the hull edge (i, i+1).
bool is_p_parallel(Edge e, Edge boundary, int two_n);

// ceil(n/2) rotated wheel matchings, 2 boundary edges and one radial each.
MatchingFamily wheel_family_b2(const PointSet& ps);

// ceil(2n/3)-1 rotated wheel matchings with 3 boundary edges each; n >= 8.
MatchingFamily wheel_family_b3(const PointSet& ps);

// Same congruence classes as convex_family, on an r-position set that passes
// the hypothesis check; every matching is re-verified with exact predicates.
MatchingFamily rposition_family(const PointSet& ps);

struct Separation {
  Line line;
  std::vector<int> low;   // n1 indices on the negative side
  std::vector<int> high;  // n2 indices on the positive side
};

// Splits `subset` by a line with exactly n1 points strictly on one side and
// n2 on the other, found by sorting along a direction with all-distinct
// projections.
Separation find_separating_line(const PointSet& ps,
                                const std::vector<int>& subset, int n1,
                                int n2);

// The hull edge of conv(S1 u S2) that crosses `l` on the far side from the
// baseline: every other point of S1 u S2 lies strictly below the line through
// the returned pair.
std::pair<int, int> tangent_pair(const PointSet& ps,
                                 const std::vector<int>& s1,
                                 const std::vector<int>& s2, const Line& l);

// Non-crossing perfect matching on an even block: split, then repeatedly
// extract tangent pairs; a leftover pair in the larger half becomes the
// stone edge.
Matching algorithm_a(const PointSet& ps, const std::vector<int>& block);

// Splits a block so the stone pair stays together in the smaller-or-equal
// half. Returns (high = block with the stone, low = the rest); both even.
std::pair<std::vector<int>, std::vector<int>> stone_split(
    const PointSet& ps, const std::vector<int>& block, Edge stone);

// floor(log2(n)) rounds of recursive splitting and cross-matching.
MatchingFamily general_family(const PointSet& ps);

// Spokes plus the 2-colored cycle edges of a nested-polygon prism drawing:
// 3 matchings whose union is plane and triangle-free.
MatchingFamily prism_family(const PointSet& ps);

}  // namespace geomatch
