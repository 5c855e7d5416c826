#pragma once

#include <string>
#include <vector>

#include "geomatch/geometry.hpp"

namespace geomatch {

// Which predicate backend a point set uses. Convex and Wheel sets are defined
// by their cyclic labels; their stored coordinates are rendering-only
// approximations (large-radius regular polygons, rounded).
enum class Config { convex, wheel, rposition, general };

std::string to_string(Config c);
Config config_from_string(const std::string& s);

// Points are stored in label order: index i is vertex v_i. For wheel sets the
// center x is the last point and center_index names it.
struct PointSet {
  Config config = Config::general;
  std::vector<Point> points;
  int center_index = -1;

  int size() const { return static_cast<int>(points.size()); }
  // Circle vertex count 2n-1 for wheel sets.
  int circle_count() const { return size() - 1; }

  const Point& at(int v) const { return points[v]; }
};

// Enforces the PointSet invariants: even size >= 4, coordinate bound, no
// three points collinear, and the config-specific structure (convex cyclic
// order, wheel center strictly inside its circle).
void validate_point_set(const PointSet& ps);

// True iff the open segments of e1 and e2 share a point, dispatched to the
// backend selected by ps.config. Edges sharing an endpoint never cross.
bool edges_cross(Edge e1, Edge e2, const PointSet& ps);

// Exact-coordinate crossing test; requires disjoint endpoints.
bool proper_cross_exact(Edge e1, Edge e2, const PointSet& ps);

// Hull vertex indices in counterclockwise order. Combinatorial shortcut for
// convex (all indices) and wheel (all circle indices, center excluded).
std::vector<int> convex_hull(const PointSet& ps);

// Consecutive hull pairs, sorted.
std::vector<Edge> boundary_edges_of(const PointSet& ps);

}  // namespace geomatch
