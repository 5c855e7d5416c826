#include "geomatch/pointset.hpp"

#include <algorithm>
#include <cstdlib>

namespace geomatch {

std::string to_string(Config c) {
  switch (c) {
    case Config::convex:
      return "convex";
    case Config::wheel:
      return "wheel";
    case Config::rposition:
      return "rposition";
    case Config::general:
      return "general";
  }
  return "general";
}

Config config_from_string(const std::string& s) {
  if (s == "convex") return Config::convex;
  if (s == "wheel") return Config::wheel;
  if (s == "rposition") return Config::rposition;
  if (s == "general") return Config::general;
  throw invalid_input("unknown config: " + s);
}

namespace {

void check_indices(Edge e, const PointSet& ps) {
  if (e.a < 0 || e.b >= ps.size())
    throw invalid_input("edge index out of range: " + to_string(e));
}

void require_general_position(const PointSet& ps) {
  int m = ps.size();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        if (orient(ps.at(i), ps.at(j), ps.at(k)) == 0)
          throw general_position_error(
              "collinear points " + std::to_string(i) + "," +
              std::to_string(j) + "," + std::to_string(k));
}

}  // namespace

void validate_point_set(const PointSet& ps) {
  int m = ps.size();
  if (m < 4 || m % 2 != 0)
    throw invalid_input("point set size must be even and >= 4, got " +
                        std::to_string(m));
  for (const Point& p : ps.points)
    if (std::abs(p.x) > kCoordBound || std::abs(p.y) > kCoordBound)
      throw invalid_input("coordinate exceeds exactness bound");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (ps.at(i) == ps.at(j))
        throw invalid_input("duplicate points " + std::to_string(i) + "," +
                            std::to_string(j));
  require_general_position(ps);

  switch (ps.config) {
    case Config::convex: {
      if (ps.center_index != -1)
        throw invalid_input("convex set cannot have a center");
      for (int i = 0; i < m; ++i)
        if (orient(ps.at(i), ps.at((i + 1) % m), ps.at((i + 2) % m)) <= 0)
          throw invalid_input(
              "convex labels must list a convex polygon counterclockwise");
      break;
    }
    case Config::wheel: {
      if (m < 6) throw invalid_input("wheel set needs at least 6 points");
      if (ps.center_index != m - 1)
        throw invalid_input("wheel center must be the last point");
      int mc = m - 1;
      for (int i = 0; i < mc; ++i) {
        if (orient(ps.at(i), ps.at((i + 1) % mc), ps.at((i + 2) % mc)) <= 0)
          throw invalid_input(
              "wheel circle labels must be convex counterclockwise");
        if (orient(ps.at(i), ps.at((i + 1) % mc), ps.at(ps.center_index)) <= 0)
          throw invalid_input("wheel center must lie inside the circle");
      }
      break;
    }
    case Config::rposition:
    case Config::general:
      if (ps.center_index != -1)
        throw invalid_input("only wheel sets have a center");
      break;
  }
}

bool proper_cross_exact(Edge e1, Edge e2, const PointSet& ps) {
  check_indices(e1, ps);
  check_indices(e2, ps);
  if (e1.contains(e2.a) || e1.contains(e2.b))
    throw invalid_input("proper crossing test requires disjoint endpoints");
  return segments_properly_cross(ps.at(e1.a), ps.at(e1.b), ps.at(e2.a),
                                 ps.at(e2.b));
}

bool edges_cross(Edge e1, Edge e2, const PointSet& ps) {
  check_indices(e1, ps);
  check_indices(e2, ps);
  if (e1.contains(e2.a) || e1.contains(e2.b)) return false;

  switch (ps.config) {
    case Config::convex:
      return chords_cross_cyclic(e1.a, e1.b, e2.a, e2.b, ps.size());
    case Config::wheel: {
      int c = ps.center_index;
      int m = ps.circle_count();
      bool r1 = e1.contains(c);
      bool r2 = e2.contains(c);
      // Two radial edges would share the center, handled above.
      if (r1) return radial_crosses_chord(e1.a == c ? e1.b : e1.a, e2.a, e2.b, m);
      if (r2) return radial_crosses_chord(e2.a == c ? e2.b : e2.a, e1.a, e1.b, m);
      return chords_cross_cyclic(e1.a, e1.b, e2.a, e2.b, m);
    }
    case Config::rposition:
    case Config::general:
      return segments_properly_cross(ps.at(e1.a), ps.at(e1.b), ps.at(e2.a),
                                     ps.at(e2.b));
  }
  return false;
}

std::vector<int> convex_hull(const PointSet& ps) {
  if (ps.size() < 3) throw invalid_input("convex hull needs >= 3 points");
  std::vector<int> idx;
  switch (ps.config) {
    case Config::convex:
      idx.resize(ps.size());
      for (int i = 0; i < ps.size(); ++i) idx[i] = i;
      return idx;
    case Config::wheel:
      idx.resize(ps.circle_count());
      for (int i = 0; i < ps.circle_count(); ++i) idx[i] = i;
      return idx;
    case Config::rposition:
    case Config::general: {
      std::vector<int> all(ps.size());
      for (int i = 0; i < ps.size(); ++i) all[i] = i;
      return convex_hull_indices(ps.points, all);
    }
  }
  return idx;
}

std::vector<Edge> boundary_edges_of(const PointSet& ps) {
  std::vector<int> hull = convex_hull(ps);
  std::vector<Edge> edges;
  edges.reserve(hull.size());
  for (std::size_t i = 0; i < hull.size(); ++i)
    edges.emplace_back(hull[i], hull[(i + 1) % hull.size()]);
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace geomatch
