#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geomatch/errors.hpp"

namespace geomatch {

// Coordinates are bounded so every 3x3 orientation determinant is exact in
// the 128-bit intermediates used below.
inline constexpr std::int64_t kCoordBound = std::int64_t{1} << 25;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Vertex-index pair, normalized so a < b.
struct Edge {
  int a = 0;
  int b = 0;

  Edge() = default;
  Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {
    if (u == v) throw invalid_input("edge endpoints must differ");
  }

  bool contains(int v) const { return v == a || v == b; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(Edge e);

// Exact rational line a*x + b*y = c with integer coefficients, kept in
// gcd-reduced form with (a, b) lexicographically positive.
struct Line {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  static Line through(Point p, Point q);
  static Line normalized(std::int64_t a, std::int64_t b, std::int64_t c);

  // sign(a*p.x + b*p.y - c); exact.
  int side(Point p) const;

  friend bool operator==(const Line&, const Line&) = default;
};

// Sign of the determinant (q-p) x (r-p); +1 = counterclockwise.
int orient(Point p, Point q, Point r);

// True iff the open segments pq and rs share a point. Any collinear triple
// among the four endpoints is a general-position violation.
bool segments_properly_cross(Point p, Point q, Point r, Point s);

// True iff chord {c,d} separates chord {a,b} on a convex cycle of m points,
// i.e. exactly one of c, d lies on the arc strictly between a and b.
bool chords_cross_cyclic(int a, int b, int c, int d, int m);

// True iff the segment from the wheel center to circle vertex c properly
// crosses the chord v_a v_b. Equivalent to: c lies strictly inside the minor
// arc between a and b. Requires m odd so the minor arc is never ambiguous.
bool radial_crosses_chord(int c, int a, int b, int m);

// Indices of the convex hull of pts[subset], counterclockwise, rotated so the
// smallest contained index comes first.
std::vector<int> convex_hull_indices(const std::vector<Point>& pts,
                                     const std::vector<int>& subset);

}  // namespace geomatch
