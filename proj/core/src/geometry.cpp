#include "geomatch/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace geomatch {

namespace {

using int128 = __int128;

int sign_of(int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Index strictly inside the counterclockwise arc from a to b (exclusive).
bool strictly_in_arc(int x, int a, int b, int m) {
  int da = ((x - a) % m + m) % m;
  int db = ((b - a) % m + m) % m;
  return da > 0 && da < db;
}

}  // namespace

std::string to_string(Edge e) {
  return "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
}

int orient(Point p, Point q, Point r) {
  int128 d = int128(q.x - p.x) * int128(r.y - p.y) -
             int128(q.y - p.y) * int128(r.x - p.x);
  return sign_of(d);
}

Line Line::normalized(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a == 0 && b == 0) throw invalid_input("line requires (a,b) != (0,0)");
  std::int64_t g = std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
  if (g == 0) g = 1;
  a /= g;
  b /= g;
  c /= g;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return Line{a, b, c};
}

Line Line::through(Point p, Point q) {
  if (p == q) throw invalid_input("line through two equal points");
  // Normal (dy, -dx), so side() agrees with orient(p, q, .) up to sign.
  return normalized(q.y - p.y, p.x - q.x, q.y * p.x - q.x * p.y);
}

int Line::side(Point p) const {
  int128 v = int128(a) * p.x + int128(b) * p.y - int128(c);
  return sign_of(v);
}

bool segments_properly_cross(Point p, Point q, Point r, Point s) {
  int d1 = orient(r, s, p);
  int d2 = orient(r, s, q);
  int d3 = orient(p, q, r);
  int d4 = orient(p, q, s);
  if (d1 == 0 || d2 == 0 || d3 == 0 || d4 == 0)
    throw general_position_error(
        "collinear endpoints in segment crossing test");
  return d1 != d2 && d3 != d4;
}

bool chords_cross_cyclic(int a, int b, int c, int d, int m) {
  if (m < 4) throw invalid_input("cyclic crossing needs at least 4 points");
  for (int v : {a, b, c, d})
    if (v < 0 || v >= m) throw invalid_input("cyclic index out of range");
  if (a == b || a == c || a == d || b == c || b == d || c == d)
    throw invalid_input("cyclic crossing requires distinct indices");
  return strictly_in_arc(c, a, b, m) != strictly_in_arc(d, a, b, m);
}

bool radial_crosses_chord(int c, int a, int b, int m) {
  if (m % 2 == 0)
    throw invalid_input("radial crossing is unsupported for even circles");
  for (int v : {a, b, c})
    if (v < 0 || v >= m) throw invalid_input("circle index out of range");
  if (a == b || a == c || b == c)
    throw invalid_input("radial crossing requires distinct indices");
  int inner = ((b - a) % m + m) % m - 1;  // vertices strictly between a and b
  int outer = m - 2 - inner;
  if (inner < outer) return strictly_in_arc(c, a, b, m);
  return strictly_in_arc(c, b, a, m);
}

std::vector<int> convex_hull_indices(const std::vector<Point>& pts,
                                     const std::vector<int>& subset) {
  if (subset.size() < 3)
    throw invalid_input("convex hull needs at least 3 points");
  std::vector<int> order = subset;
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (pts[i].x != pts[j].x) return pts[i].x < pts[j].x;
    return pts[i].y < pts[j].y;
  });

  auto build = [&](std::vector<int>& chain, int idx) {
    while (chain.size() >= 2 &&
           orient(pts[chain[chain.size() - 2]], pts[chain.back()], pts[idx]) <=
               0)
      chain.pop_back();
    chain.push_back(idx);
  };

  std::vector<int> lower, upper;
  for (int idx : order) build(lower, idx);
  for (auto it = order.rbegin(); it != order.rend(); ++it) build(upper, *it);

  lower.pop_back();
  upper.pop_back();
  std::vector<int> hull = lower;
  hull.insert(hull.end(), upper.begin(), upper.end());

  auto lowest = std::min_element(hull.begin(), hull.end());
  std::rotate(hull.begin(), lowest, hull.end());
  return hull;
}

}  // namespace geomatch
