#include "geomatch/configurations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "geomatch/rng.hpp"

namespace geomatch {

namespace {

using int128 = __int128;

constexpr std::int64_t kRadius = 1'000'000;
constexpr std::int64_t kBox = 1'000'000;

int128 cross2(Point a, Point b) {
  return int128(a.x) * b.y - int128(a.y) * b.x;
}

std::vector<Point> regular_polygon(int count, double radius, double offset) {
  std::vector<Point> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) {
    double a = offset + 2.0 * std::numbers::pi * i / count;
    pts.push_back(Point{std::llround(radius * std::cos(a)),
                        std::llround(radius * std::sin(a))});
  }
  return pts;
}

// Rounding can in principle degrade a polygon layout; regenerate at a larger
// radius until the exact validator accepts.
PointSet validated_layout(const std::function<PointSet(double)>& make) {
  std::string last;
  for (double r = kRadius; r <= 32.0 * kRadius; r *= 2.0) {
    PointSet ps = make(r);
    try {
      validate_point_set(ps);
      return ps;
    } catch (const std::runtime_error& e) {
      last = e.what();
    }
  }
  throw construction_error("polygon layout failed validation: " + last);
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  Rng r(seed ^ (salt * 0xd1342543de82ef95ULL));
  return r.next();
}

// Angular order starting at the positive x-axis, counterclockwise.
int angle_half(Point d) {
  return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1;
}

bool angle_less(Point a, Point b) {
  int ha = angle_half(a), hb = angle_half(b);
  if (ha != hb) return ha < hb;
  return cross2(a, b) > 0;
}

int sign_of(int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign of line j at infinity in direction u.
int side_at_infinity(const Line& l, Point u) {
  return sign_of(int128(l.a) * u.x + int128(l.b) * u.y);
}

}  // namespace

PointSet gen_convex(int two_n) {
  if (two_n < 4 || two_n % 2 != 0)
    throw invalid_input("convex size must be even and >= 4");
  return validated_layout([&](double r) {
    return PointSet{Config::convex, regular_polygon(two_n, r, 0.0), -1};
  });
}

PointSet gen_wheel(int two_n) {
  if (two_n < 6 || two_n % 2 != 0)
    throw invalid_input("wheel size must be even and >= 6");
  return validated_layout([&](double r) {
    std::vector<Point> pts = regular_polygon(two_n - 1, r, 0.0);
    pts.push_back(Point{0, 0});
    return PointSet{Config::wheel, std::move(pts), two_n - 1};
  });
}

PointSet gen_general(int two_n, std::uint64_t seed) {
  if (two_n < 4 || two_n % 2 != 0)
    throw invalid_input("general size must be even and >= 4");
  Rng rng(mix(seed, static_cast<std::uint64_t>(two_n)));
  for (int restart = 0; restart < 32; ++restart) {
    std::vector<Point> pts;
    bool ok = true;
    while (ok && static_cast<int>(pts.size()) < two_n) {
      bool placed = false;
      for (int tries = 0; tries < 10000; ++tries) {
        Point cand{rng.range(-kBox, kBox), rng.range(-kBox, kBox)};
        bool valid = true;
        for (const Point& p : pts)
          if (p.x == cand.x) {  // distinct sweep projections
            valid = false;
            break;
          }
        for (std::size_t i = 0; valid && i < pts.size(); ++i)
          for (std::size_t j = i + 1; valid && j < pts.size(); ++j)
            if (orient(pts[i], pts[j], cand) == 0) valid = false;
        if (valid) {
          pts.push_back(cand);
          placed = true;
          break;
        }
      }
      ok = placed;
    }
    if (!ok) continue;
    PointSet ps{Config::general, std::move(pts), -1};
    validate_point_set(ps);
    return ps;
  }
  throw construction_error("exhausted retries sampling a general point set");
}

PointSet gen_prism(int two_n) {
  if (two_n < 8 || two_n % 4 != 0)
    throw invalid_input("prism size must be >= 8 and divisible by 4");
  int cycle = two_n / 2;
  return validated_layout([&](double r) {
    std::vector<Point> pts = regular_polygon(cycle, r, 0.0);
    std::vector<Point> inner =
        regular_polygon(cycle, r / 2.0, std::numbers::pi / cycle);
    pts.insert(pts.end(), inner.begin(), inner.end());
    return PointSet{Config::general, std::move(pts), -1};
  });
}

std::pair<PointSet, RPositionCertificate> gen_r_position(int two_n,
                                                         std::uint64_t seed) {
  if (two_n < 4 || two_n % 2 != 0)
    throw invalid_input("r-position size must be even and >= 4");
  int n = two_n / 2;
  std::string last = "no attempt succeeded";

  for (int attempt = 0; attempt < 64; ++attempt) {
    Rng rng(mix(seed, 0x5eedULL + attempt));

    // n pairwise non-parallel line directions.
    std::vector<Point> dirs;
    while (static_cast<int>(dirs.size()) < n) {
      bool placed = false;
      for (int tries = 0; tries < 200; ++tries) {
        double theta = rng.unit() * std::numbers::pi;
        Point d{std::llround(kRadius * std::cos(theta)),
                std::llround(kRadius * std::sin(theta))};
        if (d.x == 0 && d.y == 0) continue;
        bool parallel = false;
        for (const Point& e : dirs)
          if (cross2(e, d) == 0) parallel = true;
        if (parallel) continue;
        dirs.push_back(d);
        placed = true;
        break;
      }
      if (!placed) break;
    }
    if (static_cast<int>(dirs.size()) < n) continue;

    RPositionCertificate cert;
    for (const Point& d : dirs)
      cert.lines.push_back(Line::normalized(-d.y, d.x, 0));
    cert.region_assignment.resize(two_n);
    for (int i = 0; i < two_n; ++i) cert.region_assignment[i] = i;

    // One point per direction cone, at the cone's angular midpoint.
    std::vector<Point> boundary;
    for (const Point& d : dirs) {
      boundary.push_back(d);
      boundary.push_back(Point{-d.x, -d.y});
    }
    std::sort(boundary.begin(), boundary.end(), angle_less);

    std::vector<Point> pts;
    for (int s = 0; s < two_n; ++s) {
      Point u{boundary[s].x + boundary[(s + 1) % two_n].x,
              boundary[s].y + boundary[(s + 1) % two_n].y};
      double norm = std::hypot(static_cast<double>(u.x),
                               static_cast<double>(u.y));
      pts.push_back(Point{std::llround(kRadius * u.x / norm),
                          std::llround(kRadius * u.y / norm)});
    }

    PointSet ps{Config::rposition, std::move(pts), -1};
    try {
      validate_point_set(ps);
    } catch (const std::runtime_error& e) {
      last = e.what();
      continue;
    }
    RPositionCheck check = check_r_position(ps, cert);
    if (!check.ok) {
      last = check.diagnostic;
      continue;
    }
    return {std::move(ps), std::move(cert)};
  }
  throw construction_error("r-position generation failed: " + last);
}

RPositionCheck check_r_position(const PointSet& ps,
                                const RPositionCertificate& cert) {
  int two_n = ps.size();
  int n = two_n / 2;
  if (static_cast<int>(cert.lines.size()) != n)
    return {false, "certificate must carry exactly n lines"};
  if (static_cast<int>(cert.region_assignment.size()) != two_n)
    return {false, "region assignment must cover every point"};

  std::vector<bool> seen(two_n, false);
  for (int r : cert.region_assignment) {
    if (r < 0 || r >= two_n) return {false, "region index out of range"};
    if (seen[r]) return {false, "region " + std::to_string(r) + " reused"};
    seen[r] = true;
  }

  for (std::size_t i = 0; i < cert.lines.size(); ++i)
    for (std::size_t j = i + 1; j < cert.lines.size(); ++j)
      if (int128(cert.lines[i].a) * cert.lines[j].b ==
          int128(cert.lines[j].a) * cert.lines[i].b)
        return {false, "lines " + std::to_string(i) + "," +
                           std::to_string(j) + " are parallel"};

  // Unbounded regions correspond to the direction cones between consecutive
  // line directions; their sign vectors are evaluated at infinity.
  std::vector<Point> boundary;
  for (const Line& l : cert.lines) {
    boundary.push_back(Point{l.b, -l.a});
    boundary.push_back(Point{-l.b, l.a});
  }
  std::sort(boundary.begin(), boundary.end(), angle_less);

  std::vector<std::vector<int>> sector_sign(two_n);
  for (int s = 0; s < two_n; ++s) {
    Point u{boundary[s].x + boundary[(s + 1) % two_n].x,
            boundary[s].y + boundary[(s + 1) % two_n].y};
    for (const Line& l : cert.lines) {
      int sg = side_at_infinity(l, u);
      if (sg == 0) return {false, "degenerate direction cone"};
      sector_sign[s].push_back(sg);
    }
  }

  for (int k = 0; k < two_n; ++k) {
    int r = cert.region_assignment[k];
    for (std::size_t j = 0; j < cert.lines.size(); ++j) {
      int sg = cert.lines[j].side(ps.at(k));
      if (sg == 0)
        return {false, "point " + std::to_string(k) + " lies on line " +
                           std::to_string(j)};
      if (sg != sector_sign[r][j])
        return {false, "point " + std::to_string(k) +
                           " is not in its claimed region " +
                           std::to_string(r)};
    }
  }

  for (int k = 0; k < two_n; ++k)
    if (cert.region_assignment[k] !=
        (cert.region_assignment[0] + k) % two_n)
      return {false, "labels are not in counterclockwise region order"};

  return {true, ""};
}

bool check_rpost_hypothesis(const PointSet& ps) {
  if (ps.config != Config::rposition)
    throw invalid_input("hypothesis check requires an r-position set");
  int m = ps.size();
  int n = m / 2;
  for (int i = 0; i < m; ++i) {
    for (int d = 1; d <= n; d += 2) {
      int j = (i + d) % m;
      Point a = ps.at((i - 1 + m) % m);
      Point b = ps.at((j + 1) % m);
      int si = orient(a, b, ps.at(i));
      int sj = orient(a, b, ps.at(j));
      if (si == 0 || sj == 0)
        throw general_position_error(
            "collinear triple while checking pair (" + std::to_string(i) +
            "," + std::to_string(j) + ")");
      if (si != sj) return false;
    }
  }
  return true;
}

}  // namespace geomatch
