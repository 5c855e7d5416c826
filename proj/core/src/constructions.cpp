#include "geomatch/constructions.hpp"

#include <algorithm>
#include <array>

#include "geomatch/configurations.hpp"

namespace geomatch {

namespace {

using int128 = __int128;

int sign_of(int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Split directions carry lexicographic perturbations, so they need more than
// 64 bits.
struct Dir {
  int128 x = 0;
  int128 y = 0;
};

int128 proj(Dir d, Point p) { return d.x * p.x + d.y * p.y; }

// cross(v, rot90(d)) == d . v, so a segment is parallel to the "up" direction
// rot90(d) exactly when its endpoints tie under d.
Dir rot90(Dir d) { return Dir{-d.y, d.x}; }

int128 cross_dir(Point v, Dir w) { return int128(v.x) * w.y - int128(v.y) * w.x; }

// Direction with all-distinct projections for any in-bounds point set:
// (2B+1)*x + y separates points first by x, then by y.
Dir universal_direction() { return Dir{2 * kCoordBound + 1, 1}; }

void require_config(const PointSet& ps, Config c, const std::string& op) {
  if (ps.config != c)
    throw invalid_input(op + " requires a " + to_string(c) + " point set");
}

MatchingFamily congruence_family(const PointSet& ps, const std::string& name) {
  int m = ps.size();
  MatchingFamily family;
  family.method = name;
  for (int i = 0; i < m / 2; ++i) {
    std::vector<Edge> edges;
    for (int a = 0; a < m; ++a) {
      int b = ((2 * i + 1 - a) % m + m) % m;
      if (a < b) edges.emplace_back(a, b);
    }
    family.matchings.push_back(make_matching(std::move(edges)));
  }
  return family;
}

int wheel_mod(int v, int m) { return (v % m + m) % m; }

// One peel step: the hull edge of the remaining points that crosses the
// split, chosen so every other remaining point lies strictly on the baseline
// side of its line.
std::pair<int, int> find_bridge(const PointSet& ps,
                                const std::vector<int>& remaining,
                                const std::vector<char>& is_low, Dir up) {
  if (remaining.size() == 2) {
    int a = remaining[0], b = remaining[1];
    if (is_low[a] == is_low[b])
      throw construction_error("final pair lies on one side of the split");
    return is_low[a] ? std::pair{a, b} : std::pair{b, a};
  }
  std::vector<int> hull = convex_hull_indices(ps.points, remaining);
  int h = static_cast<int>(hull.size());
  std::optional<std::pair<int, int>> bridge;
  for (int i = 0; i < h; ++i) {
    int p = hull[i], q = hull[(i + 1) % h];
    if (is_low[p] == is_low[q]) continue;
    // Hull edge, so every other point sits on one side; the roof has them on
    // the side away from `up`.
    int below = -sign_of(cross_dir(Point{ps.at(q).x - ps.at(p).x,
                                         ps.at(q).y - ps.at(p).y},
                                   up));
    int probe = hull[(i + 2) % h];
    if (orient(ps.at(p), ps.at(q), ps.at(probe)) != below) continue;
    bridge = is_low[p] ? std::pair{p, q} : std::pair{q, p};
  }
  if (!bridge) throw construction_error("no tangent pair found for split");
  return *bridge;
}

// Matches two equally sized sides, strictly separated under `dir`, by
// repeatedly extracting the top tangent pair.
std::vector<Edge> cross_match(const PointSet& ps, const std::vector<int>& s1,
                              const std::vector<int>& s2, Dir dir) {
  if (s1.size() != s2.size())
    throw invalid_input("cross match requires equally sized sides");
  std::vector<char> is_low(ps.size(), 0);
  for (int v : s1) is_low[v] = 1;
  std::vector<int> remaining = s1;
  remaining.insert(remaining.end(), s2.begin(), s2.end());
  std::sort(remaining.begin(), remaining.end());
  Dir up = rot90(dir);

  std::vector<Edge> edges;
  while (!remaining.empty()) {
    auto [u1, u2] = find_bridge(ps, remaining, is_low, up);
    edges.emplace_back(u1, u2);
    std::erase(remaining, u1);
    std::erase(remaining, u2);
  }
  return edges;
}

// Sorted block order under dir with a fixed tiebreak; realizable by an exact
// perturbed direction, see perturbed().
std::vector<int> sort_by_projection(const PointSet& ps, std::vector<int> block,
                                    Dir dir) {
  Dir perp = rot90(dir);
  std::sort(block.begin(), block.end(), [&](int i, int j) {
    int128 pi = proj(dir, ps.at(i)), pj = proj(dir, ps.at(j));
    if (pi != pj) return pi < pj;
    int128 qi = proj(perp, ps.at(i)), qj = proj(perp, ps.at(j));
    if (qi != qj) return qi < qj;
    return i < j;
  });
  return block;
}

// Exact direction realizing the (dir, rot90(dir)) lexicographic order for the
// given block: scale dir past the perpendicular projection range.
Dir perturbed(const PointSet& ps, const std::vector<int>& block, Dir dir) {
  Dir perp = rot90(dir);
  int128 lo = 0, hi = 0;
  bool first = true;
  for (int v : block) {
    int128 q = proj(perp, ps.at(v));
    if (first || q < lo) lo = q;
    if (first || q > hi) hi = q;
    first = false;
  }
  int128 scale = hi - lo + 1;
  return Dir{dir.x * scale + perp.x, dir.y * scale + perp.y};
}

struct BlockPlan {
  std::vector<int> bottom;        // larger-or-equal half; holds any new stone
  std::vector<int> top;           // smaller half; keeps a carried stone whole
  std::optional<Edge> new_stone;  // designated when the halves differ by two
  Dir dir;
};

// Separating-axis search: a line separates {stone} from the rest of the block
// iff some axis among the stone normal, the rest-hull edge normals and the
// stone-to-rest difference vectors strictly separates the projections.
std::optional<Dir> stone_axis(const PointSet& ps, const std::vector<int>& rest,
                              Edge stone) {
  std::vector<Point> axes;
  Point v1 = ps.at(stone.a), v2 = ps.at(stone.b);
  axes.push_back(Point{v1.y - v2.y, v2.x - v1.x});
  if (rest.size() == 2) {
    Point a = ps.at(rest[0]), b = ps.at(rest[1]);
    axes.push_back(Point{a.y - b.y, b.x - a.x});
  } else if (rest.size() >= 3) {
    std::vector<int> hull = convex_hull_indices(ps.points, rest);
    for (std::size_t i = 0; i < hull.size(); ++i) {
      Point a = ps.at(hull[i]), b = ps.at(hull[(i + 1) % hull.size()]);
      axes.push_back(Point{a.y - b.y, b.x - a.x});
    }
  }
  for (int r : rest) {
    axes.push_back(Point{v1.x - ps.at(r).x, v1.y - ps.at(r).y});
    axes.push_back(Point{v2.x - ps.at(r).x, v2.y - ps.at(r).y});
  }

  for (const Point& ax : axes) {
    if (ax.x == 0 && ax.y == 0) continue;
    for (int flip : {1, -1}) {
      Dir d{flip * ax.x, flip * ax.y};
      int128 stone_min = std::min(proj(d, v1), proj(d, v2));
      bool ok = true;
      for (int r : rest)
        if (proj(d, ps.at(r)) >= stone_min) {
          ok = false;
          break;
        }
      if (ok) return d;
    }
  }
  return std::nullopt;
}

// Splits a block into two even halves along a line. A carried stone pair is
// kept whole at the top of the order (its separating axis makes it the two
// extremes); without one, the universal direction is used. When the halves
// must differ by two, the split designates the two projection-minimal points
// as the new stone pair: the prefix cut strictly separates them from every
// other block point, so the stone edge cannot cross any same-round edge and
// the pair stays linearly separable inside every later block it lives in.
BlockPlan plan_block(const PointSet& ps, const std::vector<int>& block,
                     std::optional<Edge> carried) {
  int m = static_cast<int>(block.size());
  if (m < 4 || m % 2 != 0)
    throw invalid_input("block split needs an even block of >= 4 points");

  Dir d;
  if (carried) {
    std::vector<int> rest;
    bool a_in = false, b_in = false;
    for (int v : block) {
      if (v == carried->a) a_in = true;
      else if (v == carried->b) b_in = true;
      else rest.push_back(v);
    }
    if (!a_in || !b_in)
      throw invalid_input("stone endpoints must lie in the block");
    std::optional<Dir> axis = stone_axis(ps, rest, *carried);
    if (!axis)
      throw construction_error(
          "stone pair is not extreme in any sampled direction");
    d = perturbed(ps, block, *axis);
  } else {
    d = universal_direction();
  }

  std::vector<int> order = sort_by_projection(ps, block, d);
  int t = (m / 2) % 2 == 0 ? m / 2 : m / 2 - 1;  // top (smaller) half
  BlockPlan plan;
  plan.bottom.assign(order.begin(), order.begin() + (m - t));
  plan.top.assign(order.begin() + (m - t), order.end());
  plan.dir = d;
  if ((m / 2) % 2 == 1) plan.new_stone = Edge(order[0], order[1]);
  return plan;
}

}  // namespace

Matching make_matching(std::vector<Edge> edges, std::optional<Edge> stone) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Matching{std::move(edges), stone};
}

MatchingFamily convex_family(const PointSet& ps) {
  require_config(ps, Config::convex, "convex family");
  MatchingFamily family = congruence_family(ps, "convex-parallel");
  for (const Matching& f : family.matchings)
    if (static_cast<int>(f.edges.size()) != ps.size() / 2)
      throw construction_error("congruence class is not a perfect matching");
  return family;
}

bool is_p_parallel(Edge e, Edge boundary, int two_n) {
  bool adjacent = boundary.b == boundary.a + 1 ||
                  (boundary.a == 0 && boundary.b == two_n - 1);
  if (!adjacent)
    throw invalid_input("p-parallel reference must be a boundary edge");
  int i = (boundary.a == 0 && boundary.b == two_n - 1) ? two_n - 1
                                                       : boundary.a;
  return (e.a + e.b) % two_n == (2 * i + 1) % two_n;
}

MatchingFamily wheel_family_b2(const PointSet& ps) {
  require_config(ps, Config::wheel, "wheel b=2 family");
  int n = ps.size() / 2;
  int m = ps.circle_count();
  int center = ps.center_index;
  int delta = n % 2;
  int k = (n + delta) / 2;

  MatchingFamily family;
  family.method = "wheel-b2";
  for (int i = 1; i <= k; ++i) {
    std::vector<Edge> edges;
    edges.emplace_back(center, wheel_mod(i - 1, m));
    for (int j = 1; j <= (n - delta) / 2; ++j) {
      edges.emplace_back(wheel_mod(i + j - 1, m), wheel_mod(n - j + i - delta, m));
      edges.emplace_back(wheel_mod(n - 1 - delta + i + j, m),
                         wheel_mod(i - j - 1, m));
    }
    Matching f = make_matching(std::move(edges));
    if (static_cast<int>(f.edges.size()) != n)
      throw construction_error("wheel b=2 formula missed perfectness");
    family.matchings.push_back(std::move(f));
  }
  return family;
}

MatchingFamily wheel_family_b3(const PointSet& ps) {
  require_config(ps, Config::wheel, "wheel b=3 family");
  int n = ps.size() / 2;
  if (n < 8) throw invalid_input("wheel b=3 family requires n >= 8");
  int m = ps.circle_count();
  int center = ps.center_index;
  int q = n / 3;
  int ell = n % 3;

  std::vector<Edge> base;
  base.emplace_back(center, 0);
  if (ell == 0) {
    for (int i = 1; i <= q - 1; ++i)
      base.emplace_back(wheel_mod(3 * q - i, m), wheel_mod(3 * q - 1 + i, m));
    for (int j = 1; j <= q; ++j) {
      base.emplace_back(wheel_mod(j, m), wheel_mod(2 * q + 1 - j, m));
      base.emplace_back(wheel_mod(-j, m), wheel_mod(j - 2 * q - 1, m));
    }
  } else if (ell == 1) {
    for (int i = 1; i <= q; ++i)
      base.emplace_back(wheel_mod(3 * q - 1 - i, m),
                        wheel_mod(3 * q - 2 + i, m));
    for (int j = 1; j <= q - 1; ++j)
      base.emplace_back(wheel_mod(j, m), wheel_mod(2 * q - 1 - j, m));
    for (int r = 1; r <= q + 1; ++r)
      base.emplace_back(wheel_mod(-r, m), wheel_mod(r - 2 * q - 3, m));
  } else {
    for (int i = 1; i <= q + 1; ++i)
      base.emplace_back(wheel_mod(3 * q + 2 - i, m),
                        wheel_mod(3 * q + 1 + i, m));
    for (int j = 1; j <= q; ++j) {
      base.emplace_back(wheel_mod(j, m), wheel_mod(2 * q + 1 - j, m));
      base.emplace_back(wheel_mod(-j, m), wheel_mod(j - 2 * q - 1, m));
    }
  }

  int k = (2 * n + 2) / 3 - 1;  // ceil(2n/3) - 1
  MatchingFamily family;
  family.method = "wheel-b3";
  for (int p = 1; p <= k; ++p) {
    int shift = 2 * p - 2;
    std::vector<Edge> edges;
    for (Edge e : base) {
      int a = e.a == center ? center : wheel_mod(e.a + shift, m);
      int b = e.b == center ? center : wheel_mod(e.b + shift, m);
      edges.emplace_back(a, b);
    }
    Matching f = make_matching(std::move(edges));
    if (static_cast<int>(f.edges.size()) != n)
      throw construction_error("wheel b=3 formula missed perfectness");
    family.matchings.push_back(std::move(f));
  }
  return family;
}

MatchingFamily rposition_family(const PointSet& ps) {
  require_config(ps, Config::rposition, "r-position family");
  if (!check_rpost_hypothesis(ps))
    throw construction_error(
        "point set fails the r-position non-separation hypothesis");
  MatchingFamily family = congruence_family(ps, "rposition-parallel");
  // The congruence classes must come out non-crossing on any admitted
  // layout; verify with the exact coordinate predicates anyway.
  for (const Matching& f : family.matchings)
    for (std::size_t i = 0; i < f.edges.size(); ++i)
      for (std::size_t j = i + 1; j < f.edges.size(); ++j)
        if (proper_cross_exact(f.edges[i], f.edges[j], ps))
          throw construction_error("congruence matching crosses on this set");
  return family;
}

Separation find_separating_line(const PointSet& ps,
                                const std::vector<int>& subset, int n1,
                                int n2) {
  if (n1 < 0 || n2 < 0 || n1 + n2 != static_cast<int>(subset.size()))
    throw invalid_input("separation sizes must add up to the subset size");
  if (n1 == 0 || n2 == 0)
    throw invalid_input("separation needs two nonempty sides");
  Dir d = universal_direction();
  std::vector<int> order = sort_by_projection(ps, subset, d);

  Separation sep;
  sep.low.assign(order.begin(), order.begin() + n1);
  sep.high.assign(order.begin() + n1, order.end());
  // Universal direction projections are distinct integers, so the doubled
  // midpoint between the two sides gives an exact strict separator.
  std::int64_t dx = 2 * kCoordBound + 1;
  std::int64_t pl = dx * ps.at(order[n1 - 1]).x + ps.at(order[n1 - 1]).y;
  std::int64_t ph = dx * ps.at(order[n1]).x + ps.at(order[n1]).y;
  sep.line = Line::normalized(2 * dx, 2, pl + ph);
  return sep;
}

std::pair<int, int> tangent_pair(const PointSet& ps, const std::vector<int>& s1,
                                 const std::vector<int>& s2, const Line& l) {
  if (s1.empty() || s2.empty())
    throw invalid_input("tangent pair needs two nonempty sides");
  std::vector<char> is_low(ps.size(), 0);
  int side1 = l.side(ps.at(s1.front()));
  for (int v : s1) {
    if (l.side(ps.at(v)) != side1 || side1 == 0)
      throw invalid_input("line does not separate the given sides");
    is_low[v] = 1;
  }
  for (int v : s2)
    if (l.side(ps.at(v)) != -side1)
      throw invalid_input("line does not separate the given sides");

  std::vector<int> remaining = s1;
  remaining.insert(remaining.end(), s2.begin(), s2.end());
  std::sort(remaining.begin(), remaining.end());
  // The baseline l-perp is perpendicular to l, so "up" runs along l itself.
  Dir up{-l.b, l.a};
  auto [u1, u2] = find_bridge(ps, remaining, is_low, up);
  return {u1, u2};
}

Matching algorithm_a(const PointSet& ps, const std::vector<int>& block) {
  int m = static_cast<int>(block.size());
  if (m < 2 || m % 2 != 0)
    throw invalid_input("matcher needs an even block of >= 2 points");
  if (m == 2) return make_matching({Edge(block[0], block[1])});
  BlockPlan plan = plan_block(ps, block, std::nullopt);
  std::vector<int> s1 = plan.bottom;
  if (plan.new_stone) {
    std::erase(s1, plan.new_stone->a);
    std::erase(s1, plan.new_stone->b);
  }
  std::vector<Edge> edges = cross_match(ps, s1, plan.top, plan.dir);
  if (plan.new_stone) edges.push_back(*plan.new_stone);
  return make_matching(std::move(edges), plan.new_stone);
}

std::pair<std::vector<int>, std::vector<int>> stone_split(
    const PointSet& ps, const std::vector<int>& block, Edge stone) {
  BlockPlan plan = plan_block(ps, block, stone);
  std::sort(plan.bottom.begin(), plan.bottom.end());
  std::sort(plan.top.begin(), plan.top.end());
  return {plan.bottom, plan.top};
}

MatchingFamily general_family(const PointSet& ps) {
  if (ps.config != Config::general && ps.config != Config::rposition)
    throw invalid_input("general family requires exact-coordinate points");
  int two_n = ps.size();
  int n = two_n / 2;
  int k = 0;
  while ((2 << k) <= n) ++k;  // floor(log2(n)), n >= 2

  struct Block {
    std::vector<int> indices;
    std::optional<Edge> stone;
  };
  std::vector<Block> blocks;
  {
    std::vector<int> all(two_n);
    for (int i = 0; i < two_n; ++i) all[i] = i;
    blocks.push_back(Block{std::move(all), std::nullopt});
  }

  MatchingFamily family;
  family.method = "general-recursive";
  for (int round = 1; round <= k; ++round) {
    std::vector<Edge> edges;
    std::vector<Block> next;
    for (Block& blk : blocks) {
      if (blk.indices.size() < 4)
        throw construction_error("recursion produced an unsplittable block");
      BlockPlan plan = plan_block(ps, blk.indices, blk.stone);

      SplitRecord rec;
      rec.round = round;
      rec.block = blk.indices;
      rec.carried_stone = blk.stone;
      rec.low = plan.bottom;
      rec.high = plan.top;
      std::sort(rec.low.begin(), rec.low.end());
      std::sort(rec.high.begin(), rec.high.end());
      family.splits.push_back(std::move(rec));

      std::vector<int> s1 = plan.bottom;
      if (plan.new_stone) {
        std::erase(s1, plan.new_stone->a);
        std::erase(s1, plan.new_stone->b);
      }
      std::vector<Edge> cross = cross_match(ps, s1, plan.top, plan.dir);
      edges.insert(edges.end(), cross.begin(), cross.end());
      if (plan.new_stone) {
        edges.push_back(*plan.new_stone);
        family.stones.push_back(*plan.new_stone);
      }

      Block bottom{plan.bottom, plan.new_stone};  // new stone in the larger
      Block top{plan.top, blk.stone};             // half; a carried stone
      std::sort(bottom.indices.begin(), bottom.indices.end());
      std::sort(top.indices.begin(), top.indices.end());
      next.push_back(std::move(bottom));          // stays in the smaller one
      next.push_back(std::move(top));
    }
    std::sort(next.begin(), next.end(), [](const Block& a, const Block& b) {
      return a.indices.front() < b.indices.front();
    });
    blocks = std::move(next);
    family.matchings.push_back(make_matching(std::move(edges)));
  }
  return family;
}

MatchingFamily prism_family(const PointSet& ps) {
  int two_n = ps.size();
  if (two_n < 8 || two_n % 4 != 0)
    throw invalid_input("prism family needs size >= 8 divisible by 4");
  int cycle = two_n / 2;
  std::vector<int> hull = convex_hull(ps);
  std::vector<int> expect(cycle);
  for (int i = 0; i < cycle; ++i) expect[i] = i;
  if (hull != expect)
    throw invalid_input(
        "prism family expects the outer cycle 0..n'-1 as the hull, the inner "
        "cycle nested after it");

  MatchingFamily family;
  family.method = "prism";
  std::vector<Edge> spokes, even, odd;
  for (int i = 0; i < cycle; ++i) {
    spokes.emplace_back(i, cycle + i);
    Edge outer(i, (i + 1) % cycle);
    Edge inner(cycle + i, cycle + (i + 1) % cycle);
    if (i % 2 == 0) {
      even.push_back(outer);
      even.push_back(inner);
    } else {
      odd.push_back(outer);
      odd.push_back(inner);
    }
  }
  family.matchings.push_back(make_matching(std::move(spokes)));
  family.matchings.push_back(make_matching(std::move(even)));
  family.matchings.push_back(make_matching(std::move(odd)));
  return family;
}

}  // namespace geomatch
