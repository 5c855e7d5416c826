#include "geomatch/oracle.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <cstdlib>

#include "geomatch/configurations.hpp"
#include "geomatch/verification.hpp"

namespace geomatch {

namespace {

constexpr int kHardCap = 32;            // bitset sizing below
using EdgeMask = std::bitset<512>;      // C(32,2) = 496 possible edges
using VertexMask = std::uint64_t;

struct EdgeTable {
  int m = 0;
  std::vector<Edge> edges;                 // id -> edge
  std::vector<std::vector<int>> id;        // (a,b) -> id
  std::vector<EdgeMask> crosses;           // id -> ids it properly crosses

  explicit EdgeTable(const PointSet& ps) : m(ps.size()) {
    id.assign(m, std::vector<int>(m, -1));
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        id[a][b] = static_cast<int>(edges.size());
        edges.emplace_back(a, b);
      }
    crosses.assign(edges.size(), {});
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        Edge e = edges[i], f = edges[j];
        if (e.contains(f.a) || e.contains(f.b)) continue;
        if (edges_cross(e, f, ps)) {
          crosses[i].set(j);
          crosses[j].set(i);
        }
      }
  }

  int eid(Edge e) const { return id[e.a][e.b]; }
};

void guard_size(const PointSet& ps, int limit) {
  if (limit < 0) limit = oracle_size_limit();
  if (limit > kHardCap) limit = kHardCap;
  if (ps.size() > limit)
    throw size_guard_error(
        "oracle limited to " + std::to_string(limit) + " points (got " +
        std::to_string(ps.size()) +
        "); raise GEOMATCH_SIZE_LIMIT to override");
}

void enumerate_rec(const EdgeTable& table, VertexMask used, EdgeMask banned,
                   std::vector<Edge>& chosen, std::vector<Matching>& out) {
  int m = table.m;
  int v = 0;
  while (v < m && (used >> v & 1)) ++v;
  if (v == m) {
    out.push_back(make_matching(chosen));
    return;
  }
  for (int w = v + 1; w < m; ++w) {
    if (used >> w & 1) continue;
    int e = table.id[v][w];
    if (banned.test(e)) continue;
    chosen.emplace_back(v, w);
    enumerate_rec(table, used | (VertexMask{1} << v) | (VertexMask{1} << w),
                  banned | table.crosses[e], chosen, out);
    chosen.pop_back();
  }
}

struct PackedMatching {
  EdgeMask mask;
  EdgeMask cross_mask;
  int boundary_edges = 0;
};

struct PackingSearch {
  const EdgeTable& table;
  const std::vector<Matching>& ms;
  std::vector<PackedMatching> packed;
  PackingConstraint constraint;
  int witness_cap;
  bool exhaustive;
  int m;

  int best = 0;
  bool truncated = false;
  std::vector<std::vector<int>> winners;

  PackingSearch(const EdgeTable& t, const std::vector<Matching>& matchings,
                const PointSet& ps, PackingConstraint c, int cap, bool exh)
      : table(t), ms(matchings), constraint(c), witness_cap(cap),
        exhaustive(exh), m(ps.size()) {
    packed.reserve(ms.size());
    for (const Matching& mt : ms) {
      PackedMatching pm;
      for (Edge e : mt.edges) {
        int id = table.eid(e);
        pm.mask.set(id);
        pm.cross_mask |= table.crosses[id];
      }
      packed.push_back(std::move(pm));
    }
  }

  // A matching joins the family only if it is edge-new and the union stays
  // within the constraint. A triangle can use at most one edge of the new
  // matching (its edges are vertex-disjoint), so checking each new edge
  // against the existing adjacency is complete.
  bool compatible(int idx, const EdgeMask& used,
                  const std::array<VertexMask, kHardCap>& adj,
                  const EdgeMask& union_cross) const {
    const PackedMatching& pm = packed[idx];
    if ((pm.mask & used).any()) return false;
    if (constraint == PackingConstraint::none) return true;
    if (constraint == PackingConstraint::plane_triangle_free_union &&
        (pm.mask & union_cross).any())
      return false;
    for (Edge e : ms[idx].edges)
      if (adj[e.a] & adj[e.b]) return false;
    return true;
  }

  void record(const std::vector<int>& chosen) {
    int size = static_cast<int>(chosen.size());
    if (size > best) {
      best = size;
      winners.clear();
      truncated = false;
    }
    if (size == best && size > 0) {
      if (exhaustive || static_cast<int>(winners.size()) < witness_cap)
        winners.push_back(chosen);
      else
        truncated = true;
    }
  }

  void run(std::size_t from, std::vector<int>& chosen, const EdgeMask& used,
           const std::array<VertexMask, kHardCap>& adj,
           const EdgeMask& union_cross) {
    record(chosen);
    for (std::size_t i = from; i < ms.size(); ++i) {
      // Even taking every remaining matching cannot reach the best.
      if (static_cast<int>(chosen.size() + (ms.size() - i)) < best) break;
      if (!compatible(static_cast<int>(i), used, adj, union_cross)) continue;
      std::array<VertexMask, kHardCap> next_adj = adj;
      for (Edge e : ms[i].edges) {
        next_adj[e.a] |= VertexMask{1} << e.b;
        next_adj[e.b] |= VertexMask{1} << e.a;
      }
      chosen.push_back(static_cast<int>(i));
      run(i + 1, chosen, used | packed[i].mask, next_adj,
          union_cross | packed[i].cross_mask);
      chosen.pop_back();
    }
  }
};

}  // namespace

std::string to_string(PackingConstraint c) {
  switch (c) {
    case PackingConstraint::none:
      return "none";
    case PackingConstraint::triangle_free_union:
      return "trianglefree";
    case PackingConstraint::plane_triangle_free_union:
      return "plane-trianglefree";
  }
  return "none";
}

PackingConstraint constraint_from_string(const std::string& s) {
  if (s == "none") return PackingConstraint::none;
  if (s == "trianglefree") return PackingConstraint::triangle_free_union;
  if (s == "plane-trianglefree")
    return PackingConstraint::plane_triangle_free_union;
  throw invalid_input("unknown packing constraint: " + s);
}

int oracle_size_limit() {
  if (const char* env = std::getenv("GEOMATCH_SIZE_LIMIT")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 16;
}

std::vector<Matching> enumerate_ncpms(const PointSet& ps, int size_limit) {
  guard_size(ps, size_limit);
  EdgeTable table(ps);
  std::vector<Matching> out;
  std::vector<Edge> chosen;
  chosen.reserve(ps.size() / 2);
  enumerate_rec(table, 0, {}, chosen, out);
  return out;
}

PackingResult max_packing(const PointSet& ps, PackingConstraint constraint,
                          int witness_cap, bool exhaustive, int size_limit) {
  guard_size(ps, size_limit);
  EdgeTable table(ps);
  std::vector<Matching> ms;
  {
    std::vector<Edge> chosen;
    enumerate_rec(table, 0, {}, chosen, ms);
  }
  PackingSearch search(table, ms, ps, constraint, witness_cap, exhaustive);
  std::vector<int> chosen;
  std::array<VertexMask, kHardCap> adj{};
  search.run(0, chosen, {}, adj, {});

  PackingResult result;
  result.constraint = constraint;
  result.max_size = search.best;
  result.witness_cap = witness_cap;
  result.exhaustive = !search.truncated;
  for (const std::vector<int>& family : search.winners) {
    MatchingFamily mf;
    mf.method = "oracle-packing";
    for (int idx : family) mf.matchings.push_back(ms[idx]);
    result.witnesses.push_back(std::move(mf));
  }
  return result;
}

bool all_max_packings_union_check(const PointSet& ps, int size_limit) {
  if (ps.config != Config::convex)
    throw invalid_input("union uniqueness check runs on convex sets");
  int n = ps.size() / 2;
  PackingResult r =
      max_packing(ps, PackingConstraint::none, 0, true, size_limit);
  if (r.max_size != n) return false;

  std::vector<Edge> expected;
  for (int a = 0; a < ps.size(); ++a)
    for (int b = a + 1; b < ps.size(); ++b)
      if ((a + b) % 2 == 1) expected.emplace_back(a, b);
  std::sort(expected.begin(), expected.end());

  for (const MatchingFamily& family : r.witnesses) {
    std::vector<Edge> got;
    for (const Matching& mt : family.matchings)
      got.insert(got.end(), mt.edges.begin(), mt.edges.end());
    std::sort(got.begin(), got.end());
    if (got != expected) return false;
  }
  return !r.witnesses.empty();
}

WheelEquivalenceReport wheel_equivalence_check(int n, int size_limit) {
  if (n < 3 || n > 5)
    throw size_guard_error(
        "wheel equivalence enumeration supports n in {3,4,5}");
  PointSet ps = gen_wheel(2 * n);
  EdgeTable table(ps);
  std::vector<Matching> ms;
  {
    guard_size(ps, size_limit);
    std::vector<Edge> chosen;
    enumerate_rec(table, 0, {}, chosen, ms);
  }
  int k = (n + 1) / 2;

  std::vector<PackedMatching> packed(ms.size());
  std::vector<int> boundary_count(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (Edge e : ms[i].edges) packed[i].mask.set(table.eid(e));
    boundary_count[i] = count_boundary_edges(ms[i], ps);
  }

  WheelEquivalenceReport rep;
  rep.n = n;
  rep.asserted = n % 2 == 1;
  rep.holds = true;

  MatchingFamily family;
  std::vector<int> picks;

  auto leaf = [&]() {
    family.matchings.clear();
    for (int idx : picks) family.matchings.push_back(ms[idx]);
    GeomGraph g = union_graph(family, ps);
    if (!is_triangle_free(g)) return;
    ++rep.families;
    bool two_boundary = std::all_of(picks.begin(), picks.end(), [&](int idx) {
      return boundary_count[idx] == 2;
    });
    bool consecutive = radial_consecutive(g);
    if (two_boundary) ++rep.two_boundary_families;
    if (consecutive) ++rep.consecutive_families;
    if (two_boundary != consecutive && rep.holds) {
      rep.holds = false;
      rep.counterexample = "family";
      for (int idx : picks) {
        rep.counterexample += " {";
        for (Edge e : ms[idx].edges) rep.counterexample += to_string(e);
        rep.counterexample += "}";
      }
    }
  };

  // Depth-first over index-increasing edge-disjoint k-subsets.
  auto rec = [&](auto&& self, std::size_t from, EdgeMask used) -> void {
    if (static_cast<int>(picks.size()) == k) {
      leaf();
      return;
    }
    for (std::size_t i = from; i < ms.size(); ++i) {
      if (static_cast<int>(picks.size() + (ms.size() - i)) < k) break;
      if ((packed[i].mask & used).any()) continue;
      picks.push_back(static_cast<int>(i));
      self(self, i + 1, used | packed[i].mask);
      picks.pop_back();
    }
  };
  rec(rec, 0, {});
  return rep;
}

}  // namespace geomatch
