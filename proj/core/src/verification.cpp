#include "geomatch/verification.hpp"

#include <algorithm>

namespace geomatch {

namespace {

void check_edge_range(Edge e, const PointSet& ps) {
  if (e.a < 0 || e.b >= ps.size())
    throw invalid_input("edge index out of range: " + to_string(e));
}

bool is_boundary_label_pair(Edge e, int m) {
  return e.b == e.a + 1 || (e.a == 0 && e.b == m - 1);
}

}  // namespace

bool GeomGraph::has_edge(int a, int b) const {
  if (a == b) return false;
  return owner.contains(Edge(a, b));
}

std::vector<Edge> GeomGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(owner.size());
  for (const auto& [e, _] : owner) out.push_back(e);
  return out;
}

GeomGraph union_graph(const MatchingFamily& family, const PointSet& ps) {
  GeomGraph g;
  g.ps = &ps;
  g.n = ps.size();
  g.adj.assign(g.n, {});
  for (int i = 0; i < family.size(); ++i) {
    for (Edge e : family.matchings[i].edges) {
      check_edge_range(e, ps);
      if (g.owner.contains(e))
        throw invalid_input("family is not edge-disjoint at " + to_string(e));
      g.owner.emplace(e, i);
      g.adj[e.a].push_back(e.b);
      g.adj[e.b].push_back(e.a);
    }
  }
  for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

bool is_perfect_matching(const Matching& m, const PointSet& ps) {
  std::vector<int> degree(ps.size(), 0);
  for (Edge e : m.edges) {
    if (e.a < 0 || e.b >= ps.size()) return false;
    ++degree[e.a];
    ++degree[e.b];
  }
  return std::all_of(degree.begin(), degree.end(),
                     [](int d) { return d == 1; });
}

std::optional<std::pair<Edge, Edge>> find_crossing(const Matching& m,
                                                   const PointSet& ps) {
  for (std::size_t i = 0; i < m.edges.size(); ++i)
    for (std::size_t j = i + 1; j < m.edges.size(); ++j)
      if (edges_cross(m.edges[i], m.edges[j], ps))
        return std::pair{m.edges[i], m.edges[j]};
  return std::nullopt;
}

bool is_noncrossing(const Matching& m, const PointSet& ps) {
  return !find_crossing(m, ps).has_value();
}

std::optional<Edge> find_shared_edge(const MatchingFamily& family) {
  std::vector<Edge> seen;
  for (const Matching& m : family.matchings)
    seen.insert(seen.end(), m.edges.begin(), m.edges.end());
  std::sort(seen.begin(), seen.end());
  auto dup = std::adjacent_find(seen.begin(), seen.end());
  if (dup != seen.end()) return *dup;
  return std::nullopt;
}

bool family_edge_disjoint(const MatchingFamily& family) {
  return !find_shared_edge(family).has_value();
}

std::optional<std::array<int, 3>> find_triangle(const GeomGraph& g) {
  for (const auto& [e, _] : g.owner) {
    const std::vector<int>& na = g.adj[e.a];
    const std::vector<int>& nb = g.adj[e.b];
    std::size_t i = 0, j = 0;
    while (i < na.size() && j < nb.size()) {
      if (na[i] == nb[j]) return std::array{e.a, e.b, na[i]};
      if (na[i] < nb[j]) ++i;
      else ++j;
    }
  }
  return std::nullopt;
}

bool is_triangle_free(const GeomGraph& g) {
  return !find_triangle(g).has_value();
}

MaximalityReport is_maximal_triangle_free(const GeomGraph& g) {
  if (!is_triangle_free(g))
    throw invalid_input("maximality report requires a triangle-free graph");
  MaximalityReport rep;
  rep.edges = g.edge_count();
  int n = g.n / 2;
  rep.turan_count = rep.edges == n * n;
  rep.abstract_maximal = true;
  for (int u = 0; u < g.n && rep.abstract_maximal; ++u)
    for (int v = u + 1; v < g.n && rep.abstract_maximal; ++v) {
      if (g.has_edge(u, v)) continue;
      const std::vector<int>& nu = g.adj[u];
      const std::vector<int>& nv = g.adj[v];
      bool common = false;
      std::size_t i = 0, j = 0;
      while (i < nu.size() && j < nv.size()) {
        if (nu[i] == nv[j]) {
          common = true;
          break;
        }
        if (nu[i] < nv[j]) ++i;
        else ++j;
      }
      if (!common) rep.abstract_maximal = false;
    }
  return rep;
}

int count_boundary_edges(const Matching& m, const PointSet& ps) {
  std::vector<Edge> boundary = boundary_edges_of(ps);
  int count = 0;
  for (Edge e : m.edges)
    if (std::binary_search(boundary.begin(), boundary.end(), e)) ++count;
  return count;
}

bool is_p1_parallel(Edge e, Edge boundary, int n) {
  if (n % 2 == 0) throw invalid_input("p1-parallel is defined for odd n");
  int m = 2 * n - 1;
  if (!is_boundary_label_pair(boundary, m))
    throw invalid_input("p1-parallel reference must be a circle boundary edge");
  int i = (boundary.a == 0 && boundary.b == m - 1) ? m - 1 : boundary.a;
  bool in_p1 = i >= (n - 1) / 2 && i <= n - 1;
  bool in_p2 = i >= 3 * (n - 1) / 2 && i <= 2 * n - 2;
  if (!in_p1 && !in_p2)
    throw invalid_input("boundary index outside both parallel ranges");
  if (!in_p1) return false;
  return (e.a + e.b) <= 2 * n - 1 && (e.a + e.b) % (2 * n) == (2 * i + 1) % (2 * n);
}

bool is_p2_parallel(Edge e, Edge boundary, int n) {
  if (n % 2 == 0) throw invalid_input("p2-parallel is defined for odd n");
  int m = 2 * n - 1;
  if (!is_boundary_label_pair(boundary, m))
    throw invalid_input("p2-parallel reference must be a circle boundary edge");
  int i = (boundary.a == 0 && boundary.b == m - 1) ? m - 1 : boundary.a;
  bool in_p1 = i >= (n - 1) / 2 && i <= n - 1;
  bool in_p2 = i >= 3 * (n - 1) / 2 && i <= 2 * n - 2;
  if (!in_p1 && !in_p2)
    throw invalid_input("boundary index outside both parallel ranges");
  if (!in_p2) return false;
  return (e.a + e.b) % m == (2 * i + 1) % m;
}

std::vector<int> radial_edges(const GeomGraph& g) {
  if (!g.ps || g.ps->config != Config::wheel)
    throw invalid_input("radial edges require a wheel point set");
  return g.adj[g.ps->center_index];
}

bool radial_consecutive(const GeomGraph& g) {
  std::vector<int> radials = radial_edges(g);
  int m = g.ps->circle_count();
  if (static_cast<int>(radials.size()) <= 1) return true;
  int gaps = 0;
  for (std::size_t i = 0; i < radials.size(); ++i) {
    int cur = radials[i];
    int nxt = radials[(i + 1) % radials.size()];
    if ((nxt - cur + m) % m != 1) ++gaps;
  }
  return gaps <= 1;
}

bool exists_separating_diagonal(const GeomGraph& g, int k_start, int k_len) {
  if (!g.ps || g.ps->config != Config::convex)
    throw invalid_input("separating diagonals are defined on convex unions");
  int m = g.n;
  if (k_len < 1 || k_len > m - 1)
    throw invalid_input("run length must leave at least one other vertex");
  std::vector<bool> in_k(m, false);
  for (int t = 0; t < k_len; ++t) in_k[(k_start + t) % m] = true;

  for (const auto& [e, _] : g.owner) {
    if (is_boundary_label_pair(e, m)) continue;
    if (in_k[e.a] != in_k[e.b]) continue;  // a straddling edge separates nothing
    bool arc1_all_k = true, arc1_all_rest = true;
    for (int v = (e.a + 1) % m; v != e.b; v = (v + 1) % m)
      (in_k[v] ? arc1_all_rest : arc1_all_k) = false;
    bool arc2_all_k = true, arc2_all_rest = true;
    for (int v = (e.b + 1) % m; v != e.a; v = (v + 1) % m)
      (in_k[v] ? arc2_all_rest : arc2_all_k) = false;
    if ((arc1_all_k && arc2_all_rest) || (arc1_all_rest && arc2_all_k))
      return true;
  }
  return false;
}

bool is_plane_union(const MatchingFamily& family, const PointSet& ps) {
  if (!family_edge_disjoint(family))
    throw invalid_input("plane check requires an edge-disjoint family");
  std::vector<Edge> all;
  for (const Matching& m : family.matchings)
    all.insert(all.end(), m.edges.begin(), m.edges.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (edges_cross(all[i], all[j], ps)) return false;
  return true;
}

std::optional<Edge> hull_split_violation(const Matching& m,
                                         const PointSet& ps) {
  std::vector<int> hull = convex_hull(ps);
  std::vector<bool> on_hull(ps.size(), false);
  for (int v : hull) on_hull[v] = true;
  for (Edge e : m.edges) {
    if (!on_hull[e.a] || !on_hull[e.b]) continue;
    int pos = 0, neg = 0;
    for (int v = 0; v < ps.size(); ++v) {
      if (e.contains(v)) continue;
      int s = orient(ps.at(e.a), ps.at(e.b), ps.at(v));
      if (s == 0)
        throw general_position_error("collinear point on matching edge " +
                                     to_string(e));
      (s > 0 ? pos : neg)++;
    }
    if (pos % 2 != 0 || neg % 2 != 0) return e;
  }
  return std::nullopt;
}

}  // namespace geomatch
