#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geomatch/constructions.hpp"
#include "geomatch/pointset.hpp"

namespace geomatch {

// Union of an edge-disjoint family: simple adjacency over point indices with
// each edge attributed to the matching that contributed it.
struct GeomGraph {
  const PointSet* ps = nullptr;
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::map<Edge, int> owner;

  bool has_edge(int a, int b) const;
  int edge_count() const { return static_cast<int>(owner.size()); }
  std::vector<Edge> edges() const;
};

GeomGraph union_graph(const MatchingFamily& family, const PointSet& ps);

bool is_perfect_matching(const Matching& m, const PointSet& ps);

// First crossing pair, if any, under the point set's predicate backend.
std::optional<std::pair<Edge, Edge>> find_crossing(const Matching& m,
                                                   const PointSet& ps);
bool is_noncrossing(const Matching& m, const PointSet& ps);

std::optional<Edge> find_shared_edge(const MatchingFamily& family);
bool family_edge_disjoint(const MatchingFamily& family);

std::optional<std::array<int, 3>> find_triangle(const GeomGraph& g);
bool is_triangle_free(const GeomGraph& g);

// The two maximality notions the packing results invoke: the Turan extremal
// count n^2 on 2n vertices, and abstract maximality (every absent edge closes
// a triangle).
struct MaximalityReport {
  bool turan_count = false;
  bool abstract_maximal = false;
  int edges = 0;

  bool both() const { return turan_count && abstract_maximal; }
};
MaximalityReport is_maximal_triangle_free(const GeomGraph& g);

int count_boundary_edges(const Matching& m, const PointSet& ps);

// Wheel analogues of p-parallel for odd n, relative to hull edge (i, i+1):
// p1 uses k+l = 2i+1 (mod 2n) on the low half, p2 uses k+l = 2i+1 (mod 2n-1)
// on the high half.
bool is_p1_parallel(Edge e, Edge boundary, int n);
bool is_p2_parallel(Edge e, Edge boundary, int n);

// Circle indices adjacent to the wheel center, sorted.
std::vector<int> radial_edges(const GeomGraph& g);

// True iff the radial indices form one cyclically consecutive run mod 2n-1.
bool radial_consecutive(const GeomGraph& g);

// True iff some diagonal (non-boundary) edge of g has the run K strictly on
// one side and every remaining vertex strictly on the other, with its own
// endpoints drawn from one side's population only.
bool exists_separating_diagonal(const GeomGraph& g, int k_start, int k_len);

// No two edges of the union properly cross (the drawing is plane).
bool is_plane_union(const MatchingFamily& family, const PointSet& ps);

// Even-split property of non-crossing perfect matchings: a matching edge with
// both endpoints on the hull must split the remaining points into two even
// halves. Returns a violating edge if one exists.
std::optional<Edge> hull_split_violation(const Matching& m,
                                         const PointSet& ps);

}  // namespace geomatch
