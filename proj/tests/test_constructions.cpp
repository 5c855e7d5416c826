#include <doctest.h>

#include <algorithm>
#include <set>

#include "geomatch/configurations.hpp"
#include "geomatch/constructions.hpp"
#include "geomatch/verification.hpp"

using namespace geomatch;

namespace {

std::vector<Edge> sorted_edges(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<Edge> union_edges(const MatchingFamily& family) {
  std::vector<Edge> all;
  for (const Matching& m : family.matchings)
    all.insert(all.end(), m.edges.begin(), m.edges.end());
  return sorted_edges(std::move(all));
}

// r strictly between the baseline and the line through (a, b), where the
// baseline lies on the negative side of the "up" direction (-l.b, l.a).
bool below_roof(const PointSet& ps, int a, int b, int r, const Line& l) {
  __int128 upx = -l.b, upy = l.a;
  Point va = ps.at(a), vb = ps.at(b);
  __int128 cr = __int128(vb.x - va.x) * upy - __int128(vb.y - va.y) * upx;
  int up_side = cr > 0 ? 1 : (cr < 0 ? -1 : 0);
  return orient(va, vb, ps.at(r)) == -up_side;
}

// Step 3's side condition, checked over every cross pair: the returned pair
// must be the unique one with all other points strictly on the baseline side.
std::pair<int, int> brute_tangent(const PointSet& ps,
                                  const std::vector<int>& s1,
                                  const std::vector<int>& s2, const Line& l) {
  std::vector<std::pair<int, int>> hits;
  for (int a : s1)
    for (int b : s2) {
      bool ok = true;
      for (int r : s1)
        if (r != a && !below_roof(ps, a, b, r, l)) ok = false;
      for (int r : s2)
        if (r != b && !below_roof(ps, a, b, r, l)) ok = false;
      if (ok) hits.emplace_back(a, b);
    }
  REQUIRE(hits.size() == 1);
  return hits.front();
}

}  // namespace

TEST_CASE("convex family lists every congruence class") {
  PointSet ps = gen_convex(12);
  MatchingFamily family = convex_family(ps);
  REQUIRE(family.size() == 6);

  // Class 2i+1 = 3.
  std::vector<Edge> expect = {Edge(1, 2), Edge(0, 3),  Edge(11, 4),
                              Edge(10, 5), Edge(9, 6), Edge(8, 7)};
  CHECK(family.matchings[1].edges == sorted_edges(std::move(expect)));

  CHECK(union_edges(family).size() == 36);  // n^2

  PointSet small = gen_convex(4);
  MatchingFamily f4 = convex_family(small);
  CHECK(f4.matchings[0].edges == std::vector<Edge>{Edge(0, 1), Edge(2, 3)});
  CHECK(f4.matchings[1].edges == std::vector<Edge>{Edge(0, 3), Edge(1, 2)});
}

TEST_CASE("p-parallel congruence") {
  CHECK(is_p_parallel(Edge(0, 3), Edge(1, 2), 12));
  CHECK(is_p_parallel(Edge(1, 2), Edge(1, 2), 12));
  CHECK_FALSE(is_p_parallel(Edge(0, 5), Edge(1, 2), 12));
  CHECK_THROWS_AS(is_p_parallel(Edge(0, 3), Edge(2, 4), 12), invalid_input);
}

TEST_CASE("wheel b=2 families match the reference drawings") {
  PointSet w14 = gen_wheel(14);  // n = 7
  MatchingFamily family = wheel_family_b2(w14);
  REQUIRE(family.size() == 4);  // ceil(7/2)
  std::vector<Edge> reference_n7 = {Edge(0, 13), Edge(1, 6),  Edge(2, 5),
                                    Edge(3, 4),  Edge(7, 12), Edge(8, 11),
                                    Edge(9, 10)};
  CHECK(family.matchings[0].edges == sorted_edges(std::move(reference_n7)));

  // Even n: the formula's duplicate edge collapses under set semantics.
  PointSet w8 = gen_wheel(8);  // n = 4
  MatchingFamily f8 = wheel_family_b2(w8);
  REQUIRE(f8.size() == 2);
  std::vector<Edge> expect = {Edge(0, 7), Edge(1, 4), Edge(2, 3), Edge(5, 6)};
  CHECK(f8.matchings[0].edges == sorted_edges(std::move(expect)));

  // The union's radial edges are exactly v_0..v_{k-1}, consecutive.
  for (int n = 3; n <= 15; ++n) {
    PointSet ps = gen_wheel(2 * n);
    MatchingFamily f = wheel_family_b2(ps);
    REQUIRE(f.size() == (n + 1) / 2);
    std::vector<int> run(f.size());
    for (int i = 0; i < f.size(); ++i) run[i] = i;
    CHECK(radial_edges(union_graph(f, ps)) == run);
  }
}

TEST_CASE("wheel b=3 first matchings match the reference drawings") {
  auto first = [](int n) {
    return wheel_family_b3(gen_wheel(2 * n)).matchings[0].edges;
  };
  CHECK(first(9) == sorted_edges({Edge(0, 17), Edge(8, 9), Edge(7, 10),
                                  Edge(1, 6), Edge(2, 5), Edge(3, 4),
                                  Edge(16, 11), Edge(15, 12), Edge(14, 13)}));
  CHECK(first(8) == sorted_edges({Edge(0, 15), Edge(7, 8), Edge(6, 9),
                                  Edge(5, 10), Edge(1, 4), Edge(2, 3),
                                  Edge(14, 11), Edge(13, 12)}));
  CHECK(first(10) == sorted_edges({Edge(0, 19), Edge(7, 8), Edge(6, 9),
                                   Edge(5, 10), Edge(1, 4), Edge(2, 3),
                                   Edge(18, 11), Edge(17, 12), Edge(16, 13),
                                   Edge(15, 14)}));
  for (int n = 8; n <= 15; ++n)
    CHECK(wheel_family_b3(gen_wheel(2 * n)).size() == (2 * n + 2) / 3 - 1);
  CHECK_THROWS_AS(wheel_family_b3(gen_wheel(14)), invalid_input);  // n = 7
}

TEST_CASE("r-position family verifies and reduces to the convex case") {
  PointSet reference12;
  reference12.config = Config::rposition;
  reference12.points = {{52, -30}, {30, 0},   {26, 15},  {30, 52},
                 {0, 30},   {-15, 26}, {-52, 30}, {-30, 0},
                 {-26, -15}, {-30, -52}, {0, -30}, {15, -26}};
  MatchingFamily family = rposition_family(reference12);
  CHECK(family.size() == 6);
  CHECK(union_edges(family).size() == 36);

  PointSet convex = gen_convex(12);
  PointSet as_rpos = convex;
  as_rpos.config = Config::rposition;
  MatchingFamily a = rposition_family(as_rpos);
  MatchingFamily b = convex_family(convex);
  REQUIRE(a.size() == b.size());
  for (int i = 0; i < a.size(); ++i)
    CHECK(a.matchings[i].edges == b.matchings[i].edges);

  CHECK(rposition_family(gen_r_position(4, 3).first).size() == 2);

  // The wheel relabeling fails the hypothesis, so construction refuses.
  PointSet wheel = gen_wheel(14);
  wheel.config = Config::rposition;
  wheel.center_index = -1;
  CHECK_THROWS_AS(rposition_family(wheel), construction_error);
}

TEST_CASE("find_separating_line splits by exact counts") {
  PointSet ps = gen_general(10, 5);
  std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};

  Separation s = find_separating_line(ps, all, 6, 4);
  CHECK(s.low.size() == 6);
  CHECK(s.high.size() == 4);
  for (int v : s.low) CHECK(s.line.side(ps.at(v)) < 0);
  for (int v : s.high) CHECK(s.line.side(ps.at(v)) > 0);

  std::vector<int> eight(all.begin(), all.begin() + 8);
  Separation s2 = find_separating_line(ps, eight, 4, 4);
  CHECK(s2.low.size() == 4);

  CHECK_THROWS_AS(find_separating_line(ps, all, 4, 4), invalid_input);
}

TEST_CASE("tangent_pair returns the roof bridge") {
  Line l = Line::normalized(1, 0, 5);  // x = 5
  PointSet singles{Config::general, {{0, 0}, {2, 1}, {7, 3}, {9, 9}}, -1};
  auto [u1, u2] = tangent_pair(singles, {0}, {2}, l);
  CHECK(u1 == 0);
  CHECK(u2 == 2);

  // Two vertical strips of two points each: the topmost cross pair wins.
  PointSet strips{Config::general, {{0, 0}, {1, 10}, {10, 1}, {11, 9}}, -1};
  auto got = tangent_pair(strips, {0, 1}, {2, 3}, l);
  auto want = brute_tangent(strips, {0, 1}, {2, 3}, l);
  CHECK(got == want);
  CHECK(got == std::pair{1, 3});

  CHECK_THROWS_AS(tangent_pair(singles, {0, 1}, {}, l), invalid_input);
}

TEST_CASE("tangent_pair agrees with the brute-force side condition") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PointSet ps = gen_general(12, seed);
    std::vector<int> all(12);
    for (int i = 0; i < 12; ++i) all[i] = i;
    Separation s = find_separating_line(ps, all, 6, 6);
    CHECK(tangent_pair(ps, s.low, s.high, s.line) ==
          brute_tangent(ps, s.low, s.high, s.line));
  }
}

TEST_CASE("algorithm_a produces non-crossing perfect matchings") {
  PointSet pair{Config::general, {{0, 0}, {3, 1}, {9, 5}, {1, 7}}, -1};
  Matching two = algorithm_a(pair, {0, 2});
  CHECK(two.edges == std::vector<Edge>{Edge(0, 2)});
  CHECK_FALSE(two.stone.has_value());

  // Four convex points admit exactly two non-crossing pairings; the matcher
  // must return one of them.
  PointSet quad{Config::general, {{0, 0}, {10, 1}, {11, 12}, {1, 10}}, -1};
  std::vector<int> block{0, 1, 2, 3};
  std::set<std::vector<Edge>> noncrossing;
  for (auto& pairing :
       {std::vector<Edge>{Edge(0, 1), Edge(2, 3)},
        std::vector<Edge>{Edge(0, 3), Edge(1, 2)},
        std::vector<Edge>{Edge(0, 2), Edge(1, 3)}}) {
    if (!proper_cross_exact(pairing[0], pairing[1], quad))
      noncrossing.insert(pairing);
  }
  REQUIRE(noncrossing.size() == 2);
  Matching four = algorithm_a(quad, block);
  CHECK(noncrossing.contains(four.edges));

  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    PointSet ps = gen_general(16, seed);
    std::vector<int> all(16);
    for (int i = 0; i < 16; ++i) all[i] = i;
    Matching m = algorithm_a(ps, all);
    CHECK(is_perfect_matching(m, ps));
    CHECK(is_noncrossing(m, ps));
    CHECK_FALSE(hull_split_violation(m, ps).has_value());
  }
}

TEST_CASE("stone_split keeps the stone pair in the smaller even half") {
  PointSet line_ish{Config::general,
                    {{0, 0}, {100, 7}, {200, 1}, {300, 11}, {400, 3},
                     {500, 13}, {600, 2}, {700, 17}},
                    -1};
  validate_point_set(line_ish);
  auto [low, high] = stone_split(line_ish, {0, 1, 2, 3, 4, 5, 6, 7},
                                 Edge(6, 7));
  CHECK(high.size() == 4);  // m/2 = 4 even: equal halves
  CHECK(low.size() == 4);
  CHECK(std::find(high.begin(), high.end(), 6) != high.end());
  CHECK(std::find(high.begin(), high.end(), 7) != high.end());

  auto [low4, high4] = stone_split(line_ish, {0, 1, 4, 6}, Edge(0, 1));
  CHECK(high4.size() == 2);  // the stone pair itself
  CHECK(low4.size() == 2);

  // m = 12: m/2 = 6 is even, so the halves are equal and the stone side
  // keeps six points.
  PointSet twelve = gen_general(12, 9);
  std::vector<int> all12(12);
  for (int i = 0; i < 12; ++i) all12[i] = i;
  std::vector<int> order = all12;
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return twelve.at(i).x < twelve.at(j).x;
  });
  auto [low12, high12] = stone_split(twelve, all12, Edge(order[0], order[1]));
  CHECK(high12.size() == 6);
  CHECK(low12.size() == 6);

  // m = 10: m/2 = 5 is odd, so the stone side shrinks to 4.
  PointSet ten = gen_general(10, 9);
  std::vector<int> all10(10);
  for (int i = 0; i < 10; ++i) all10[i] = i;
  std::vector<int> order10 = all10;
  std::sort(order10.begin(), order10.end(), [&](int i, int j) {
    return ten.at(i).x < ten.at(j).x;
  });
  auto [low10, high10] = stone_split(ten, all10, Edge(order10[0], order10[1]));
  CHECK(high10.size() == 4);
  CHECK(low10.size() == 6);

  CHECK_THROWS_AS(stone_split(line_ish, {0, 1, 2, 3}, Edge(4, 5)),
                  invalid_input);
}

TEST_CASE("general_family produces floor(log2 n) verified matchings") {
  auto run = [](int two_n, std::uint64_t seed, int want_k) {
    PointSet ps = gen_general(two_n, seed);
    MatchingFamily family = general_family(ps);
    REQUIRE(family.size() == want_k);
    // Round one is exactly the divide-and-conquer matcher on the full set.
    std::vector<int> all(two_n);
    for (int i = 0; i < two_n; ++i) all[i] = i;
    CHECK(family.matchings[0].edges == algorithm_a(ps, all).edges);
    CHECK(family_edge_disjoint(family));
    for (const Matching& m : family.matchings) {
      CHECK(is_perfect_matching(m, ps));
      CHECK(is_noncrossing(m, ps));
    }
    CHECK(is_triangle_free(union_graph(family, ps)));
    // Every stone edge appears in exactly one matching.
    for (Edge st : family.stones) {
      int owners = 0;
      for (const Matching& m : family.matchings)
        if (std::binary_search(m.edges.begin(), m.edges.end(), st)) ++owners;
      CHECK(owners == 1);
    }
  };
  run(8, 1, 2);
  run(12, 2, 2);
  run(16, 3, 3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) run(24, seed, 3);
  // Sizes of the form 4j+2 force unequal halves (and stones) along the whole
  // recursion; these exercise stone-carrying blocks that split again.
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    run(10, seed, 2);
    run(14, seed, 2);
    run(18, seed, 3);
    run(20, seed, 3);
  }
}

TEST_CASE("prism family 1-factorizes the prism graph") {
  PointSet ps = gen_prism(8);
  MatchingFamily family = prism_family(ps);
  REQUIRE(family.size() == 3);
  for (const Matching& m : family.matchings) {
    CHECK(m.edges.size() == 4);
    CHECK(is_perfect_matching(m, ps));
    CHECK(is_noncrossing(m, ps));
  }
  CHECK(union_edges(family).size() == 12);  // 3-regular on 8 vertices
  CHECK(is_plane_union(family, ps));
  CHECK(is_triangle_free(union_graph(family, ps)));

  PointSet ps12 = gen_prism(12);
  MatchingFamily f12 = prism_family(ps12);
  CHECK(is_plane_union(f12, ps12));
  CHECK(is_triangle_free(union_graph(f12, ps12)));

  CHECK_THROWS_AS(prism_family(gen_general(10, 1)), invalid_input);
}
