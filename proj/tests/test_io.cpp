#include <doctest.h>

#include "geomatch/configurations.hpp"
#include "geomatch/constructions.hpp"
#include "geomatch/io.hpp"
#include "geomatch/oracle.hpp"
#include "geomatch/render.hpp"

using namespace geomatch;

TEST_CASE("point sets round-trip through JSON") {
  for (auto make : {+[] { return gen_convex(8); }, +[] { return gen_wheel(10); },
                    +[] { return gen_general(8, 4); },
                    +[] { return gen_prism(8); }}) {
    PointSet ps = make();
    std::string text = point_set_to_json(ps);
    PointSet back = point_set_from_json(text);
    CHECK(back.config == ps.config);
    CHECK(back.points == ps.points);
    CHECK(back.center_index == ps.center_index);
    CHECK(point_set_to_json(back) == text);
  }
}

TEST_CASE("labels permute points into canonical order on load") {
  std::string text = R"({
    "config": "general",
    "n2": 4,
    "points": [[0,0],[10,1],[11,12],[1,10]],
    "labels": [1,0,2,3]
  })";
  PointSet ps = point_set_from_json(text);
  CHECK(ps.points[0] == Point{10, 1});
  CHECK(ps.points[1] == Point{0, 0});

  std::string bad = R"({
    "config": "general",
    "n2": 4,
    "points": [[0,0],[10,1],[11,12],[1,10]],
    "labels": [0,0,2,3]
  })";
  CHECK_THROWS_AS(point_set_from_json(bad), invalid_input);
}

TEST_CASE("families round-trip and stones re-attach") {
  PointSet ps = gen_general(12, 6);
  MatchingFamily family = general_family(ps);
  std::string text = family_to_json(family);
  MatchingFamily back = family_from_json(text);
  CHECK(back.method == family.method);
  REQUIRE(back.size() == family.size());
  for (int i = 0; i < family.size(); ++i)
    CHECK(back.matchings[i].edges == family.matchings[i].edges);
  CHECK(back.stones == family.stones);
  CHECK(family_to_json(back) == text);
}

TEST_CASE("packing results serialize with witnesses inline") {
  PointSet ps = gen_convex(6);
  PackingResult r = max_packing(ps, PackingConstraint::none, 4, true);
  std::string text = packing_to_json(r);
  CHECK(text.find("\"constraint\": \"none\"") != std::string::npos);
  CHECK(text.find("\"max_size\": 3") != std::string::npos);
  CHECK(text.find("\"exhaustive\": true") != std::string::npos);
}

TEST_CASE("same seed yields byte-identical serializations") {
  CHECK(point_set_to_json(gen_general(16, 7)) ==
        point_set_to_json(gen_general(16, 7)));
  PointSet ps = gen_general(16, 7);
  CHECK(family_to_json(general_family(ps)) ==
        family_to_json(general_family(ps)));
}

TEST_CASE("digest is stable") {
  CHECK(digest_hex("") == "cbf29ce484222325");
  CHECK(digest_hex("geomatch") != digest_hex("geomatcg"));
}

TEST_CASE("svg renderer is deterministic and complete") {
  PointSet ps = gen_wheel(14);
  MatchingFamily family = wheel_family_b2(ps);
  std::string svg = render_svg(ps, family);
  CHECK(svg == render_svg(ps, family));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find(">x<") != std::string::npos);   // center label
  CHECK(svg.find(">v12<") != std::string::npos);
  // 28 edges drawn.
  std::size_t lines = 0, pos = 0;
  while ((pos = svg.find("<line", pos)) != std::string::npos) {
    ++lines;
    pos += 5;
  }
  CHECK(lines == 28);

  MatchingFamily empty;
  std::string dots = render_svg(ps, empty);
  CHECK(dots.find("<line") == std::string::npos);
  CHECK(dots.find("<circle") != std::string::npos);
}
