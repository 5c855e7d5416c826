// Command-line surface: gen / construct / verify / pack / render pipelines
// over the PointSet and MatchingFamily JSON formats.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "geomatch/configurations.hpp"
#include "geomatch/constructions.hpp"
#include "geomatch/io.hpp"
#include "geomatch/oracle.hpp"
#include "geomatch/render.hpp"
#include "geomatch/verification.hpp"

namespace {

using geomatch::Config;
using geomatch::MatchingFamily;
using geomatch::PointSet;
using ordered_json = nlohmann::ordered_json;

PointSet generate(const std::string& config, int size, std::uint64_t seed) {
  if (config == "convex") return geomatch::gen_convex(size);
  if (config == "wheel") return geomatch::gen_wheel(size);
  if (config == "rposition") return geomatch::gen_r_position(size, seed).first;
  if (config == "general") return geomatch::gen_general(size, seed);
  if (config == "prism") return geomatch::gen_prism(size);
  throw geomatch::invalid_input("unknown config: " + config);
}

MatchingFamily construct(const std::string& method, const PointSet& ps) {
  if (method == "convex-parallel") return geomatch::convex_family(ps);
  if (method == "wheel-b2") return geomatch::wheel_family_b2(ps);
  if (method == "wheel-b3") return geomatch::wheel_family_b3(ps);
  if (method == "rposition-parallel") return geomatch::rposition_family(ps);
  if (method == "general-recursive") return geomatch::general_family(ps);
  if (method == "prism") return geomatch::prism_family(ps);
  throw geomatch::invalid_input("unknown method: " + method);
}

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;
};

std::vector<CheckResult> run_checks(const PointSet& ps,
                                    const MatchingFamily& family,
                                    const std::vector<std::string>& names) {
  std::vector<CheckResult> results;
  bool disjoint = geomatch::family_edge_disjoint(family);
  std::optional<geomatch::GeomGraph> graph;
  if (disjoint) graph = geomatch::union_graph(family, ps);

  for (const std::string& name : names) {
    CheckResult r{name, true, ""};
    if (name == "perfect") {
      for (std::size_t i = 0; i < family.matchings.size() && r.pass; ++i)
        if (!geomatch::is_perfect_matching(family.matchings[i], ps)) {
          r.pass = false;
          r.witness = "matching " + std::to_string(i) + " is not perfect";
        }
    } else if (name == "noncrossing") {
      for (std::size_t i = 0; i < family.matchings.size() && r.pass; ++i)
        if (auto cr = geomatch::find_crossing(family.matchings[i], ps)) {
          r.pass = false;
          r.witness = "matching " + std::to_string(i) + " crosses at " +
                      to_string(cr->first) + "x" + to_string(cr->second);
        }
    } else if (name == "edge-disjoint") {
      r.pass = disjoint;
      if (!r.pass)
        r.witness = "shared edge " +
                    to_string(*geomatch::find_shared_edge(family));
    } else if (name == "triangle-free") {
      if (!graph) {
        r.pass = false;
        r.witness = "family is not edge-disjoint";
      } else if (auto tri = geomatch::find_triangle(*graph)) {
        r.pass = false;
        r.witness = "triangle " + std::to_string((*tri)[0]) + "," +
                    std::to_string((*tri)[1]) + "," +
                    std::to_string((*tri)[2]);
      }
    } else if (name == "maximal") {
      if (!graph) {
        r.pass = false;
        r.witness = "family is not edge-disjoint";
      } else if (!geomatch::is_triangle_free(*graph)) {
        r.pass = false;
        r.witness = "union is not triangle-free";
      } else {
        auto rep = geomatch::is_maximal_triangle_free(*graph);
        r.pass = rep.both();
        if (!r.pass)
          r.witness = "turan=" + std::to_string(rep.turan_count) +
                      " abstract=" + std::to_string(rep.abstract_maximal) +
                      " edges=" + std::to_string(rep.edges);
      }
    } else if (name == "plane") {
      r.pass = geomatch::is_plane_union(family, ps);
      if (!r.pass) r.witness = "two union edges properly cross";
    } else if (name.rfind("boundary-count=", 0) == 0) {
      int want = std::stoi(name.substr(15));
      for (std::size_t i = 0; i < family.matchings.size() && r.pass; ++i) {
        int got = geomatch::count_boundary_edges(family.matchings[i], ps);
        if (got != want) {
          r.pass = false;
          r.witness = "matching " + std::to_string(i) + " has " +
                      std::to_string(got) + " boundary edges";
        }
      }
    } else if (name == "radial-consecutive") {
      if (!graph) {
        r.pass = false;
        r.witness = "family is not edge-disjoint";
      } else {
        r.pass = geomatch::radial_consecutive(*graph);
        if (!r.pass) r.witness = "radial vertices are not consecutive";
      }
    } else if (name == "even-split") {
      for (std::size_t i = 0; i < family.matchings.size() && r.pass; ++i)
        if (auto bad =
                geomatch::hull_split_violation(family.matchings[i], ps)) {
          r.pass = false;
          r.witness = "hull edge " + to_string(*bad) +
                      " splits the rest into odd parts";
        }
    } else {
      throw geomatch::invalid_input("unknown check: " + name);
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<std::string> expand_checks(const std::string& list) {
  std::vector<std::string> names;
  std::string token;
  std::istringstream in(list);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    if (token == "all") {
      for (const char* t :
           {"perfect", "noncrossing", "edge-disjoint", "triangle-free",
            "even-split"})
        names.push_back(t);
    } else {
      names.push_back(token);
    }
  }
  if (names.empty()) throw geomatch::invalid_input("no checks selected");
  return names;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-disjoint non-crossing perfect matchings with "
               "triangle-free unions"};
  app.require_subcommand(1);

  std::string config, method, constraint = "none", checks = "all";
  std::string points_path, family_path, out_path;
  int size = 0;
  std::uint64_t seed = 0;
  int witness_cap = 64;
  int size_limit = -1;
  bool exhaustive = false;

  CLI::App* gen = app.add_subcommand("gen", "generate a point configuration");
  gen->add_option("--config", config,
                  "convex|wheel|rposition|general|prism")->required();
  gen->add_option("--size", size, "number of points (2n)")->required();
  gen->add_option("--seed", seed, "seed for randomized configs");
  gen->add_option("--out", out_path, "output PointSet JSON")->required();

  CLI::App* cons = app.add_subcommand("construct",
                                      "build a matching family");
  cons->add_option("--points", points_path, "input PointSet JSON")->required();
  cons->add_option("--method", method,
                   "convex-parallel|wheel-b2|wheel-b3|rposition-parallel|"
                   "general-recursive|prism")->required();
  cons->add_option("--out", out_path, "output family JSON")->required();

  CLI::App* ver = app.add_subcommand("verify", "check family properties");
  ver->add_option("--points", points_path, "input PointSet JSON")->required();
  ver->add_option("--family", family_path, "input family JSON")->required();
  ver->add_option("--checks", checks,
                  "comma list: all,perfect,noncrossing,edge-disjoint,"
                  "triangle-free,maximal,plane,boundary-count=<b>,"
                  "radial-consecutive,even-split");

  CLI::App* pack = app.add_subcommand("pack", "exact packing search");
  pack->add_option("--points", points_path, "input PointSet JSON")->required();
  pack->add_option("--constraint", constraint,
                   "none|trianglefree|plane-trianglefree");
  pack->add_option("--out", out_path, "output PackingResult JSON");
  pack->add_option("--witness-cap", witness_cap, "max stored witnesses");
  pack->add_flag("--exhaustive", exhaustive, "store every optimum family");
  pack->add_option("--size-limit", size_limit,
                   "override the oracle size guard");

  CLI::App* ren = app.add_subcommand("render", "draw a family as SVG");
  ren->add_option("--points", points_path, "input PointSet JSON")->required();
  ren->add_option("--family", family_path, "input family JSON");
  ren->add_option("--out", out_path, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      geomatch::write_text_file(out_path,
                                geomatch::point_set_to_json(generate(
                                    config, size, seed)));
      return 0;
    }
    if (*cons) {
      PointSet ps =
          geomatch::point_set_from_json(geomatch::read_text_file(points_path));
      geomatch::write_text_file(
          out_path, geomatch::family_to_json(construct(method, ps)));
      return 0;
    }
    if (*ver) {
      auto started = std::chrono::steady_clock::now();
      std::string points_text = geomatch::read_text_file(points_path);
      std::string family_text = geomatch::read_text_file(family_path);
      PointSet ps = geomatch::point_set_from_json(points_text);
      MatchingFamily family = geomatch::family_from_json(family_text);
      std::vector<CheckResult> results =
          run_checks(ps, family, expand_checks(checks));

      int edges = 0;
      for (const auto& m : family.matchings)
        edges += static_cast<int>(m.edges.size());
      bool all_pass = true;

      ordered_json report;
      ordered_json echo = ordered_json::array();
      for (int i = 0; i < argc; ++i) echo.push_back(argv[i]);
      report["command"] = std::move(echo);
      report["input_digest"] = geomatch::digest_hex(points_text + family_text);
      ordered_json jchecks = ordered_json::array();
      for (const CheckResult& r : results) {
        ordered_json jr;
        jr["name"] = r.name;
        jr["pass"] = r.pass;
        if (!r.pass) jr["witness"] = r.witness;
        jchecks.push_back(std::move(jr));
        all_pass = all_pass && r.pass;
      }
      report["checks"] = std::move(jchecks);
      report["counters"] = {{"points", ps.size()},
                            {"matchings", family.size()},
                            {"edges", edges}};
      report["wall_ms"] =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - started)
              .count();
      std::cout << report.dump(2) << "\n";
      return all_pass ? 0 : 1;
    }
    if (*pack) {
      PointSet ps =
          geomatch::point_set_from_json(geomatch::read_text_file(points_path));
      geomatch::PackingResult result = geomatch::max_packing(
          ps, geomatch::constraint_from_string(constraint), witness_cap,
          exhaustive, size_limit);
      std::string json = geomatch::packing_to_json(result);
      if (out_path.empty()) std::cout << json;
      else geomatch::write_text_file(out_path, json);
      return 0;
    }
    if (*ren) {
      PointSet ps =
          geomatch::point_set_from_json(geomatch::read_text_file(points_path));
      MatchingFamily family;
      if (!family_path.empty())
        family = geomatch::family_from_json(
            geomatch::read_text_file(family_path));
      geomatch::write_text_file(out_path, geomatch::render_svg(ps, family));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
