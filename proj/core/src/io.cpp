#include "geomatch/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace geomatch {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json edges_to_json(const std::vector<Edge>& edges) {
  ordered_json arr = ordered_json::array();
  for (Edge e : edges) arr.push_back(ordered_json::array({e.a, e.b}));
  return arr;
}

std::vector<Edge> edges_from_json(const ordered_json& arr) {
  std::vector<Edge> edges;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2)
      throw invalid_input("edge entries must be [a, b] pairs");
    edges.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  return edges;
}

ordered_json parse(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw invalid_input("malformed JSON input");
  return j;
}

}  // namespace

std::string point_set_to_json(const PointSet& ps) {
  ordered_json j;
  j["config"] = to_string(ps.config);
  j["n2"] = ps.size();
  ordered_json pts = ordered_json::array();
  for (const Point& p : ps.points)
    pts.push_back(ordered_json::array({p.x, p.y}));
  j["points"] = std::move(pts);
  if (ps.config == Config::wheel) j["center_index"] = ps.center_index;
  ordered_json labels = ordered_json::array();
  for (int i = 0; i < ps.size(); ++i) labels.push_back(i);
  j["labels"] = std::move(labels);
  return j.dump(2) + "\n";
}

PointSet point_set_from_json(const std::string& text) {
  ordered_json j = parse(text);
  PointSet ps;
  ps.config = config_from_string(j.at("config").get<std::string>());
  int n2 = j.at("n2").get<int>();
  for (const auto& item : j.at("points")) {
    if (!item.is_array() || item.size() != 2)
      throw invalid_input("point entries must be [x, y] pairs");
    ps.points.push_back(
        Point{item[0].get<std::int64_t>(), item[1].get<std::int64_t>()});
  }
  if (ps.size() != n2)
    throw invalid_input("n2 does not match the number of points");
  int center_raw = -1;
  if (ps.config == Config::wheel) center_raw = j.at("center_index").get<int>();

  // Labels may be any permutation; points are canonicalized to label order.
  if (j.contains("labels")) {
    const auto& raw = j.at("labels");
    if (static_cast<int>(raw.size()) != n2)
      throw invalid_input("labels must cover every point");
    std::vector<int> label(n2);
    std::vector<bool> seen(n2, false);
    for (int i = 0; i < n2; ++i) {
      label[i] = raw[i].get<int>();
      if (label[i] < 0 || label[i] >= n2 || seen[label[i]])
        throw invalid_input("labels must be a permutation of 0..n2-1");
      seen[label[i]] = true;
    }
    std::vector<Point> ordered(n2);
    for (int i = 0; i < n2; ++i) ordered[label[i]] = ps.points[i];
    ps.points = std::move(ordered);
    if (center_raw >= 0) center_raw = label[center_raw];
  }
  ps.center_index = ps.config == Config::wheel ? center_raw : -1;
  if (ps.config == Config::wheel && ps.center_index != n2 - 1)
    throw invalid_input("wheel center must carry the last label");
  validate_point_set(ps);
  return ps;
}

std::string family_to_json(const MatchingFamily& family) {
  ordered_json j;
  j["method"] = family.method;
  ordered_json ms = ordered_json::array();
  for (const Matching& m : family.matchings) ms.push_back(edges_to_json(m.edges));
  j["matchings"] = std::move(ms);
  j["stones"] = edges_to_json(family.stones);
  return j.dump(2) + "\n";
}

MatchingFamily family_from_json(const std::string& text) {
  ordered_json j = parse(text);
  MatchingFamily family;
  family.method = j.at("method").get<std::string>();
  for (const auto& m : j.at("matchings"))
    family.matchings.push_back(make_matching(edges_from_json(m)));
  if (j.contains("stones")) family.stones = edges_from_json(j.at("stones"));
  // Re-attach stone flags to the matchings that contain them.
  for (Edge st : family.stones)
    for (Matching& m : family.matchings)
      if (std::binary_search(m.edges.begin(), m.edges.end(), st)) {
        m.stone = st;
        break;
      }
  return family;
}

std::string packing_to_json(const PackingResult& result) {
  ordered_json j;
  j["constraint"] = to_string(result.constraint);
  j["max_size"] = result.max_size;
  j["exhaustive"] = result.exhaustive;
  j["witness_cap"] = result.witness_cap;
  ordered_json families = ordered_json::array();
  for (const MatchingFamily& family : result.witnesses) {
    ordered_json ms = ordered_json::array();
    for (const Matching& m : family.matchings)
      ms.push_back(edges_to_json(m.edges));
    families.push_back(std::move(ms));
  }
  j["witnesses"] = std::move(families);
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw invalid_input("cannot write " + path.string());
  out << text;
}

std::string digest_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace geomatch
