#include "geomatch/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace geomatch {

namespace {

constexpr std::array<const char*, 12> kPalette = {
    "red",    "blue",  "green",  "orange", "gold",    "purple",
    "brown",  "black", "teal",   "magenta", "gray",   "olive"};

}  // namespace

std::string render_svg(const PointSet& ps, const MatchingFamily& family) {
  std::int64_t min_x = ps.at(0).x, max_x = ps.at(0).x;
  std::int64_t min_y = ps.at(0).y, max_y = ps.at(0).y;
  for (const Point& p : ps.points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  std::int64_t extent = std::max(max_x - min_x, max_y - min_y);
  std::int64_t margin = std::max<std::int64_t>(extent / 10, 10);
  std::int64_t stroke = std::max<std::int64_t>(extent / 200, 1);
  std::int64_t dot = std::max<std::int64_t>(extent / 80, 2);
  std::int64_t font = std::max<std::int64_t>(extent / 25, 8);

  // Flip y so the drawing matches mathematical orientation.
  auto fy = [&](std::int64_t y) { return max_y + min_y - y; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << min_x - margin << " " << min_y - margin << " "
      << (max_x - min_x) + 2 * margin << " " << (max_y - min_y) + 2 * margin
      << "\">\n";

  for (std::size_t i = 0; i < family.matchings.size(); ++i) {
    const char* color = kPalette[i % kPalette.size()];
    for (Edge e : family.matchings[i].edges) {
      bool is_stone = family.matchings[i].stone &&
                      *family.matchings[i].stone == e;
      svg << "  <line x1=\"" << ps.at(e.a).x << "\" y1=\"" << fy(ps.at(e.a).y)
          << "\" x2=\"" << ps.at(e.b).x << "\" y2=\"" << fy(ps.at(e.b).y)
          << "\" stroke=\"" << color << "\" stroke-width=\"" << stroke << "\"";
      if (is_stone) svg << " stroke-dasharray=\"" << 4 * stroke << "\"";
      svg << "/>\n";
    }
  }

  for (int v = 0; v < ps.size(); ++v) {
    svg << "  <circle cx=\"" << ps.at(v).x << "\" cy=\"" << fy(ps.at(v).y)
        << "\" r=\"" << dot << "\" fill=\"black\"/>\n";
    std::string label =
        v == ps.center_index ? "x" : "v" + std::to_string(v);
    svg << "  <text x=\"" << ps.at(v).x + dot << "\" y=\""
        << fy(ps.at(v).y) - dot << "\" font-size=\"" << font << "\">" << label
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace geomatch
