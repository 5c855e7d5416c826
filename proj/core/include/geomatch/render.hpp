#pragma once

#include <string>

#include "geomatch/constructions.hpp"
#include "geomatch/pointset.hpp"

namespace geomatch {

// Deterministic SVG drawing: labeled vertices, one stroke color per matching
// from a fixed 12-color cycle, stone edges dashed.
std::string render_svg(const PointSet& ps, const MatchingFamily& family);

}  // namespace geomatch
