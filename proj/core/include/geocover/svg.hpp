#pragma once

// Static SVG drawings of a point set with optional pieces on top.

#include <optional>
#include <string>
#include <vector>

#include "geocover/covers.hpp"
#include "geocover/pointset.hpp"

namespace geocover {

struct SvgOptions {
  int canvas = 800;  // square, in px
  int margin = 40;
  std::optional<bool> labels;  // point ids; default on for n <= 40
  std::string title;
  std::optional<Direction> arrow;  // drawn from the canvas center
};

/// Points (coloured by group when labelled), then every piece as a polyline
/// or a set of segments in its own colour. Coordinates are scaled to fit the
/// canvas with the y axis pointing up.
std::string render_svg(const PointSet& ps, const std::vector<Piece>& pieces, const SvgOptions& opts = {});

}  // namespace geocover
