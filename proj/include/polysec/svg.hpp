#pragma once

#include <string>

#include "polysec/polygon.hpp"

namespace polysec {

struct SvgOptions {
  // Heptagons only: draw the seven standardization lines, clipped to the
  // view box. Crossing lines get class "std-line crossing", the others
  // "std-line noncrossing".
  bool std_lines = false;
  bool labels = false;
};

// Standalone SVG document. Coordinates are converted to double for drawing
// only.
std::string render_svg(const Polygon& p, const SvgOptions& opts = {});

}  // namespace polysec
