#pragma once

#include <string>
#include <vector>

#include "rodring/enumerate.hpp"

namespace rodring {

struct RenderStyle {
  double cell_size = 24.0;  // SVG user units per grid cell
  double stroke_width = 1.0;
  std::string monomer_fill = "white";
  std::string dimer_fill = "red";
  std::string trimer_fill = "lightsteelblue";
  std::string hole_fill = "gray";
  int columns = 8;  // tilings per catalog row
};

// Unicode box-drawing picture of one tiling: every tile is drawn as its
// outline, so a dimer reads as a 1x2 box with no dividing wall; the interior
// hole stays blank. Deterministic; lines are right-trimmed and '\n'-joined
// with a trailing newline.
std::string render_tiling_ascii(const GeometricTiling& tiling);

// An SVG catalog: one <g> element per tiling (and <g> is used for nothing
// else), laid out left-to-right, style.columns per row. Tiles are rects
// filled by kind, the interior hole gets hole_fill, untiled outside stays
// the page background. Throws std::invalid_argument on an empty catalog or
// mixed border specs. Byte-deterministic for equal inputs.
std::string render_catalog_svg(const std::vector<GeometricTiling>& tilings,
                               const RenderStyle& style = {});

}  // namespace rodring
