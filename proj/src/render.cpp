#include "rodring/render.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace rodring {

namespace {

// Box-drawing char for a lattice point, indexed by which of the four
// directions carry an edge: bit 0 up, 1 down, 2 left, 3 right.
const char* const kJunction[16] = {
    " ", "╵", "╷", "│", "╴", "┘", "┐", "┤", "╶", "└", "┌", "├", "─", "┴", "┬", "┼"};

std::string rtrim(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

const std::string& fill_for(const RenderStyle& style, int length) {
  switch (length) {
    case 1: return style.monomer_fill;
    case 2: return style.dimer_fill;
    default: return style.trimer_fill;
  }
}

}  // namespace

std::string render_tiling_ascii(const GeometricTiling& tiling) {
  const int m = tiling.spec.m, n = tiling.spec.n;
  ring_length(tiling.spec);  // validates the border dimensions

  // Which unit edges are drawn: every tile contributes its outline, i.e. the
  // cell edges not shared with another cell of the same tile.
  std::vector<std::vector<char>> h(static_cast<size_t>(m) + 1,
                                   std::vector<char>(static_cast<size_t>(n), 0));
  std::vector<std::vector<char>> v(static_cast<size_t>(m),
                                   std::vector<char>(static_cast<size_t>(n) + 1, 0));
  for (const GeoTile& tile : tiling.tiles) {
    auto mine = [&](int r, int c) {
      return std::find(tile.cells.begin(), tile.cells.end(), Cell{r, c}) != tile.cells.end();
    };
    for (const auto& [r, c] : tile.cells) {
      if (!mine(r - 1, c)) h[static_cast<size_t>(r)][static_cast<size_t>(c)] = 1;
      if (!mine(r + 1, c)) h[static_cast<size_t>(r) + 1][static_cast<size_t>(c)] = 1;
      if (!mine(r, c - 1)) v[static_cast<size_t>(r)][static_cast<size_t>(c)] = 1;
      if (!mine(r, c + 1)) v[static_cast<size_t>(r)][static_cast<size_t>(c) + 1] = 1;
    }
  }

  std::string out;
  for (int r = 0; r <= m; ++r) {
    std::string line;
    for (int c = 0; c <= n; ++c) {
      const bool up = r > 0 && v[static_cast<size_t>(r) - 1][static_cast<size_t>(c)];
      const bool down = r < m && v[static_cast<size_t>(r)][static_cast<size_t>(c)];
      const bool left = c > 0 && h[static_cast<size_t>(r)][static_cast<size_t>(c) - 1];
      const bool right = c < n && h[static_cast<size_t>(r)][static_cast<size_t>(c)];
      line += kJunction[up | down << 1 | left << 2 | right << 3];
      if (c < n) line += h[static_cast<size_t>(r)][static_cast<size_t>(c)] ? "───" : "   ";
    }
    out += rtrim(std::move(line)) + "\n";
    if (r == m) break;
    line.clear();
    for (int c = 0; c <= n; ++c) {
      line += v[static_cast<size_t>(r)][static_cast<size_t>(c)] ? "│" : " ";
      if (c < n) line += "   ";
    }
    out += rtrim(std::move(line)) + "\n";
  }
  return out;
}

std::string render_catalog_svg(const std::vector<GeometricTiling>& tilings,
                               const RenderStyle& style) {
  if (tilings.empty()) throw std::invalid_argument("cannot render an empty catalog");
  if (style.columns < 1 || style.cell_size <= 0 || style.stroke_width < 0) {
    throw std::invalid_argument("bad render style");
  }
  const BorderSpec spec = tilings.front().spec;
  ring_length(spec);
  for (const GeometricTiling& t : tilings) {
    if (!(t.spec == spec)) throw std::invalid_argument("mixed border specs in one catalog");
  }

  const double cs = style.cell_size;
  const double pad = cs / 2.0;
  const int count = static_cast<int>(tilings.size());
  const int cols = std::min(count, style.columns);
  const int rows = (count + style.columns - 1) / style.columns;
  const double tile_w = spec.n * cs, tile_h = spec.m * cs;
  const double width = pad + cols * (tile_w + pad);
  const double height = pad + rows * (tile_h + pad);

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) +
                    "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " +
                    fmt(height) + "\">\n";
  const std::string stroke = "\" stroke=\"black\" stroke-width=\"" + fmt(style.stroke_width) + "\"/>\n";
  for (int i = 0; i < count; ++i) {
    const double ox = pad + (i % style.columns) * (tile_w + pad);
    const double oy = pad + (i / style.columns) * (tile_h + pad);
    svg += "  <g transform=\"translate(" + fmt(ox) + " " + fmt(oy) + ")\">\n";
    if (spec.m > 2 && spec.n > 2) {
      svg += "    <rect x=\"" + fmt(cs) + "\" y=\"" + fmt(cs) + "\" width=\"" +
             fmt((spec.n - 2) * cs) + "\" height=\"" + fmt((spec.m - 2) * cs) + "\" fill=\"" +
             style.hole_fill + "\" stroke=\"none\"/>\n";
    }
    for (const GeoTile& tile : tilings[static_cast<size_t>(i)].tiles) {
      // Cells are sorted, so front/back bound the rod's rectangle.
      const auto [r0, c0] = tile.cells.front();
      const auto [r1, c1] = tile.cells.back();
      svg += "    <rect x=\"" + fmt(c0 * cs) + "\" y=\"" + fmt(r0 * cs) + "\" width=\"" +
             fmt((c1 - c0 + 1) * cs) + "\" height=\"" + fmt((r1 - r0 + 1) * cs) + "\" fill=\"" +
             fill_for(style, tile.length) + stroke;
    }
    svg += "  </g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace rodring
