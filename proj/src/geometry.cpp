#include "rodring/geometry.hpp"

#include <map>
#include <stdexcept>

namespace rodring {

namespace {

void validate(const BorderSpec& spec) {
  if (spec.m < 2 || spec.n < 2) throw std::invalid_argument("border needs m, n >= 2");
}

// Geometric actions on grid coordinates. Rotations are for squares only
// (except the half turn, which any rectangle has).
Cell t_r0(const BorderSpec&, Cell c) { return c; }
Cell t_r90(const BorderSpec& s, Cell c) { return {c.second, s.n - 1 - c.first}; }
Cell t_r180(const BorderSpec& s, Cell c) { return {s.m - 1 - c.first, s.n - 1 - c.second}; }
Cell t_r270(const BorderSpec& s, Cell c) { return {s.n - 1 - c.second, c.first}; }
Cell t_mh(const BorderSpec& s, Cell c) { return {s.m - 1 - c.first, c.second}; }
Cell t_mv(const BorderSpec& s, Cell c) { return {c.first, s.n - 1 - c.second}; }
Cell t_md(const BorderSpec&, Cell c) { return {c.second, c.first}; }
Cell t_ma(const BorderSpec& s, Cell c) { return {s.n - 1 - c.second, s.n - 1 - c.first}; }

}  // namespace

int ring_length(const BorderSpec& spec) {
  validate(spec);
  return 2 * (spec.m + spec.n - 2);
}

Ring ring_cells(const BorderSpec& spec) {
  validate(spec);
  const int m = spec.m, n = spec.n;
  std::vector<Cell> cells;
  cells.reserve(static_cast<size_t>(ring_length(spec)));
  for (int c = 0; c < n; ++c) cells.emplace_back(0, c);           // top, left to right
  for (int r = 1; r < m; ++r) cells.emplace_back(r, n - 1);       // right, downward
  for (int c = n - 2; c >= 0; --c) cells.emplace_back(m - 1, c);  // bottom, right to left
  for (int r = m - 2; r >= 1; --r) cells.emplace_back(r, 0);      // left, upward
  return Ring{spec, std::move(cells)};
}

std::vector<SymmetryElement> symmetry_elements(const BorderSpec& spec, GroupTag group) {
  validate(spec);
  if ((group == GroupTag::C4 || group == GroupTag::D4) && spec.m != spec.n) {
    throw std::invalid_argument("C4 and D4 symmetry require a square border");
  }

  const Ring ring = ring_cells(spec);
  const int k = static_cast<int>(ring.cells.size());
  std::map<Cell, int> index;
  for (int i = 0; i < k; ++i) index[ring.cells[i]] = i;

  auto make = [&](const char* id, Cell (*t)(const BorderSpec&, Cell), bool reflects) {
    SymmetryElement e{group, id, std::vector<int>(static_cast<size_t>(k)), reflects,
                      AxisKind::None};
    for (int i = 0; i < k; ++i) {
      // The border is closed under every symmetry of the rectangle, so the
      // image is always a ring cell.
      e.permutation[static_cast<size_t>(i)] = index.at(t(spec, ring.cells[static_cast<size_t>(i)]));
    }
    if (reflects) {
      int fixed = 0;
      for (int i = 0; i < k; ++i) fixed += e.permutation[static_cast<size_t>(i)] == i;
      // A mirror axis either passes through two antipodal border cells or
      // through two gaps; those are the only possibilities on a ring.
      e.axis = fixed == 2 ? AxisKind::Vertex : AxisKind::Edge;
    }
    return e;
  };

  std::vector<SymmetryElement> elements;
  elements.push_back(make("r0", t_r0, false));
  if (group == GroupTag::C2) {
    elements.push_back(make("r180", t_r180, false));
    return elements;
  }
  elements.push_back(make("r90", t_r90, false));
  elements.push_back(make("r180", t_r180, false));
  elements.push_back(make("r270", t_r270, false));
  if (group == GroupTag::D4) {
    elements.push_back(make("mh", t_mh, true));
    elements.push_back(make("mv", t_mv, true));
    elements.push_back(make("md", t_md, true));
    elements.push_back(make("ma", t_ma, true));
  }
  return elements;
}

}  // namespace rodring
