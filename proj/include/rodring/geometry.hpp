#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rodring {

// An m-row by n-column rectangle whose border cells form the ring. Needs
// m, n >= 2 so the border is nonempty and closes.
struct BorderSpec {
  int m = 0;  // rows
  int n = 0;  // cols

  friend bool operator==(const BorderSpec&, const BorderSpec&) = default;
};

// 2(m + n - 2): each side minus the doubly-counted corners.
int ring_length(const BorderSpec& spec);

using Cell = std::pair<int, int>;  // (row, col)

// Border cells in ring order: clockwise from (0,0) — top row left to right,
// right column downward, bottom row right to left, left column upward.
struct Ring {
  BorderSpec spec;
  std::vector<Cell> cells;
};

Ring ring_cells(const BorderSpec& spec);

enum class GroupTag { C2, C4, D4 };

// For reflections: whether the mirror axis passes through two antipodal ring
// cells (Vertex) or between cells (Edge). Rotations get None. The distinction
// drives the per-element fixed-tiling formulas in the counting module.
enum class AxisKind { None, Vertex, Edge };

struct SymmetryElement {
  GroupTag group;
  std::string id;                // "r0","r90","r180","r270","mh","mv","md","ma"
  std::vector<int> permutation;  // ring index -> image ring index
  bool reverses_orientation;     // true exactly for reflections
  AxisKind axis;
};

// The elements of the chosen group as ring-index permutations, identity
// first, rotations before reflections: C2 = {r0, r180} for any rectangle,
// C4 = {r0, r90, r180, r270} and D4 = C4 + {mh, mv, md, ma} for squares only
// (std::invalid_argument otherwise). Permutations are derived from the
// geometric action on cell coordinates, not hard-coded shift amounts.
std::vector<SymmetryElement> symmetry_elements(const BorderSpec& spec,
                                               GroupTag group);

}  // namespace rodring
