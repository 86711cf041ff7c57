#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rodring/geometry.hpp"
#include "rodring/sequences.hpp"

namespace rodring {

// Exhaustive enumeration is the oracle the closed forms are judged against,
// so it stays deliberately small: anything past this many cells must opt in
// explicitly via the guard parameter.
constexpr int kDefaultCellGuard = 26;

enum class TileKind { Monomer, Dimer };

struct RingTile {
  TileKind kind;
  int start;  // ring index of the (first) covered cell

  friend bool operator==(const RingTile&, const RingTile&) = default;
};

// A monomer/dimer tiling of the k-cell ring. Tiles are sorted by start index;
// a dimer may wrap from index k-1 to 0 (at most one can), and it sorts last.
struct Tiling {
  int ring_length = 0;
  std::vector<RingTile> tiles;

  // The C/L/R state word, one char per ring cell: 'C' monomer, 'R' first
  // cell of a dimer, 'L' second cell. Words order tilings lexicographically.
  std::string word() const;

  friend bool operator==(const Tiling&, const Tiling&) = default;
};

// Parse and validate a state word (every 'R' followed cyclically by 'L' and
// vice versa, no trailing half-dimer). Throws std::invalid_argument on
// malformed words, including the empty one.
Tiling tiling_from_word(std::string_view word);

// All tilings of the k-cell ring in lexicographic word order (C < L < R).
// Throws std::invalid_argument for k < 1 or k > cell_guard.
std::vector<Tiling> enumerate_ring_tilings(int k, int cell_guard = kDefaultCellGuard);

// A straight 1xL rod placed on border cells, L = length = cells.size().
struct GeoTile {
  int length;
  std::vector<Cell> cells;  // sorted (row, col); collinear and contiguous

  friend bool operator==(const GeoTile&, const GeoTile&) = default;
};

const char* kind_name(int length);  // 1 "monomer", 2 "dimer", 3 "trimer"

struct GeometricTiling {
  BorderSpec spec;
  std::vector<GeoTile> tiles;

  friend bool operator==(const GeometricTiling&, const GeometricTiling&) = default;
};

// Exact-cover enumeration of the border cells by straight rods of length
// 1..max_rod (1 <= max_rod <= 3) under grid adjacency. Unlike the ring model
// this sees vertical dimers between the touching rows of an m = 2 border, so
// for m = 2, n >= 3 it counts strictly more tilings. Deterministic DFS order:
// first uncovered cell in ring order, candidates by (length, horizontal
// before vertical, start cell). Same guard as the ring enumerator.
std::vector<GeometricTiling> enumerate_geometric_tilings(
    const BorderSpec& spec, int max_rod = 2, int cell_guard = kDefaultCellGuard);

// Same walk, counting only — 7x7 already has ~1e5 tilings, and the
// verification suites need just the totals.
BigInt count_geometric_tilings(const BorderSpec& spec, int max_rod = 2,
                               int cell_guard = kDefaultCellGuard);

// Reinterpret a ring tiling on the border of `spec`, mapping ring indices to
// grid cells. Throws std::invalid_argument when ring lengths disagree.
GeometricTiling to_geometric(const Tiling& tiling, const BorderSpec& spec);

// Push a tiling through a symmetry element: cells move by the permutation,
// and reflections swap dimer ends (L <-> R). Throws std::invalid_argument on
// ring-length mismatch.
Tiling apply_symmetry(const Tiling& tiling, const SymmetryElement& g);

// Lexicographically least word among the images of `tiling` under `group`.
std::string canonical_word(const Tiling& tiling,
                           const std::vector<SymmetryElement>& group);

struct OrbitReport {
  BigInt total;                                             // |input|
  std::vector<std::pair<std::string, BigInt>> fixed_counts; // per element
  BigInt orbit_count;
};

// Burnside average of per-element fixed-tiling counts, cross-checked against
// the number of distinct canonical forms. Throws ConsistencyError when the
// average is not exact or the two answers differ; std::invalid_argument for
// an empty group.
OrbitReport orbit_count_direct(const std::vector<Tiling>& tilings,
                               const std::vector<SymmetryElement>& group);

// One representative per orbit (the tiling whose word is the orbit's
// canonical word), in enumeration order of the input.
std::vector<Tiling> orbit_representatives(
    const std::vector<Tiling>& tilings,
    const std::vector<SymmetryElement>& group);

}  // namespace rodring
