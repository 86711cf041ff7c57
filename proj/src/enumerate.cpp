#include "rodring/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "rodring/errors.hpp"
#include "rodring/transfer.hpp"

namespace rodring {

namespace {

bool allowed(char a, char b) {
  return transition_allowed(state_from_char(a), state_from_char(b));
}

// Word -> tiles, assuming the word has already been validated.
std::vector<RingTile> tiles_of_word(std::string_view word) {
  const int k = static_cast<int>(word.size());
  std::vector<RingTile> tiles;
  for (int i = 0; i < k; ++i) {
    if (word[static_cast<size_t>(i)] == 'C') tiles.push_back({TileKind::Monomer, i});
    if (word[static_cast<size_t>(i)] == 'R') tiles.push_back({TileKind::Dimer, i});
  }
  return tiles;
}

void check_guard(int cells, int cell_guard) {
  if (cells > cell_guard) {
    throw std::invalid_argument("enumerating " + std::to_string(cells) +
                                " cells exceeds the guard of " + std::to_string(cell_guard) +
                                "; raise the guard argument to opt in");
  }
}

// The image word under a symmetry element: cells move by the permutation and
// a reflection reads each dimer from its other end, so L and R swap.
std::string image_word(const std::string& word, const SymmetryElement& g) {
  if (g.permutation.size() != word.size()) {
    throw std::invalid_argument("symmetry element is for a different ring length");
  }
  std::string out(word.size(), '?');
  for (size_t i = 0; i < word.size(); ++i) {
    char c = word[i];
    if (g.reverses_orientation) {
      if (c == 'L') c = 'R';
      else if (c == 'R') c = 'L';
    }
    out[static_cast<size_t>(g.permutation[i])] = c;
  }
  return out;
}

}  // namespace

std::string Tiling::word() const {
  std::string w(static_cast<size_t>(ring_length), 'C');
  for (const RingTile& t : tiles) {
    if (t.kind == TileKind::Dimer) {
      w[static_cast<size_t>(t.start)] = 'R';
      w[static_cast<size_t>((t.start + 1) % ring_length)] = 'L';
    }
  }
  return w;
}

Tiling tiling_from_word(std::string_view word) {
  const int k = static_cast<int>(word.size());
  if (k < 1) throw std::invalid_argument("empty state word");
  for (int i = 0; i < k; ++i) {
    const char c = word[static_cast<size_t>(i)];
    state_from_char(c);  // rejects anything outside C/L/R
    const char next = word[static_cast<size_t>((i + 1) % k)];
    if ((c == 'R') != (next == 'L')) {
      throw std::invalid_argument("malformed state word \"" + std::string(word) +
                                  "\" at index " + std::to_string(i));
    }
  }
  return Tiling{k, tiles_of_word(word)};
}

std::vector<Tiling> enumerate_ring_tilings(int k, int cell_guard) {
  if (k < 1) throw std::invalid_argument("ring needs at least one cell");
  check_guard(k, cell_guard);

  std::vector<Tiling> out;
  std::string word(static_cast<size_t>(k), 'C');
  // Depth-first over words in C < L < R order; transitions prune dead
  // prefixes, the final seam check closes the ring.
  auto dfs = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      if (allowed(word[static_cast<size_t>(k - 1)], word[0])) {
        out.push_back(Tiling{k, tiles_of_word(word)});
      }
      return;
    }
    for (char c : {'C', 'L', 'R'}) {
      if (depth > 0 && !allowed(word[static_cast<size_t>(depth - 1)], c)) continue;
      word[static_cast<size_t>(depth)] = c;
      self(self, depth + 1);
    }
  };
  dfs(dfs, 0);
  return out;
}

const char* kind_name(int length) {
  switch (length) {
    case 1: return "monomer";
    case 2: return "dimer";
    case 3: return "trimer";
    default: throw std::invalid_argument("no rod of length " + std::to_string(length));
  }
}

namespace {

// Shared exact-cover walk behind the two geometric entry points. Emits each
// complete tiling's tile stack, in deterministic DFS order.
template <typename Emit>
void scan_geometric(const BorderSpec& spec, int max_rod, int cell_guard, Emit&& emit) {
  if (max_rod < 1 || max_rod > 3) throw std::invalid_argument("max_rod must be 1..3");
  const int k = ring_length(spec);  // validates the border dimensions
  check_guard(k, cell_guard);

  const Ring ring = ring_cells(spec);
  std::map<Cell, int> pos;
  for (int i = 0; i < k; ++i) pos[ring.cells[static_cast<size_t>(i)]] = i;

  std::vector<char> covered(static_cast<size_t>(k), 0);
  std::vector<GeoTile> stack;

  // A rod is placeable iff every cell is a free border cell.
  auto try_place = [&](const std::vector<Cell>& cells) {
    for (const Cell& c : cells) {
      auto it = pos.find(c);
      if (it == pos.end() || covered[static_cast<size_t>(it->second)]) return false;
    }
    return true;
  };
  auto set_covered = [&](const std::vector<Cell>& cells, char v) {
    for (const Cell& c : cells) covered[static_cast<size_t>(pos.at(c))] = v;
  };

  auto dfs = [&](auto&& self, int scan_from) -> void {
    int i = scan_from;
    while (i < k && covered[static_cast<size_t>(i)]) ++i;
    if (i == k) {
      emit(stack);
      return;
    }
    const auto [row, col] = ring.cells[static_cast<size_t>(i)];
    // Every candidate rod covering the target cell, shortest first,
    // horizontal before vertical, then by start cell.
    for (int len = 1; len <= max_rod; ++len) {
      const int orientations = len == 1 ? 1 : 2;
      for (int vertical = 0; vertical < orientations; ++vertical) {
        for (int offset = len - 1; offset >= 0; --offset) {
          std::vector<Cell> cells;
          cells.reserve(static_cast<size_t>(len));
          for (int j = 0; j < len; ++j) {
            cells.emplace_back(vertical ? row - offset + j : row,
                               vertical ? col : col - offset + j);
          }
          if (!try_place(cells)) continue;
          set_covered(cells, 1);
          stack.push_back(GeoTile{len, cells});
          self(self, i + 1);
          stack.pop_back();
          set_covered(cells, 0);
        }
      }
    }
  };
  dfs(dfs, 0);
}

}  // namespace

std::vector<GeometricTiling> enumerate_geometric_tilings(const BorderSpec& spec, int max_rod,
                                                         int cell_guard) {
  std::vector<GeometricTiling> out;
  scan_geometric(spec, max_rod, cell_guard,
                 [&](const std::vector<GeoTile>& tiles) { out.push_back({spec, tiles}); });
  return out;
}

BigInt count_geometric_tilings(const BorderSpec& spec, int max_rod, int cell_guard) {
  BigInt count = 0;
  scan_geometric(spec, max_rod, cell_guard, [&](const std::vector<GeoTile>&) { ++count; });
  return count;
}

GeometricTiling to_geometric(const Tiling& tiling, const BorderSpec& spec) {
  if (ring_length(spec) != tiling.ring_length) {
    throw std::invalid_argument("tiling and border have different ring lengths");
  }
  const Ring ring = ring_cells(spec);
  GeometricTiling out{spec, {}};
  out.tiles.reserve(tiling.tiles.size());
  for (const RingTile& t : tiling.tiles) {
    std::vector<Cell> cells{ring.cells[static_cast<size_t>(t.start)]};
    if (t.kind == TileKind::Dimer) {
      cells.push_back(ring.cells[static_cast<size_t>((t.start + 1) % tiling.ring_length)]);
      std::sort(cells.begin(), cells.end());
    }
    out.tiles.push_back(GeoTile{static_cast<int>(cells.size()), std::move(cells)});
  }
  return out;
}

Tiling apply_symmetry(const Tiling& tiling, const SymmetryElement& g) {
  // Reparsing validates the image — cheap insurance that the group action
  // really maps tilings to tilings.
  return tiling_from_word(image_word(tiling.word(), g));
}

std::string canonical_word(const Tiling& tiling, const std::vector<SymmetryElement>& group) {
  if (group.empty()) throw std::invalid_argument("canonical_word needs a nonempty group");
  const std::string w = tiling.word();
  std::string best = image_word(w, group.front());
  for (size_t j = 1; j < group.size(); ++j) {
    best = std::min(best, image_word(w, group[j]));
  }
  return best;
}

OrbitReport orbit_count_direct(const std::vector<Tiling>& tilings,
                               const std::vector<SymmetryElement>& group) {
  if (group.empty()) throw std::invalid_argument("orbit counting needs a nonempty group");

  std::vector<BigInt> fixed(group.size(), BigInt(0));
  std::set<std::string> canonical;
  for (const Tiling& t : tilings) {
    const std::string w = t.word();
    std::string best = w;
    for (size_t j = 0; j < group.size(); ++j) {
      std::string img = image_word(w, group[j]);
      if (img == w) ++fixed[j];
      if (img < best) best = std::move(img);
    }
    canonical.insert(std::move(best));
  }

  BigInt sum = 0;
  for (const BigInt& f : fixed) sum += f;
  const auto order = static_cast<unsigned long>(group.size());
  if (sum % order != 0) {
    throw ConsistencyError("Burnside sum " + to_decimal(sum) + " is not divisible by group order " +
                           std::to_string(order));
  }
  BigInt orbits = sum / order;
  if (orbits != canonical.size()) {
    throw ConsistencyError("Burnside average " + to_decimal(orbits) + " disagrees with " +
                           std::to_string(canonical.size()) + " canonical forms");
  }

  OrbitReport report{BigInt(tilings.size()), {}, std::move(orbits)};
  for (size_t j = 0; j < group.size(); ++j) {
    report.fixed_counts.emplace_back(group[j].id, fixed[j]);
  }
  return report;
}

std::vector<Tiling> orbit_representatives(const std::vector<Tiling>& tilings,
                                          const std::vector<SymmetryElement>& group) {
  std::vector<Tiling> reps;
  for (const Tiling& t : tilings) {
    if (t.word() == canonical_word(t, group)) reps.push_back(t);
  }
  return reps;
}

}  // namespace rodring
