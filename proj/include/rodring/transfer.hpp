#pragma once

#include <array>

#include "rodring/sequences.hpp"

namespace rodring {

// What a ring cell looks like to its clockwise neighbor:
//   Closed    — a monomer; the cell starts and ends nothing.
//   OpenLeft  — second half of a dimer begun in the previous cell.
//   OpenRight — first half of a dimer completed in the next cell.
// This order (Closed, OpenLeft, OpenRight) fixes the row/column order of the
// transition matrix and the 1/2/3 state indices used in serialized output.
enum class CellState { Closed = 0, OpenLeft = 1, OpenRight = 2 };

constexpr char to_char(CellState s) {
  constexpr char chars[] = {'C', 'L', 'R'};
  return chars[static_cast<int>(s)];
}

// 'C' / 'L' / 'R' -> state; throws std::invalid_argument on anything else.
CellState state_from_char(char c);

// True when state `b` may immediately follow state `a` clockwise:
// C->C, C->R, L->C, L->R, R->L.
bool transition_allowed(CellState a, CellState b);

// The 3x3 0/1 matrix of transition_allowed, rows = from, cols = to:
//   [ 1 0 1 ]
//   [ 1 0 1 ]
//   [ 0 1 0 ]
IntMatrix transition_matrix();

// Sum of the five (start, end) entries of P = M^{k-1} whose state pairs close
// a k-cell cycle: (C,C), (C,L), (L,R), (R,C), (R,L). Equals lucas(k) for all
// k >= 1. Throws std::invalid_argument for k < 1.
BigInt cycle_count_via_matrix(int k);

// Spectral data of the transition matrix, for float validation only.
// eigenvalues = {0, phi, psi}; columns of `basis` are the corresponding
// eigenvectors; basis * diag(eigenvalues) * basis_inv reconstructs the matrix.
struct EigenSystem {
  std::array<double, 3> eigenvalues;
  std::array<std::array<double, 3>, 3> basis;
  std::array<std::array<double, 3>, 3> basis_inv;
};

EigenSystem eigen_system();

// phi^k + psi^k as a double. Exact-integer-valued in theory; past k = 70 the
// double mantissa can no longer honor the +-1e-9 contract, so larger k throws
// std::domain_error (and k < 1 throws std::invalid_argument).
double closed_form_float(int k);

}  // namespace rodring
