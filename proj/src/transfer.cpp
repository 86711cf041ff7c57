#include "rodring/transfer.hpp"

#include <cmath>
#include <stdexcept>

namespace rodring {

CellState state_from_char(char c) {
  switch (c) {
    case 'C': return CellState::Closed;
    case 'L': return CellState::OpenLeft;
    case 'R': return CellState::OpenRight;
    default: throw std::invalid_argument(std::string("invalid state char '") + c + "'");
  }
}

bool transition_allowed(CellState a, CellState b) {
  if (a == CellState::OpenRight) return b == CellState::OpenLeft;
  // Closed and OpenLeft both leave the boundary free: next cell starts a
  // monomer or a new dimer, but cannot be a dangling second half.
  return b != CellState::OpenLeft;
}

IntMatrix transition_matrix() {
  IntMatrix m(3, 3);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (transition_allowed(static_cast<CellState>(a), static_cast<CellState>(b))) {
        m.at(a, b) = 1;
      }
    }
  }
  return m;
}

BigInt cycle_count_via_matrix(int k) {
  if (k < 1) throw std::invalid_argument("cycle needs at least one cell");
  const IntMatrix p = mat_pow(transition_matrix(), k - 1);
  // A walk of k-1 steps covers the ring once we also close the seam between
  // cell k-1 and cell 0. The closing is legal for exactly these (first, last)
  // state pairs: both halves of a seam-crossing dimer must meet, and nothing
  // may dangle. (C,C), (C,L), (L,R), (R,C), (R,L) — where an initial L pairs
  // with a final R as the dimer that wraps.
  return p.at(0, 0) + p.at(0, 1) + p.at(1, 2) + p.at(2, 0) + p.at(2, 1);
}

EigenSystem eigen_system() {
  const double s5 = std::sqrt(5.0);
  const double phi = (1.0 + s5) / 2.0;
  const double psi = (1.0 - s5) / 2.0;
  EigenSystem e;
  e.eigenvalues = {0.0, phi, psi};
  // Columns are eigenvectors for 0, phi, psi respectively.
  e.basis = {{{1.0, phi, psi},
              {0.0, phi, psi},
              {-1.0, 1.0, 1.0}}};
  e.basis_inv = {{{1.0, -1.0, 0.0},
                  {(5.0 - s5) / 10.0, (3.0 * s5 - 5.0) / 10.0, (5.0 - s5) / 10.0},
                  {(5.0 + s5) / 10.0, -(5.0 + 3.0 * s5) / 10.0, (5.0 + s5) / 10.0}}};
  return e;
}

double closed_form_float(int k) {
  if (k < 1) throw std::invalid_argument("closed_form_float needs k >= 1");
  if (k > 70) {
    throw std::domain_error(
        "closed_form_float loses integer precision past k = 70; use cycle_count_via_matrix");
  }
  const double s5 = std::sqrt(5.0);
  const double phi = (1.0 + s5) / 2.0;
  const double psi = (1.0 - s5) / 2.0;
  return std::pow(phi, k) + std::pow(psi, k);
}

}  // namespace rodring
