#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rodring/geometry.hpp"
#include "rodring/sequences.hpp"

namespace rodring {

enum class Equivalence { None, Rotational, Dihedral };
enum class CountMethod { ClosedForm, TransferMatrix, BurnsideFirstPrinciples, Oracle };

const char* name_of(Equivalence e);   // "none" / "rotational" / "dihedral"
const char* name_of(CountMethod m);   // "closed_form" / "transfer_matrix" / ...

struct CountResult {
  BigInt value;
  CountMethod method;
  BorderSpec spec;
  Equivalence equivalence;
};

// Plain (unreduced) counts: lucas(ring_length). n resp. m,n >= 2.
CountResult count_square_border(int n);
CountResult count_rect_border(int m, int n);

// Squares up to rotation, one polynomial in x = lucas(n-1) for both parities:
// [x^4 + (1 + 4(-1)^n) x^2 + 2x + 2(1 + (-1)^n)] / 4.
CountResult count_square_rotational(int n);

// The same count via the separate even/odd polynomials
// [x^4 + 5x^2 + 2x + 4] / 4 and [x^4 - 3x^2 + 2x] / 4; must agree with
// count_square_rotational everywhere.
CountResult count_square_rotational_parity_forms(int n);

// Rectangles (m != n) up to half-turn. The closed form as printed in the
// source being reproduced, [y^2 + y + 2(-1)^{m+n}] / 2 with y = lucas(m+n-1),
// overcounts — it equals the corrected form for a ring two cells longer — so
// its results are reported but never trusted; the corrected form
// [lucas(2k) + lucas(k)] / 2 with k = m+n-2 is the verified one.
CountResult count_rect_rotational_as_printed(int m, int n);
CountResult count_rect_rotational_corrected(int m, int n);

// Squares up to rotation and reflection, split by parity of n (each throws
// std::invalid_argument for the other parity). With L = lucas(n-1),
// F = fib(n-1):
//   even: [(L^2+2)^2 - 2 + 2L + 3(L^2+2) + 6 F L] / 8
//   odd:  [(L^2-2)^2 - 2 + 2L +   (L^2-2) + 4 F L] / 8
CountResult count_square_dihedral_even(int n);
CountResult count_square_dihedral_odd(int n);

// Parity dispatch over the two ops above.
CountResult count_square_dihedral(int n);

struct BurnsideBreakdown {
  CountResult result;
  // Element id -> tilings fixed by that element, in group element order.
  std::vector<std::pair<std::string, BigInt>> fixed_counts;
};

// Burnside's lemma from structural per-element formulas (no enumeration):
// rotations fix lucas(k / order) tilings; a reflection fixes path_count((k-2)/2)
// through-cell axes (Vertex) or path_count(k/2) + 2 path_count((k-2)/2) +
// path_count((k-4)/2) between-cell axes (Edge). Division by |G| is checked
// exact (ConsistencyError otherwise). Group constraints as in
// symmetry_elements.
BurnsideBreakdown burnside_first_principles(const BorderSpec& spec, GroupTag group);

}  // namespace rodring
