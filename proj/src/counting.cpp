#include "rodring/counting.hpp"

#include <stdexcept>

#include "rodring/errors.hpp"

namespace rodring {

const char* name_of(Equivalence e) {
  switch (e) {
    case Equivalence::None: return "none";
    case Equivalence::Rotational: return "rotational";
    case Equivalence::Dihedral: return "dihedral";
  }
  throw std::invalid_argument("unknown equivalence");
}

const char* name_of(CountMethod m) {
  switch (m) {
    case CountMethod::ClosedForm: return "closed_form";
    case CountMethod::TransferMatrix: return "transfer_matrix";
    case CountMethod::BurnsideFirstPrinciples: return "burnside_first_principles";
    case CountMethod::Oracle: return "oracle";
  }
  throw std::invalid_argument("unknown count method");
}

namespace {

// Every averaged formula in this module is integer-valued by construction;
// a remainder means the implementation (not the input) is broken.
BigInt exact_div(const BigInt& v, unsigned long d, const char* what) {
  if (v % d != 0) {
    throw ConsistencyError(std::string(what) + ": " + to_decimal(v) +
                           " is not divisible by " + std::to_string(d));
  }
  return v / d;
}

int sign_pow(int n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

CountResult count_square_border(int n) {
  const BorderSpec spec{n, n};
  return {lucas(ring_length(spec)), CountMethod::ClosedForm, spec, Equivalence::None};
}

CountResult count_rect_border(int m, int n) {
  const BorderSpec spec{m, n};
  return {lucas(ring_length(spec)), CountMethod::ClosedForm, spec, Equivalence::None};
}

CountResult count_square_rotational(int n) {
  const BorderSpec spec{n, n};
  ring_length(spec);  // validates n >= 2
  const BigInt x = lucas(n - 1);
  const BigInt x2 = x * x;
  const BigInt poly = x2 * x2 + (1 + 4 * sign_pow(n)) * x2 + 2 * x + 2 * (1 + sign_pow(n));
  return {exact_div(poly, 4, "square rotational count"), CountMethod::ClosedForm, spec,
          Equivalence::Rotational};
}

CountResult count_square_rotational_parity_forms(int n) {
  const BorderSpec spec{n, n};
  ring_length(spec);
  const BigInt x = lucas(n - 1);
  const BigInt x2 = x * x;
  BigInt poly;
  if (n % 2 == 0) poly = x2 * x2 + 5 * x2 + 2 * x + 4;
  else poly = x2 * x2 - 3 * x2 + 2 * x;
  return {exact_div(poly, 4, "square rotational parity form"), CountMethod::ClosedForm, spec,
          Equivalence::Rotational};
}

CountResult count_rect_rotational_as_printed(int m, int n) {
  const BorderSpec spec{m, n};
  ring_length(spec);
  if (m == n) throw std::invalid_argument("rectangular rotational ops need m != n");
  const BigInt y = lucas(m + n - 1);
  const BigInt poly = y * y + y + 2 * sign_pow(m + n);
  return {exact_div(poly, 2, "as-printed rect rotational count"), CountMethod::ClosedForm, spec,
          Equivalence::Rotational};
}

CountResult count_rect_rotational_corrected(int m, int n) {
  const BorderSpec spec{m, n};
  const int k = ring_length(spec);
  if (m == n) throw std::invalid_argument("rectangular rotational ops need m != n");
  // Burnside over {identity, half turn}: lucas(k) + lucas(k/2), halved.
  const BigInt poly = lucas(k) + lucas(k / 2);
  return {exact_div(poly, 2, "corrected rect rotational count"), CountMethod::ClosedForm, spec,
          Equivalence::Rotational};
}

CountResult count_square_dihedral_even(int n) {
  const BorderSpec spec{n, n};
  ring_length(spec);
  if (n % 2 != 0) throw std::invalid_argument("count_square_dihedral_even needs even n");
  const BigInt L = lucas(n - 1);
  const BigInt F = fib(n - 1);
  const BigInt A = L * L + 2;  // lucas(2(n-1)) when n-1 is odd
  const BigInt poly = A * A - 2 + 2 * L + 3 * A + 6 * F * L;
  return {exact_div(poly, 8, "even dihedral count"), CountMethod::ClosedForm, spec,
          Equivalence::Dihedral};
}

CountResult count_square_dihedral_odd(int n) {
  const BorderSpec spec{n, n};
  ring_length(spec);
  if (n % 2 != 1) throw std::invalid_argument("count_square_dihedral_odd needs odd n");
  const BigInt L = lucas(n - 1);
  const BigInt F = fib(n - 1);
  const BigInt B = L * L - 2;  // lucas(2(n-1)) when n-1 is even
  const BigInt poly = B * B - 2 + 2 * L + B + 4 * F * L;
  return {exact_div(poly, 8, "odd dihedral count"), CountMethod::ClosedForm, spec,
          Equivalence::Dihedral};
}

CountResult count_square_dihedral(int n) {
  return n % 2 == 0 ? count_square_dihedral_even(n) : count_square_dihedral_odd(n);
}

BurnsideBreakdown burnside_first_principles(const BorderSpec& spec, GroupTag group) {
  const int k = ring_length(spec);
  const std::vector<SymmetryElement> elements = symmetry_elements(spec, group);

  BurnsideBreakdown out;
  BigInt sum = 0;
  for (const SymmetryElement& e : elements) {
    BigInt f;
    if (!e.reverses_orientation) {
      // A rotation by d fixes exactly the tilings that are periodic with
      // period gcd(d, k); those biject with tilings of the gcd(d, k)-ring.
      if (e.id == "r0") f = lucas(k);
      else if (e.id == "r180") f = lucas(k / 2);
      else f = lucas(k / 4);  // r90 / r270, squares only so 4 | k
    } else if (e.axis == AxisKind::Vertex) {
      // Axis through two cells: both must be monomers (a dimer straddling a
      // fixed cell would map to its own reversal elsewhere), leaving two
      // mirrored free paths of (k-2)/2 cells determined by one of them.
      f = path_count((k - 2) / 2);
    } else {
      // Axis through two gaps: each crossing dimer is optional, splitting
      // into the four combinations of "dimer across this gap or not".
      f = path_count(k / 2) + 2 * path_count((k - 2) / 2) + path_count((k - 4) / 2);
    }
    out.fixed_counts.emplace_back(e.id, f);
    sum += f;
  }

  out.result = {exact_div(sum, elements.size(), "Burnside average"),
                CountMethod::BurnsideFirstPrinciples, spec,
                group == GroupTag::D4 ? Equivalence::Dihedral : Equivalence::Rotational};
  return out;
}

}  // namespace rodring
