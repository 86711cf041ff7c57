#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace rodring {

// Exact arbitrary-precision integer. Everything countable in this library is
// counted in these; doubles only ever appear in the validation-only float
// paths of the transfer module.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

// L_0 = 2, L_1 = 1, L_k = L_{k-1} + L_{k-2}. Throws std::invalid_argument
// for k < 0. Memoized; safe to call concurrently.
BigInt lucas(int k);

// F_0 = 0, F_1 = 1. Same conventions as lucas().
BigInt fib(int k);

// Monomer/dimer tilings of an open path of `cells` cells; equals F_{cells+1},
// with path_count(0) = 1 (the empty tiling).
BigInt path_count(int cells);

// Dense row-major matrix over BigInt. Dimensions are fixed at construction.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> entries;  // row-major, rows * cols of them

  IntMatrix() = default;
  IntMatrix(int rows, int cols);  // zero-filled; throws on nonpositive dims

  static IntMatrix identity(int n);

  BigInt& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
  const BigInt& at(int r, int c) const {
    return entries[static_cast<size_t>(r) * cols + c];
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

// Throws std::invalid_argument when a.cols != b.rows.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

// Binary exponentiation; q = 0 gives the identity. Throws
// std::invalid_argument for non-square base or q < 0.
IntMatrix mat_pow(const IntMatrix& base, int q);

}  // namespace rodring
