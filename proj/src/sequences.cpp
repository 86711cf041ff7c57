#include "rodring/sequences.hpp"

#include <mutex>
#include <stdexcept>

namespace rodring {

namespace {

std::mutex table_mutex;

// Shared iterative fill for the two-term recurrences. Returns a copy so the
// lock never outlives the call.
BigInt recurrence_term(std::vector<BigInt>& table, int k) {
  if (k < 0) throw std::invalid_argument("sequence index must be nonnegative");
  std::lock_guard<std::mutex> lock(table_mutex);
  while (static_cast<int>(table.size()) <= k) {
    table.push_back(table[table.size() - 1] + table[table.size() - 2]);
  }
  return table[k];
}

}  // namespace

BigInt lucas(int k) {
  static std::vector<BigInt> table{2, 1};
  return recurrence_term(table, k);
}

BigInt fib(int k) {
  static std::vector<BigInt> table{0, 1};
  return recurrence_term(table, k);
}

BigInt path_count(int cells) {
  if (cells < 0) throw std::invalid_argument("path length must be nonnegative");
  return fib(cells + 1);
}

IntMatrix::IntMatrix(int rows, int cols) : rows(rows), cols(cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
  entries.resize(static_cast<size_t>(rows) * cols);
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix dimension mismatch in mat_mul");
  IntMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int l = 0; l < a.cols; ++l) {
      const BigInt& ail = a.at(i, l);
      if (ail == 0) continue;
      for (int j = 0; j < b.cols; ++j) out.at(i, j) += ail * b.at(l, j);
    }
  }
  return out;
}

IntMatrix mat_pow(const IntMatrix& base, int q) {
  if (base.rows != base.cols) throw std::invalid_argument("mat_pow needs a square matrix");
  if (q < 0) throw std::invalid_argument("mat_pow exponent must be nonnegative");
  IntMatrix result = IntMatrix::identity(base.rows);
  IntMatrix square = base;
  while (q > 0) {
    if (q & 1) result = mat_mul(result, square);
    q >>= 1;
    if (q > 0) square = mat_mul(square, square);
  }
  return result;
}

}  // namespace rodring
