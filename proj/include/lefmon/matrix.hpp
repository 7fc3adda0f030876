#pragma once

#include <vector>

#include "lefmon/bigint.hpp"

namespace lefmon {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  IntMatrix transposed() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> e_;
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

// Rank over Q by fraction-free (Bareiss) elimination; exact, no tolerance.
long rank(const IntMatrix& m);

// Exact determinant by the same fraction-free recurrence; square input only.
Int determinant(const IntMatrix& m);

// Rational vector as integer numerators over one positive denominator,
// gcd-reduced.
struct RationalVector {
  std::vector<Int> num;
  Int den = 1;
};

// Basis of the right kernel over Q; empty exactly when the matrix is
// injective on column space. Deterministic: reduced echelon form with free
// columns in increasing index order.
std::vector<RationalVector> nullspace(const IntMatrix& m);

}  // namespace lefmon
