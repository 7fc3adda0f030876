#pragma once

#include <vector>

#include "lefmon/bigint.hpp"
#include "lefmon/ideal.hpp"
#include "lefmon/matrix.hpp"
#include "lefmon/monomial.hpp"
#include "lefmon/rng.hpp"

namespace lefmon::test {

inline Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

// (x1^3, x2^3, x3^3, x1*x2*x3)
inline MonomialIdeal togliatti() {
  return MonomialIdeal(3, 3, {mono({3, 0, 0}), mono({0, 3, 0}), mono({0, 0, 3}), mono({1, 1, 1})});
}

// (x^3, y^3, z^3, x*y^2, x^2*y, x*z^2, x^2*z, y^2*z, y*z^2)
inline MonomialIdeal remark28() {
  return MonomialIdeal(3, 3,
                       {mono({3, 0, 0}), mono({0, 3, 0}), mono({0, 0, 3}), mono({1, 2, 0}),
                        mono({2, 1, 0}), mono({1, 0, 2}), mono({2, 0, 1}), mono({0, 2, 1}),
                        mono({0, 1, 2})});
}

// m^d in n variables
inline MonomialIdeal power_ideal(int n, int d) {
  return MonomialIdeal(n, d, monomials_of_degree(n, d));
}

inline IntMatrix matrix_from(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

inline IntMatrix random_matrix(DetRng& rng, int rows, int cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = static_cast<long>(rng.in(lo, hi));
  return m;
}

// Cofactor expansion; the slow route that anchors the fraction-free one.
inline Int naive_determinant(const IntMatrix& m) {
  const int s = m.rows();
  if (s == 0) return 1;
  if (s == 1) return m.at(0, 0);
  Int acc = 0;
  for (int c = 0; c < s; ++c) {
    if (m.at(0, c) == 0) continue;
    IntMatrix sub(s - 1, s - 1);
    for (int r = 1; r < s; ++r) {
      int cc = 0;
      for (int k = 0; k < s; ++k) {
        if (k == c) continue;
        sub.at(r - 1, cc++) = m.at(r, k);
      }
    }
    Int term = m.at(0, c) * naive_determinant(sub);
    acc += (c % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace lefmon::test
