#pragma once

#include "lefmon/matrix.hpp"

namespace lefmon {

// Banded binomial Toeplitz matrix: m x m with entry (i,j) = C(n, k+j-i).
struct ToeplitzSpec {
  int n = 0;  // binomial row, >= 0
  int m = 1;  // size, >= 1
  int k = 0;  // band offset
};

// `standard` is C(n,i) = 0 only for i < 0 or i > n. `zero_at_origin`
// additionally zeroes C(n,0); that variant breaks invertibility at k = 0,
// so it is opt-in.
enum class BinomialConvention { standard, zero_at_origin };

IntMatrix toeplitz_matrix(const ToeplitzSpec& spec,
                          BinomialConvention conv = BinomialConvention::standard);

struct ToeplitzInvertibility {
  bool invertible = false;
  Int det = 0;
};
ToeplitzInvertibility toeplitz_invertible(const ToeplitzSpec& spec,
                                          BinomialConvention conv = BinomialConvention::standard);

// Cross-check against the multiplication map x (x+y)^n on
// K[x,y]/(x^{m+n-k}, y^{m+k+1}) from degree m-1 to degree m+n-1, restricted
// to the m target monomials x^{m+n-k-j} y^{k+j-1}, j = 1..m (for k < n the
// full target space has dimension m+1; the extra monomial x^{n-k-1} y^{m+k}
// is not part of the band). The band matrix acts on coordinate rows: entry
// (i,j) = coefficient of the j-th target monomial in the image of the i-th
// source monomial x^{m-i} y^{i-1}. Requires 0 <= k <= n.
bool two_var_cross_oracle(const ToeplitzSpec& spec,
                          BinomialConvention conv = BinomialConvention::standard);

}  // namespace lefmon
