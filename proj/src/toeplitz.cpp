#include "lefmon/toeplitz.hpp"

#include <stdexcept>

#include "lefmon/ideal.hpp"
#include "lefmon/lefschetz.hpp"

namespace lefmon {

namespace {

Int band_entry(int n, int idx, BinomialConvention conv) {
  if (conv == BinomialConvention::zero_at_origin && idx <= 0) return 0;
  return binomial(n, idx);
}

}  // namespace

IntMatrix toeplitz_matrix(const ToeplitzSpec& spec, BinomialConvention conv) {
  if (spec.m < 1) throw std::invalid_argument("toeplitz_matrix: size must be >= 1");
  if (spec.n < 0) throw std::invalid_argument("toeplitz_matrix: binomial row must be >= 0");
  IntMatrix t(spec.m, spec.m);
  for (int i = 0; i < spec.m; ++i)
    for (int j = 0; j < spec.m; ++j) t.at(i, j) = band_entry(spec.n, spec.k + j - i, conv);
  return t;
}

ToeplitzInvertibility toeplitz_invertible(const ToeplitzSpec& spec, BinomialConvention conv) {
  ToeplitzInvertibility out;
  out.det = determinant(toeplitz_matrix(spec, conv));
  out.invertible = out.det != 0;
  return out;
}

bool two_var_cross_oracle(const ToeplitzSpec& spec, BinomialConvention conv) {
  if (spec.k < 0 || spec.k > spec.n)
    throw std::invalid_argument("two_var_cross_oracle: requires 0 <= k <= n");
  const int n = spec.n, m = spec.m, k = spec.k;

  const std::vector<Monomial> gens = {Monomial({m + n - k, 0}), Monomial({0, m + k + 1})};
  const IntMatrix full =
      multiplication_matrix(2, gens, m - 1, n, LinearForm{{1, 1}});

  const std::vector<Monomial> src = quotient_basis(2, gens, m - 1);
  const std::vector<Monomial> tgt = quotient_basis(2, gens, m + n - 1);
  auto find_in = [](const std::vector<Monomial>& basis, const Monomial& mono) {
    for (size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == mono) return static_cast<int>(i);
    throw std::logic_error("two_var_cross_oracle: basis monomial missing");
  };

  // the band matrix acts on coordinate rows: entry (i,j) is the coefficient
  // of the j-th target monomial in the image of the i-th source monomial
  const IntMatrix t = toeplitz_matrix(spec, conv);
  for (int j = 1; j <= m; ++j) {
    const int row = find_in(tgt, Monomial({m + n - k - j, k + j - 1}));
    for (int i = 1; i <= m; ++i) {
      const int col = find_in(src, Monomial({m - i, i - 1}));
      if (t.at(i - 1, j - 1) != full.at(row, col)) return false;
    }
  }
  return true;
}

}  // namespace lefmon
