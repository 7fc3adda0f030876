#include "lefmon/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace lefmon {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
  e_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& av = a.at(r, k);
      if (av == 0) continue;
      for (int c = 0; c < b.cols(); ++c) p.at(r, c) += av * b.at(k, c);
    }
  return p;
}

namespace {

struct EchelonResult {
  long rank = 0;
  int sign = 1;
  Int last_pivot = 1;
  bool column_skipped = false;
};

// Fraction-free elimination. After k pivots every entry below is a (k+1)x(k+1)
// minor of the input, so the division by the previous pivot is exact; the
// division is still checked. Pivot choice: smallest nonzero magnitude in the
// column (controls coefficient growth), lowest row index on ties.
EchelonResult bareiss(IntMatrix& m) {
  const int R = m.rows(), C = m.cols();
  EchelonResult res;
  Int prev = 1;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int p = -1;
    for (int i = r; i < R; ++i) {
      if (m.at(i, c) == 0) continue;
      if (p < 0 || mpz_cmpabs(m.at(i, c).get_mpz_t(), m.at(p, c).get_mpz_t()) < 0) p = i;
    }
    if (p < 0) {
      res.column_skipped = true;
      continue;
    }
    if (p != r) {
      for (int j = c; j < C; ++j) std::swap(m.at(p, j), m.at(r, j));
      res.sign = -res.sign;
    }
    for (int i = r + 1; i < R; ++i) {
      for (int j = c + 1; j < C; ++j)
        m.at(i, j) = exact_div(m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j), prev);
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

}  // namespace

long rank(const IntMatrix& m) {
  IntMatrix work = m;
  return bareiss(work).rank;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  if (m.rows() == 0) return 1;
  IntMatrix work = m;
  EchelonResult e = bareiss(work);
  if (e.rank < m.rows() || e.column_skipped) return 0;
  return e.sign * e.last_pivot;
}

std::vector<RationalVector> nullspace(const IntMatrix& m) {
  const int R = m.rows(), C = m.cols();
  // plain rational Gauss-Jordan; pivot = first nonzero row, fully
  // deterministic so kernel bases are reproducible
  std::vector<std::vector<Rat>> a(R, std::vector<Rat>(C));
  for (int r = 0; r < R; ++r)
    for (int c = 0; c < C; ++c) a[r][c] = Rat(m.at(r, c));

  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int p = -1;
    for (int i = r; i < R; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    const Rat piv = a[r][c];
    for (int j = c; j < C; ++j) a[r][j] /= piv;
    for (int i = 0; i < R; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (int j = c; j < C; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(C, false);
  for (int c : pivot_cols) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (int f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(C, Rat(0));
    v[f] = 1;
    for (size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -a[k][f];

    RationalVector rv;
    Int den = 1;
    for (const Rat& x : v) {
      Int d = x.get_den();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    rv.den = den;
    rv.num.reserve(C);
    Int content = 0;
    for (const Rat& x : v) {
      Rat scaled = x * Rat(den);
      rv.num.push_back(scaled.get_num());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), rv.num.back().get_mpz_t());
    }
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), rv.den.get_mpz_t());
    if (content > 1) {
      for (Int& x : rv.num) x = exact_div(x, content);
      rv.den = exact_div(rv.den, content);
    }
    basis.push_back(std::move(rv));
  }
  return basis;
}

}  // namespace lefmon
