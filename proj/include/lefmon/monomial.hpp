#pragma once

#include <string>
#include <vector>

namespace lefmon {

// Exponent vector in n variables; slot i-1 holds the exponent of x_i.
// The same object serves as a dual (inverse-system) monomial y^e.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps);

  int vars() const { return static_cast<int>(e.size()); }
  int degree() const;
  // deg_i(m): exponent of x_i, 1-based variable index.
  int deg(int var) const { return e[var - 1]; }
  int support_size() const;

  bool divides(const Monomial& m) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Pure lexicographic comparison of exponent vectors (x_1 > x_2 > ... > x_n).
int lex_cmp(const Monomial& a, const Monomial& b);

// The fixed listing order used for every basis: degree ascending, then
// lexicographic descending within a degree. Matrices built on these listings
// are byte-reproducible across runs.
bool listing_less(const Monomial& a, const Monomial& b);

// All degree-k monomials in n variables, in listing order.
std::vector<Monomial> monomials_of_degree(int n, int k);

std::string to_string(const Monomial& m);

}  // namespace lefmon
