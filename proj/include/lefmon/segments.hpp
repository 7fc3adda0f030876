#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lefmon/ideal.hpp"

namespace lefmon {

// Chain of degree-d monomials m_1..m_r, all divisible by x_i x_j, with
// (x_j/x_i) m_t = m_{t+1}. Maximal when both one-step extensions land in I.
struct LineSegment {
  int i = 0;
  int j = 0;
  std::vector<Monomial> monomials;  // x_i-exponent strictly descending
  bool maximal = false;
};

// Partition of the degree-d standard monomials divisible by x_i x_j into
// runs that are maximal within that set, grouped by the frozen exponents on
// the other variables. 1 <= i < j <= n.
std::vector<LineSegment> segment_decomposition(const MonomialIdeal& I, int i, int j);

// First pair (i,j), in lexicographic order, maximizing a+b where
// a = min deg_i and b = min deg_j over the degree-d standard monomials;
// absent when no pair reaches a+b >= 1 or (S/I)_d = 0.
struct XYHypothesis {
  int i = 0, j = 0, a = 0, b = 0;
};
std::optional<XYHypothesis> xy_hypothesis(const MonomialIdeal& I);

// First pair (i,j) such that a degree-d monomial is standard exactly when
// x_i x_j divides it.
std::optional<std::pair<int, int>> slp_hypothesis(const MonomialIdeal& I);

// Componentwise minimum of the exponent vectors of the degree-d standard
// monomials; absent when (S/I)_d = 0.
std::optional<std::vector<int>> conjecture39_exponent(const MonomialIdeal& I);

}  // namespace lefmon
