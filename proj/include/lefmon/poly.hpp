#pragma once

#include <map>
#include <vector>

#include "lefmon/bigint.hpp"
#include "lefmon/monomial.hpp"

namespace lefmon {

// Sparse integer polynomial keyed by exponent vector. Slow and obvious on
// purpose: this is the expansion route that cross-checks the closed-form
// multiplication matrices and decides the containment tests.
using Poly = std::map<std::vector<int>, Int>;

Poly poly_one(int n);
Poly poly_from_linear(const std::vector<long long>& coeffs);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_mul_monomial(const Poly& a, const Monomial& m);
Poly poly_pow(const Poly& a, int t, int n);

}  // namespace lefmon
