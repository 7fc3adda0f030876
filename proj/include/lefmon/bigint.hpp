#pragma once

#include <gmpxx.h>

#include <string>

namespace lefmon {

// All arithmetic that feeds a rank/determinant verdict is exact.
using Int = mpz_class;
using Rat = mpq_class;

Int factorial(long n);

// Zero outside 0 <= k <= n.
Int binomial(long n, long k);

// Quotient a/b; throws std::logic_error unless b divides a exactly.
Int exact_div(const Int& a, const Int& b);

std::string to_decimal(const Int& v);

}  // namespace lefmon
