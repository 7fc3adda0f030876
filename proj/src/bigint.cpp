#include "lefmon/bigint.hpp"

#include <stdexcept>

namespace lefmon {

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("exact_div: zero divisor");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw std::logic_error("exact_div: non-exact division");
  return q;
}

std::string to_decimal(const Int& v) { return v.get_str(); }

}  // namespace lefmon
