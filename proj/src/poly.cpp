#include "lefmon/poly.hpp"

#include <stdexcept>

namespace lefmon {

Poly poly_one(int n) { return {{std::vector<int>(n, 0), Int(1)}}; }

Poly poly_from_linear(const std::vector<long long>& coeffs) {
  Poly p;
  const int n = static_cast<int>(coeffs.size());
  for (int i = 0; i < n; ++i) {
    if (coeffs[i] == 0) continue;
    std::vector<int> key(n, 0);
    key[i] = 1;
    p.emplace(std::move(key), Int(static_cast<long>(coeffs[i])));
  }
  return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly p;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) {
      std::vector<int> key(ka.size());
      for (size_t i = 0; i < key.size(); ++i) key[i] = ka[i] + kb[i];
      p[key] += va * vb;
    }
  for (auto it = p.begin(); it != p.end();)
    it = (it->second == 0) ? p.erase(it) : std::next(it);
  return p;
}

Poly poly_mul_monomial(const Poly& a, const Monomial& m) {
  Poly p;
  for (const auto& [k, v] : a) {
    std::vector<int> key(k.size());
    for (size_t i = 0; i < key.size(); ++i) key[i] = k[i] + m.e[i];
    p.emplace(std::move(key), v);
  }
  return p;
}

Poly poly_pow(const Poly& a, int t, int n) {
  if (t < 0) throw std::invalid_argument("poly_pow: negative power");
  Poly r = poly_one(n);
  for (int i = 0; i < t; ++i) r = poly_mul(r, a);
  return r;
}

}  // namespace lefmon
