#include "lefmon/monomial.hpp"

#include <stdexcept>

namespace lefmon {

Monomial::Monomial(std::vector<int> exps) : e(std::move(exps)) {
  if (e.empty()) throw std::invalid_argument("monomial: needs at least one variable");
  for (int v : e)
    if (v < 0) throw std::invalid_argument("monomial: negative exponent");
}

int Monomial::degree() const {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

int Monomial::support_size() const {
  int s = 0;
  for (int v : e) s += (v > 0);
  return s;
}

bool Monomial::divides(const Monomial& m) const {
  if (e.size() != m.e.size()) throw std::invalid_argument("monomial: variable count mismatch");
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

bool listing_less(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return lex_cmp(a, b) > 0;
}

namespace {

void emit_rec(size_t pos, int rem, std::vector<int>& cur, std::vector<Monomial>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = rem;
    out.push_back(Monomial(cur));
    cur[pos] = 0;
    return;
  }
  for (int x = rem; x >= 0; --x) {
    cur[pos] = x;
    emit_rec(pos + 1, rem - x, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int k) {
  if (n < 1) throw std::invalid_argument("monomials_of_degree: n must be positive");
  if (k < 0) throw std::invalid_argument("monomials_of_degree: negative degree");
  std::vector<Monomial> out;
  std::vector<int> cur(n, 0);
  emit_rec(0, k, cur, out);
  return out;
}

std::string to_string(const Monomial& m) {
  std::string s;
  for (int i = 0; i < m.vars(); ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 'x';
    s += std::to_string(i + 1);
    if (m.e[i] > 1) {
      s += '^';
      s += std::to_string(m.e[i]);
    }
  }
  return s.empty() ? "1" : s;
}

}  // namespace lefmon
