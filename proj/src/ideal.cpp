#include "lefmon/ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lefmon/bigint.hpp"

namespace lefmon {

MonomialIdeal::MonomialIdeal(int n, int d, std::vector<Monomial> gens)
    : n_(n), d_(d), gens_(std::move(gens)) {
  if (n_ < 1) throw std::invalid_argument("ideal: variable count must be positive");
  if (d_ < 1) throw std::invalid_argument("ideal: generation degree must be positive");
  for (const Monomial& g : gens_) {
    if (g.vars() != n_) throw std::invalid_argument("ideal: generator has wrong variable count");
    if (g.degree() != d_)
      throw std::invalid_argument("ideal: generator " + to_string(g) + " is not of degree " +
                                  std::to_string(d_));
  }
  std::sort(gens_.begin(), gens_.end(), listing_less);
  // equal-degree monomial generators form a minimal generating set exactly
  // when they are distinct; duplicates are a caller error, not noise
  auto dup = std::adjacent_find(gens_.begin(), gens_.end());
  if (dup != gens_.end())
    throw std::invalid_argument("ideal: duplicate generator " + to_string(*dup));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::is_artinian() const {
  for (int i = 0; i < n_; ++i) {
    std::vector<int> e(n_, 0);
    e[i] = d_;
    Monomial p(std::move(e));
    if (std::find(gens_.begin(), gens_.end(), p) == gens_.end()) return false;
  }
  return true;
}

void MonomialIdeal::require_artinian(const char* caller) const {
  if (!is_artinian())
    throw std::invalid_argument(std::string(caller) +
                                ": ideal is not artinian (a pure power x_i^d is missing)");
}

std::vector<Monomial> quotient_basis(int n, std::span<const Monomial> gens, int k) {
  std::vector<Monomial> out;
  for (Monomial& m : monomials_of_degree(n, k)) {
    bool in_ideal = false;
    for (const Monomial& g : gens)
      if (g.divides(m)) {
        in_ideal = true;
        break;
      }
    if (!in_ideal) out.push_back(std::move(m));
  }
  return out;
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& I, int k) {
  if (k < 0) throw std::invalid_argument("standard_monomials: negative degree");
  return quotient_basis(I.n(), I.generators(), k);
}

HilbertFunction hilbert_function(const MonomialIdeal& I) {
  I.require_artinian("hilbert_function");
  HilbertFunction h;
  // every exponent of a standard monomial is < d, so degrees stop at n(d-1)
  const int hard_top = I.n() * (I.d() - 1);
  for (int k = 0;; ++k) {
    long c = static_cast<long>(standard_monomials(I, k).size());
    h.values.push_back(c);
    if (c == 0) break;
    if (k > hard_top) throw std::logic_error("hilbert_function: failed to reach zero");
  }
  return h;
}

SocleSet socle(const MonomialIdeal& I) {
  I.require_artinian("socle");
  SocleSet s;
  const HilbertFunction h = hilbert_function(I);
  for (int k = 0; k <= h.top(); ++k) {
    std::vector<Monomial> level;
    for (const Monomial& m : standard_monomials(I, k)) {
      bool all_in = true;
      for (int i = 0; i < I.n() && all_in; ++i) {
        Monomial up = m;
        ++up.e[i];
        all_in = I.contains(up);
      }
      if (all_in) level.push_back(m);
    }
    if (!level.empty()) s.by_degree.emplace(k, std::move(level));
  }
  return s;
}

SupportProfile support_profile(const MonomialIdeal& I, int r) {
  I.require_artinian("support_profile");
  if (r < 0) throw std::invalid_argument("support_profile: negative step count");
  SupportProfile out;
  const HilbertFunction h = hilbert_function(I);
  for (const Monomial& m : standard_monomials(I, I.d())) {
    int s = m.support_size();
    if (!out.min_support || s < *out.min_support) out.min_support = s;
  }
  out.support_bound_ok = !out.min_support || *out.min_support >= r + 1;
  out.hd = h.at(I.d());
  Int bound = binomial(I.n(), r + 1) * h.at(I.d() - r - 1);
  if (!bound.fits_slong_p())
    throw std::invalid_argument("support_profile: bound out of range");
  out.hd_bound = bound.get_si();
  out.hilbert_bound_ok = out.hd <= out.hd_bound;
  return out;
}

}  // namespace lefmon
