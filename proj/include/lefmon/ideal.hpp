#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lefmon/monomial.hpp"

namespace lefmon {

// Monomial ideal generated by distinct monomials of one degree d in n
// variables. Artinian exactly when every pure power x_i^d is a generator.
class MonomialIdeal {
 public:
  MonomialIdeal(int n, int d, std::vector<Monomial> gens);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  // Monomial membership: some generator divides m.
  bool contains(const Monomial& m) const;

  bool is_artinian() const;
  void require_artinian(const char* caller) const;

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<Monomial> gens_;  // listing order
};

// Degree-k monomial basis of S modulo an arbitrary finite generator set
// (no single-degree requirement), in listing order. The validated-ideal
// entry point below and the two-variable Toeplitz oracle both sit on this.
std::vector<Monomial> quotient_basis(int n, std::span<const Monomial> gens, int k);

// Standard monomials of degree k: the monomial basis of (S/I)_k, and by
// duality of (I^{-1})_k. Length = H_{S/I}(k).
std::vector<Monomial> standard_monomials(const MonomialIdeal& I, int k);

struct HilbertFunction {
  // H(0), ..., H(top), 0 — the trailing zero is stored.
  std::vector<long> values;

  int top() const { return static_cast<int>(values.size()) - 2; }
  long at(int k) const {
    return (k < 0 || k >= static_cast<int>(values.size())) ? 0 : values[k];
  }
};

// Computed by direct enumeration up to the first zero value, which persists
// for artinian algebras. Rejects non-artinian input.
HilbertFunction hilbert_function(const MonomialIdeal& I);

// Monomial socle, degree by degree: standard m with x_i * m in I for all i.
struct SocleSet {
  std::map<int, std::vector<Monomial>> by_degree;
};
SocleSet socle(const MonomialIdeal& I);

// Support bound data for a given linear-step count r:
// every degree-d standard monomial must satisfy |supp(m)| >= r+1, and
// H(d) <= C(n, r+1) * H(d-r-1) (H at negative index is 0).
struct SupportProfile {
  std::optional<int> min_support;  // empty when (S/I)_d = 0
  bool support_bound_ok = true;
  long hd = 0;
  long hd_bound = 0;
  bool hilbert_bound_ok = true;
};
SupportProfile support_profile(const MonomialIdeal& I, int r);

}  // namespace lefmon
