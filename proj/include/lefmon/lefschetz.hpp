#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lefmon/ideal.hpp"
#include "lefmon/matrix.hpp"

namespace lefmon {

struct LinearForm {
  std::vector<long long> c;

  static LinearForm all_ones(int n) { return LinearForm{std::vector<long long>(n, 1)}; }
  static LinearForm pair(int n, int i, int j) {
    std::vector<long long> v(n, 0);
    v[i - 1] = 1;
    v[j - 1] = 1;
    return LinearForm{v};
  }
  bool is_zero() const {
    for (long long x : c)
      if (x != 0) return false;
    return true;
  }
};

// One rank verdict for x ell^t : (S/I)_j -> (S/I)_{j+t}.
struct RankCell {
  int j = 0;
  int t = 1;
  long src = 0;
  long tgt = 0;
  long rank = 0;
  bool maximal = false;
};

// Kernel element of a differentiation map, written on the dual standard
// monomial basis. Integer coefficients with content 1 and positive leading
// coefficient in listing order; re-checkable against the matrix.
struct KernelForm {
  int degree = 0;
  std::vector<std::pair<Monomial, Int>> terms;
};

struct LefschetzReport {
  std::string check;  // "wlp" | "slp" | "power"
  std::string mode;   // "canonical" | "random"
  bool holds = true;
  std::vector<RankCell> cells;
  std::vector<int> failure_degrees;  // source degrees of non-maximal cells
  std::vector<KernelForm> witnesses;
};

// Matrix of x ell^t : (S/I)_j -> (S/I)_{j+t} on the standard-monomial
// listings. Entry (v,u) = t!/prod((v-u)_i!) * prod c_i^{(v-u)_i} when u
// divides v, else 0.
IntMatrix multiplication_matrix(const MonomialIdeal& I, int j, int t, const LinearForm& f);

// Same map over an arbitrary generator list (mixed degrees allowed).
IntMatrix multiplication_matrix(int n, std::span<const Monomial> gens, int j, int t,
                                const LinearForm& f);

// Reference construction by expanding ell^t * u as a polynomial and dropping
// the monomials of I. Independent of the closed-form entry rule above; used
// to re-verify any counterexample candidate before it is reported.
IntMatrix multiplication_matrix_by_expansion(const MonomialIdeal& I, int j, int t,
                                             const LinearForm& f);

// Matrix of the dual action ell o (-) : (I^{-1})_k -> (I^{-1})_{k-1};
// entry (u', u) = c_i * u_i when u = u' * y_i. In debug builds every call
// checks rank equality with the corresponding multiplication matrix.
IntMatrix differentiation_matrix(const MonomialIdeal& I, int k, const LinearForm& f);

// x (x_1+...+x_n) in every degree 0..top. The canonical form decides WLP for
// monomial ideals.
LefschetzReport wlp_check(const MonomialIdeal& I);

struct SlpMode {
  enum Kind { canonical, random } kind = canonical;
  std::uint64_t seed = 0;
  int trials = 5;
};

// All (j, t) with both graded pieces nonzero, t up to top+1. Random mode
// draws integer coefficients in [1, 10^6] per trial and keeps the best rank
// per cell: maximal rank is open, so any witness certifies the generic form.
LefschetzReport slp_check(const MonomialIdeal& I, const SlpMode& mode);

// Single power t, every degree.
LefschetzReport power_map_check(const MonomialIdeal& I, int t, const LinearForm& f);

// Nonzero kernel element of the canonical differentiation map
// (I^{-1})_{j+1} -> (I^{-1})_j; empty when x ell at source degree j is
// surjective (no dual kernel to exhibit).
std::optional<KernelForm> wlp_failure_witness(const MonomialIdeal& I, int j);

struct SupportChainViolation {
  Monomial m;
  int var = 0;
  int missing = 0;  // no support monomial with deg_var == missing
};
struct SupportChainResult {
  bool ok = true;
  std::vector<SupportChainViolation> violations;
};

// The chain property alone: for every m in the support, every variable i
// dividing m and every 0 <= j < deg_i(m), some support monomial has
// i-degree exactly j.
SupportChainResult support_chain_property(const std::vector<Monomial>& support);

// Verifies F is a genuine kernel form of the canonical differentiation map
// (rejects otherwise), then checks the chain property of its support.
SupportChainResult check_support_chain(const MonomialIdeal& I, const KernelForm& F);

}  // namespace lefmon
