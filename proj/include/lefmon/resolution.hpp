#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lefmon/ideal.hpp"

namespace lefmon {

// Graded Betti numbers of S/I; only nonzero entries are stored, plus
// (0,0) -> 1.
struct BettiTable {
  std::map<std::pair<int, int>, long> entries;

  long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
};

// beta_{i,b}(S/I) for a single multidegree b, i >= 1.
struct MultigradedBetti {
  std::vector<int> multidegree;
  int i = 0;
  long value = 0;
};

// Explicit face list; every face is a sorted vertex list (1-based labels)
// and the list is closed under subsets. {} is the (-1)-dimensional face.
struct SimplicialComplexFaces {
  std::vector<std::vector<int>> faces;
};

// Componentwise lcms of nonempty generator subsets, computed as the closure
// of the generator set under pairwise lcm, deduplicated; sorted by total
// degree then lex-descending.
std::vector<std::vector<int>> lcm_multidegrees(const MonomialIdeal& I);

// Upper Koszul complex K^b(I): subsets tau of supp(b) with x^{b - e_tau}
// in I. Downward closed because multiples of ideal monomials stay inside.
SimplicialComplexFaces upper_koszul_complex(const MonomialIdeal& I, const std::vector<int>& b);

// Reduced homology dimensions over Q via boundary-matrix ranks; slot q+1
// holds dim H~_q, starting at H~_{-1}. The void complex yields {0}, the
// complex {<>} yields {1}. Rejects face lists that are not downward closed.
std::vector<long> reduced_homology_dims(const SimplicialComplexFaces& c);

// beta_{i+1,b}(S/I) = dim H~_{i-1}(K^b(I)), accumulated over the lcm
// lattice.
std::vector<MultigradedBetti> betti_multigraded(const MonomialIdeal& I);
BettiTable betti_table(const MonomialIdeal& I);

// Largest r <= n with beta_{i,j} = 0 for all 1 <= i <= r, j >= i+d;
// n means the resolution is fully linear.
int linear_steps(const BettiTable& b, int n, int d);

// max{j-i : beta_{i,j} != 0} from the table, asserted equal to the top
// nonzero Hilbert degree; disagreement is a hard internal error.
int regularity_checked(const BettiTable& b, const HilbertFunction& h);
int regularity(const MonomialIdeal& I);

}  // namespace lefmon
