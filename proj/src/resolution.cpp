#include "lefmon/resolution.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lefmon/matrix.hpp"

namespace lefmon {

std::vector<std::vector<int>> lcm_multidegrees(const MonomialIdeal& I) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  for (const Monomial& g : I.generators())
    if (seen.insert(g.e).second) work.push_back(g.e);

  for (size_t i = 0; i < work.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      std::vector<int> l(work[i].size());
      for (size_t k = 0; k < l.size(); ++k) l[k] = std::max(work[i][k], work[j][k]);
      if (seen.insert(l).second) work.push_back(std::move(l));
    }

  std::sort(work.begin(), work.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    int da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    return a > b;  // lex descending within a total degree
  });
  return work;
}

SimplicialComplexFaces upper_koszul_complex(const MonomialIdeal& I, const std::vector<int>& b) {
  if (static_cast<int>(b.size()) != I.n())
    throw std::invalid_argument("upper_koszul_complex: wrong multidegree length");
  for (int x : b)
    if (x < 0) throw std::invalid_argument("upper_koszul_complex: negative multidegree");

  std::vector<int> support;
  for (int i = 0; i < I.n(); ++i)
    if (b[i] >= 1) support.push_back(i + 1);

  SimplicialComplexFaces c;
  const size_t s = support.size();
  for (size_t mask = 0; mask < (size_t{1} << s); ++mask) {
    std::vector<int> reduced = b;
    std::vector<int> face;
    for (size_t t = 0; t < s; ++t)
      if (mask & (size_t{1} << t)) {
        face.push_back(support[t]);
        --reduced[support[t] - 1];
      }
    if (I.contains(Monomial(reduced))) c.faces.push_back(std::move(face));
  }
  std::sort(c.faces.begin(), c.faces.end(),
            [](const std::vector<int>& a, const std::vector<int>& b2) {
              if (a.size() != b2.size()) return a.size() < b2.size();
              return a < b2;
            });
  return c;
}

std::vector<long> reduced_homology_dims(const SimplicialComplexFaces& c) {
  if (c.faces.empty()) return {0};

  int maxdim = -1;
  std::set<std::vector<int>> seen;
  for (const std::vector<int>& f : c.faces) {
    for (size_t i = 0; i + 1 < f.size(); ++i)
      if (f[i] >= f[i + 1])
        throw std::invalid_argument("reduced_homology_dims: face vertices must be sorted");
    for (int v : f)
      if (v < 1) throw std::invalid_argument("reduced_homology_dims: vertex labels are 1-based");
    if (!seen.insert(f).second)
      throw std::invalid_argument("reduced_homology_dims: duplicate face");
    maxdim = std::max(maxdim, static_cast<int>(f.size()) - 1);
  }
  for (const std::vector<int>& f : c.faces)
    for (size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<int> sub;
      for (size_t i = 0; i < f.size(); ++i)
        if (i != drop) sub.push_back(f[i]);
      if (!seen.count(sub))
        throw std::invalid_argument("reduced_homology_dims: face set is not downward closed");
    }

  // level[q+1] = q-faces; level[0] = the empty face
  std::vector<std::vector<std::vector<int>>> level(maxdim + 2);
  for (const std::vector<int>& f : c.faces) level[f.size()].push_back(f);

  std::map<std::vector<int>, int> pos;
  auto index_level = [&pos](const std::vector<std::vector<int>>& faces) {
    pos.clear();
    for (size_t i = 0; i < faces.size(); ++i) pos.emplace(faces[i], static_cast<int>(i));
  };

  // boundary_rank[q+1] = rank of d_q : C_q -> C_{q-1}; d_0 is the
  // augmentation to the empty face
  std::vector<long> boundary_rank(maxdim + 3, 0);
  for (int q = 0; q <= maxdim; ++q) {
    const auto& rows = level[q];      // (q-1)-faces
    const auto& cols = level[q + 1];  // q-faces
    if (rows.empty() || cols.empty()) continue;
    index_level(rows);
    IntMatrix d(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
      const std::vector<int>& f = cols[j];
      int sign = 1;
      for (size_t drop = 0; drop < f.size(); ++drop) {
        std::vector<int> sub;
        for (size_t i = 0; i < f.size(); ++i)
          if (i != drop) sub.push_back(f[i]);
        d.at(pos.at(sub), static_cast<int>(j)) = sign;
        sign = -sign;
      }
    }
    boundary_rank[q + 1] = rank(d);
  }

  std::vector<long> dims(maxdim + 2, 0);
  for (int q = -1; q <= maxdim; ++q)
    dims[q + 1] = static_cast<long>(level[q + 1].size()) - boundary_rank[q + 1] -
                  boundary_rank[q + 2];
  return dims;
}

std::vector<MultigradedBetti> betti_multigraded(const MonomialIdeal& I) {
  std::vector<MultigradedBetti> out;
  for (const std::vector<int>& b : lcm_multidegrees(I)) {
    const std::vector<long> dims = reduced_homology_dims(upper_koszul_complex(I, b));
    for (size_t slot = 0; slot < dims.size(); ++slot) {
      if (dims[slot] == 0) continue;
      // slot = q+1 with q = i-2 for beta_{i,b}(S/I)
      out.push_back({b, static_cast<int>(slot) + 1, dims[slot]});
    }
  }
  return out;
}

BettiTable betti_table(const MonomialIdeal& I) {
  BettiTable t;
  t.entries[{0, 0}] = 1;
  for (const MultigradedBetti& mb : betti_multigraded(I)) {
    int total = 0;
    for (int x : mb.multidegree) total += x;
    t.entries[{mb.i, total}] += mb.value;
  }
  return t;
}

int linear_steps(const BettiTable& b, int n, int d) {
  for (int i = 1; i <= n; ++i)
    for (const auto& [key, value] : b.entries) {
      if (key.first != i || value == 0) continue;
      if (key.second >= i + d) return i - 1;
    }
  return n;
}

int regularity_checked(const BettiTable& b, const HilbertFunction& h) {
  int from_betti = 0;
  for (const auto& [key, value] : b.entries)
    if (value != 0) from_betti = std::max(from_betti, key.second - key.first);
  if (from_betti != h.top())
    throw std::logic_error("regularity: Betti table and Hilbert function disagree");
  return from_betti;
}

int regularity(const MonomialIdeal& I) {
  I.require_artinian("regularity");
  return regularity_checked(betti_table(I), hilbert_function(I));
}

}  // namespace lefmon
