#include "lefmon/segments.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lefmon {

namespace {

Monomial shift(const Monomial& m, int from, int to) {
  Monomial r = m;
  --r.e[from - 1];
  ++r.e[to - 1];
  return r;
}

}  // namespace

std::vector<LineSegment> segment_decomposition(const MonomialIdeal& I, int i, int j) {
  if (!(1 <= i && i < j && j <= I.n()))
    throw std::invalid_argument("segment_decomposition: need 1 <= i < j <= n");

  // group by the exponents frozen on the other variables
  std::map<std::vector<int>, std::vector<Monomial>> groups;
  for (const Monomial& m : standard_monomials(I, I.d())) {
    if (m.deg(i) < 1 || m.deg(j) < 1) continue;
    std::vector<int> key;
    for (int v = 1; v <= I.n(); ++v)
      if (v != i && v != j) key.push_back(m.deg(v));
    groups[key].push_back(m);
  }

  std::vector<LineSegment> out;
  for (auto& [key, monos] : groups) {
    std::sort(monos.begin(), monos.end(),
              [i](const Monomial& a, const Monomial& b) { return a.deg(i) > b.deg(i); });
    size_t start = 0;
    while (start < monos.size()) {
      size_t stop = start + 1;
      while (stop < monos.size() && monos[stop].deg(i) == monos[stop - 1].deg(i) - 1) ++stop;
      LineSegment seg;
      seg.i = i;
      seg.j = j;
      seg.monomials.assign(monos.begin() + start, monos.begin() + stop);
      seg.maximal = I.contains(shift(seg.monomials.front(), j, i)) &&
                    I.contains(shift(seg.monomials.back(), i, j));
      out.push_back(std::move(seg));
      start = stop;
    }
  }
  return out;
}

std::optional<XYHypothesis> xy_hypothesis(const MonomialIdeal& I) {
  I.require_artinian("xy_hypothesis");
  const std::vector<Monomial> sd = standard_monomials(I, I.d());
  if (sd.empty()) return std::nullopt;

  std::optional<XYHypothesis> best;
  for (int i = 1; i <= I.n(); ++i)
    for (int j = i + 1; j <= I.n(); ++j) {
      int a = sd.front().deg(i), b = sd.front().deg(j);
      for (const Monomial& m : sd) {
        a = std::min(a, m.deg(i));
        b = std::min(b, m.deg(j));
      }
      if (a + b >= 1 && (!best || a + b > best->a + best->b)) best = XYHypothesis{i, j, a, b};
    }
  return best;
}

std::optional<std::pair<int, int>> slp_hypothesis(const MonomialIdeal& I) {
  I.require_artinian("slp_hypothesis");
  const std::vector<Monomial> all = monomials_of_degree(I.n(), I.d());
  for (int i = 1; i <= I.n(); ++i)
    for (int j = i + 1; j <= I.n(); ++j) {
      bool match = true;
      for (const Monomial& m : all) {
        const bool divisible = m.deg(i) >= 1 && m.deg(j) >= 1;
        if (divisible == I.contains(m)) {
          match = false;
          break;
        }
      }
      if (match) return std::make_pair(i, j);
    }
  return std::nullopt;
}

std::optional<std::vector<int>> conjecture39_exponent(const MonomialIdeal& I) {
  I.require_artinian("conjecture39_exponent");
  const std::vector<Monomial> sd = standard_monomials(I, I.d());
  if (sd.empty()) return std::nullopt;
  std::vector<int> a = sd.front().e;
  for (const Monomial& m : sd)
    for (int v = 0; v < I.n(); ++v) a[v] = std::min(a[v], m.e[v]);
  return a;
}

}  // namespace lefmon
