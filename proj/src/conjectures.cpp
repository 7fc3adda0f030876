#include "lefmon/conjectures.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "lefmon/poly.hpp"
#include "lefmon/rng.hpp"

namespace lefmon {

namespace {

std::map<std::vector<int>, int> index_of(const std::vector<Monomial>& basis) {
  std::map<std::vector<int>, int> idx;
  for (size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i].e, static_cast<int>(i));
  return idx;
}

bool forms_independent(const std::vector<LinearForm>& forms, int n) {
  if (forms.empty()) return true;
  IntMatrix m(static_cast<int>(forms.size()), n);
  for (size_t r = 0; r < forms.size(); ++r)
    for (int c = 0; c < n; ++c) m.at(static_cast<int>(r), c) = static_cast<long>(forms[r].c[c]);
  return rank(m) == static_cast<long>(forms.size());
}

}  // namespace

bool ehu_spans(const MonomialIdeal& I, std::span<const LinearForm> forms, bool squared) {
  const int n = I.n(), d = I.d();
  const std::vector<Monomial> rows = monomials_of_degree(n, d);
  const auto row_idx = index_of(rows);

  std::vector<std::vector<Int>> columns;
  for (const Monomial& g : I.generators()) {
    std::vector<Int> col(rows.size(), Int(0));
    col[row_idx.at(g.e)] = 1;
    columns.push_back(std::move(col));
  }

  const int fdeg = squared ? 2 : 1;
  if (d >= fdeg) {
    std::vector<Poly> products;
    if (squared) {
      for (size_t a = 0; a < forms.size(); ++a)
        for (size_t b = a; b < forms.size(); ++b)
          products.push_back(poly_mul(poly_from_linear(forms[a].c), poly_from_linear(forms[b].c)));
    } else {
      for (const LinearForm& f : forms) products.push_back(poly_from_linear(f.c));
    }
    for (const Poly& p : products)
      for (const Monomial& u : monomials_of_degree(n, d - fdeg)) {
        std::vector<Int> col(rows.size(), Int(0));
        for (const auto& [key, coeff] : poly_mul_monomial(p, u)) col[row_idx.at(key)] = coeff;
        columns.push_back(std::move(col));
      }
  }

  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(columns.size()));
  for (size_t c = 0; c < columns.size(); ++c)
    for (size_t r = 0; r < rows.size(); ++r)
      m.at(static_cast<int>(r), static_cast<int>(c)) = columns[c][r];
  return rank(m) == static_cast<long>(rows.size());
}

namespace {

void validate_p(const MonomialIdeal& I, int p, size_t form_count) {
  if (p < 1 || p > I.n() + 1)
    throw std::invalid_argument("ehu_containment: p must lie in [1, n+1]");
  if (form_count != static_cast<size_t>(I.n() - p + 1))
    throw std::invalid_argument("ehu_containment: expected n-p+1 linear forms");
}

}  // namespace

EhuResult ehu_containment(const MonomialIdeal& I, int p, std::span<const LinearForm> forms,
                          bool squared) {
  validate_p(I, p, forms.size());
  std::vector<LinearForm> fs(forms.begin(), forms.end());
  for (const LinearForm& f : fs)
    if (static_cast<int>(f.c.size()) != I.n() || f.is_zero())
      throw std::invalid_argument("ehu_containment: malformed linear form");
  if (!forms_independent(fs, I.n()))
    throw std::invalid_argument("ehu_containment: linear forms are dependent");

  EhuResult res;
  res.squared = squared;
  res.p = p;
  res.trials.push_back({fs, ehu_spans(I, fs, squared)});
  res.any_contains = res.all_contain = res.trials.front().contains;
  return res;
}

EhuResult ehu_containment_random(const MonomialIdeal& I, int p, bool squared, std::uint64_t seed,
                                 int trials) {
  if (trials < 1) throw std::invalid_argument("ehu_containment: trials must be >= 1");
  const size_t count = static_cast<size_t>(I.n() - p + 1);
  validate_p(I, p, count);

  EhuResult res;
  res.squared = squared;
  res.p = p;
  res.any_contains = false;
  res.all_contain = true;
  DetRng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<LinearForm> fs;
    for (int guard = 0;; ++guard) {
      fs.clear();
      for (size_t i = 0; i < count; ++i) {
        LinearForm f;
        f.c.resize(I.n());
        for (int v = 0; v < I.n(); ++v) f.c[v] = rng.in(1, 1000000);
        fs.push_back(std::move(f));
      }
      if (forms_independent(fs, I.n())) break;
      if (guard > 64) throw std::logic_error("ehu_containment: cannot draw independent forms");
    }
    const bool ok = ehu_spans(I, fs, squared);
    res.trials.push_back({std::move(fs), ok});
    res.any_contains = res.any_contains || ok;
    res.all_contain = res.all_contain && ok;
  }
  return res;
}

Conj39Result conjecture39_check(const MonomialIdeal& I) {
  I.require_artinian("conjecture39_check");
  Conj39Result out;
  const auto av = conjecture39_exponent(I);
  out.sd_nonempty = av.has_value();
  if (!av) return out;
  out.a_vector = *av;
  out.a = std::accumulate(av->begin(), av->end(), 0);
  out.hypothesis_holds = out.a >= 1;
  if (!out.hypothesis_holds) return out;

  out.report = power_map_check(I, out.a, LinearForm::all_ones(I.n()));
  for (const RankCell& cell : out.report->cells) {
    if (cell.maximal) continue;
    // a candidate is only reported once the expansion oracle agrees
    const long oracle =
        rank(multiplication_matrix_by_expansion(I, cell.j, out.a, LinearForm::all_ones(I.n())));
    if (oracle != cell.rank)
      throw std::logic_error("conjecture39_check: oracle rank disagrees with matrix rank");
    out.counterexample = true;
  }
  return out;
}

MonomialIdeal sample_ideal(int n, int d, int gen_count, std::uint64_t seed) {
  if (n < 1 || d < 1) throw std::invalid_argument("sample_ideal: need n >= 1 and d >= 1");
  std::vector<Monomial> all = monomials_of_degree(n, d);
  if (gen_count < n)
    throw std::invalid_argument("sample_ideal: gen_count below the n pure powers");
  if (gen_count > static_cast<int>(all.size()))
    throw std::invalid_argument("sample_ideal: gen_count exceeds the monomial count");

  std::vector<Monomial> gens;
  std::vector<Monomial> pool;
  for (Monomial& m : all) {
    bool pure = false;
    for (int i = 0; i < n && !pure; ++i) pure = m.e[i] == d;
    if (pure)
      gens.push_back(std::move(m));
    else
      pool.push_back(std::move(m));
  }

  DetRng rng(seed);
  const int need = gen_count - n;
  for (int i = 0; i < need; ++i) {
    const size_t pick = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[pick]);
    gens.push_back(pool[i]);
  }
  return MonomialIdeal(n, d, std::move(gens));
}

namespace {

std::vector<LinearForm> coordinate_forms(int n, int p) {
  std::vector<LinearForm> fs;
  for (int v = p; v <= n; ++v) {
    LinearForm f;
    f.c.assign(n, 0);
    f.c[v - 1] = 1;
    fs.push_back(std::move(f));
  }
  return fs;
}

// Per-cell best of the canonical and random reports; maximal rank per cell
// is Zariski-open, so cellwise witnesses certify one common generic form.
bool slp_best_holds(const LefschetzReport& canonical, const LefschetzReport& random_rep) {
  for (size_t i = 0; i < canonical.cells.size(); ++i) {
    const bool ok = canonical.cells[i].maximal ||
                    (i < random_rep.cells.size() && random_rep.cells[i].maximal);
    if (!ok) return false;
  }
  return true;
}

ScanRecord compute_record(long index, const MonomialIdeal& I, const ScanConfig& cfg) {
  ScanRecord rec;
  rec.index = index;
  rec.n = I.n();
  rec.d = I.d();
  rec.gens = I.generators();
  const auto t0 = std::chrono::steady_clock::now();

  try {
    const bool suite = cfg.checks.count("theorem-suite") > 0;
    const bool want_betti = suite || cfg.checks.count("betti") || cfg.checks.count("ehu");
    const bool want_wlp = suite || cfg.checks.count("wlp");
    const bool want_slp = cfg.checks.count("slp") > 0;
    const bool want_ehu = suite || cfg.checks.count("ehu");
    const bool want_conj39 = suite || cfg.checks.count("conj39");

    const int n = I.n(), d = I.d();
    const HilbertFunction h = hilbert_function(I);
    rec.hilbert = h.values;

    if (want_betti) {
      const BettiTable b = betti_table(I);
      rec.linear_steps_r = linear_steps(b, n, d);
      rec.reg = regularity_checked(b, h);
    }
    if (want_wlp) rec.wlp = wlp_check(I);
    if (suite) {
      rec.xy = xy_hypothesis(I);
      rec.slp_pair = slp_hypothesis(I);
      rec.support = support_profile(I, rec.linear_steps_r.value());
    }
    if (want_slp || (suite && rec.slp_pair)) {
      rec.slp_canonical = slp_check(I, SlpMode{SlpMode::canonical, 0, 0});
      rec.slp_random =
          slp_check(I, SlpMode{SlpMode::random, mix_seed(cfg.seed, static_cast<std::uint64_t>(index)),
                               cfg.trials});
    }
    if (want_conj39) rec.conj39 = conjecture39_check(I);
    if (want_ehu) {
      const int r = rec.linear_steps_r.value();
      EhuResult e;
      e.squared = false;
      e.p = r + 1;
      // one deterministic coordinate choice, then seeded random draws; the
      // containment must hold for any independent choice
      {
        const std::vector<LinearForm> coords = coordinate_forms(n, r + 1);
        e.trials.push_back({coords, ehu_spans(I, coords, false)});
      }
      if (r < n) {
        EhuResult rnd = ehu_containment_random(
            I, r + 1, false, mix_seed(cfg.seed ^ 0x45485521ULL, static_cast<std::uint64_t>(index)),
            cfg.trials);
        for (EhuTrial& t : rnd.trials) e.trials.push_back(std::move(t));
      }
      e.any_contains = false;
      e.all_contain = true;
      for (const EhuTrial& t : e.trials) {
        e.any_contains = e.any_contains || t.contains;
        e.all_contain = e.all_contain && t.contains;
      }
      rec.ehu_linear = std::move(e);
    }

    if (suite) {
      rec.flags_evaluated = true;
      const int r = rec.linear_steps_r.value();
      const int reg = rec.reg.value();
      auto set = [&rec](char flag, FlagState st) { rec.flags[flag] = st; };
      auto check = [&rec, &set](char flag, bool ok) {
        set(flag, ok ? FlagState::ok : FlagState::violated);
        if (!ok) rec.violations.push_back(flag);
      };

      // (a) almost linear resolution (r >= n-1) forces the WLP
      if (r >= n - 1)
        check('a', rec.wlp->holds);
      else
        set('a', FlagState::not_applicable);

      // (b) almost linear: m^d inside I + (x_i + x_j)^2 for every pair
      if (r >= n - 1) {
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i)
          for (int j = i + 1; j <= n && ok; ++j) {
            const std::vector<LinearForm> fs = {LinearForm::pair(n, i, j)};
            ok = ehu_spans(I, fs, true);
          }
        check('b', ok);
      } else {
        set('b', FlagState::not_applicable);
      }

      // (c) n-2 linear steps with reg = d force the WLP
      if (r >= n - 2 && reg == d)
        check('c', rec.wlp->holds);
      else
        set('c', FlagState::not_applicable);

      // (d) xy hypothesis forces maximal rank of x (x_i+x_j)^{a+b}
      if (rec.xy) {
        const XYHypothesis& hyp = *rec.xy;
        check('d', power_map_check(I, hyp.a + hyp.b, LinearForm::pair(n, hyp.i, hyp.j)).holds);
      } else {
        set('d', FlagState::not_applicable);
      }

      // (e) the divisibility biconditional forces the SLP
      if (rec.slp_pair)
        check('e', slp_best_holds(*rec.slp_canonical, *rec.slp_random));
      else
        set('e', FlagState::not_applicable);

      // (f) surjectivity failure into degree d needs H(d) >= d+1
      {
        bool applicable = false;
        for (const RankCell& c : rec.wlp->cells)
          if (c.j == d - 1 && c.rank < c.tgt) applicable = true;
        if (applicable)
          check('f', h.at(d) >= d + 1);
        else
          set('f', FlagState::not_applicable);
      }

      // (g) support bound and the Hilbert bound it implies
      check('g', rec.support->support_bound_ok && rec.support->hilbert_bound_ok);

      // (h) every kernel witness satisfies the support-chain property
      {
        bool any = false, ok = true;
        for (const RankCell& c : rec.wlp->cells) {
          if (c.rank >= c.tgt) continue;  // not a surjectivity failure
          auto w = wlp_failure_witness(I, c.j);
          if (!w) {
            ok = false;
            break;
          }
          any = true;
          ok = ok && check_support_chain(I, *w).ok;
          rec.witnesses.push_back(std::move(*w));
          if (!ok) break;
        }
        if (any || !ok)
          check('h', ok);
        else
          set('h', FlagState::not_applicable);
      }

      // (i) linear containment holds for every independent choice tried
      check('i', rec.ehu_linear->all_contain);
    }
  } catch (const std::exception& ex) {
    rec.error = ex.what();
  }

  rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

std::vector<MonomialIdeal> enumerate_exhaustive(int n, int d, int gmin, int gmax) {
  const std::vector<Monomial> all = monomials_of_degree(n, d);
  std::vector<Monomial> pure, pool;
  for (const Monomial& m : all) {
    bool is_pure = false;
    for (int i = 0; i < n && !is_pure; ++i) is_pure = m.e[i] == d;
    (is_pure ? pure : pool).push_back(m);
  }
  const size_t K = pool.size();
  if (K > 22) throw std::invalid_argument("scan: exhaustive range too large, sample instead");

  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  auto subset_key = [&](const std::vector<Monomial>& subset) {
    std::vector<std::vector<int>> key;
    for (const Monomial& m : subset) key.push_back(m.e);
    std::sort(key.begin(), key.end());
    return key;
  };

  std::vector<MonomialIdeal> out;
  for (size_t mask = 0; mask < (size_t{1} << K); ++mask) {
    const int count = n + __builtin_popcountll(mask);
    if (count < gmin || count > gmax) continue;
    std::vector<Monomial> subset;
    for (size_t t = 0; t < K; ++t)
      if (mask & (size_t{1} << t)) subset.push_back(pool[t]);

    // canonical representative under the symmetric group on the variables
    const auto key = subset_key(subset);
    bool canonical = true;
    for (const std::vector<int>& perm : perms) {
      std::vector<Monomial> permuted;
      for (const Monomial& m : subset) {
        std::vector<int> e(n);
        for (int i = 0; i < n; ++i) e[perm[i]] = m.e[i];
        permuted.push_back(Monomial(std::move(e)));
      }
      if (subset_key(permuted) < key) {
        canonical = false;
        break;
      }
    }
    if (!canonical) continue;

    std::vector<Monomial> gens = pure;
    gens.insert(gens.end(), subset.begin(), subset.end());
    out.push_back(MonomialIdeal(n, d, std::move(gens)));
  }
  return out;
}

}  // namespace

int scan_exit_code(const ScanSummary& s) {
  if (s.total_violations > 0 || s.errors > 0) return 2;
  if (s.counterexample_candidates > 0) return 3;
  return 0;
}

ScanSummary scan(const ScanConfig& cfg, const std::function<void(const ScanRecord&)>& sink) {
  if (cfg.n_min < 1 || cfg.d_min < 1 || cfg.n_min > cfg.n_max || cfg.d_min > cfg.d_max)
    throw std::invalid_argument("scan: empty or invalid (n, d) range");
  if (!cfg.exhaustive && cfg.samples < 0) throw std::invalid_argument("scan: negative sample count");
  if (cfg.trials < 1) throw std::invalid_argument("scan: trials must be >= 1");
  static const std::set<std::string> known = {"wlp", "slp", "betti", "ehu", "conj39",
                                              "theorem-suite"};
  for (const std::string& c : cfg.checks)
    if (!known.count(c)) throw std::invalid_argument("scan: unknown check '" + c + "'");

  std::vector<MonomialIdeal> tasks;
  DetRng rng(cfg.seed);
  for (int n = cfg.n_min; n <= cfg.n_max; ++n)
    for (int d = cfg.d_min; d <= cfg.d_max; ++d) {
      Int total = binomial(n + d - 1, d);
      if (!total.fits_sint_p()) throw std::invalid_argument("scan: (n, d) cell too large");
      const int cap = static_cast<int>(total.get_si());
      const int gmin = std::max(cfg.gens_min == 0 ? n : cfg.gens_min, n);
      const int gmax = std::min(cfg.gens_max == 0 ? cap : cfg.gens_max, cap);
      if (gmin > gmax) continue;
      if (cfg.exhaustive) {
        for (MonomialIdeal& I : enumerate_exhaustive(n, d, gmin, gmax))
          tasks.push_back(std::move(I));
      } else {
        for (long s = 0; s < cfg.samples; ++s) {
          const int count = gmin + static_cast<int>(rng.below(gmax - gmin + 1));
          tasks.push_back(sample_ideal(n, d, count, rng.next()));
        }
      }
    }

  ScanSummary summary;
  auto absorb = [&](const ScanRecord& rec) {
    ++summary.ideals;
    if (rec.error) ++summary.errors;
    if (rec.wlp) {
      ++summary.wlp_checked;
      if (!rec.wlp->holds) ++summary.wlp_failures;
    }
    if (rec.slp_canonical && rec.slp_random) {
      ++summary.slp_checked;
      if (!rec.slp_canonical->holds) ++summary.slp_canonical_failures;
      if (!slp_best_holds(*rec.slp_canonical, *rec.slp_random)) ++summary.slp_failures;
    }
    for (char v : rec.violations) {
      ++summary.flag_violations[v];
      ++summary.total_violations;
    }
    if (rec.conj39 && rec.conj39->counterexample) ++summary.counterexample_candidates;
    sink(rec);
  };

  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1 || tasks.size() < 2) {
    for (size_t i = 0; i < tasks.size(); ++i) absorb(compute_record(static_cast<long>(i), tasks[i], cfg));
    return summary;
  }

  // workers fill slots, the caller's sink consumes them in input order
  std::vector<std::optional<ScanRecord>> slots(tasks.size());
  std::atomic<size_t> next{0};
  std::mutex mu;
  std::condition_variable cv;
  auto work = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      ScanRecord rec = compute_record(static_cast<long>(i), tasks[i], cfg);
      {
        std::lock_guard<std::mutex> lock(mu);
        slots[i] = std::move(rec);
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < jobs; ++i) pool.emplace_back(work);
  for (size_t i = 0; i < tasks.size(); ++i) {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return slots[i].has_value(); });
    ScanRecord rec = std::move(*slots[i]);
    slots[i].reset();
    lock.unlock();
    absorb(rec);
  }
  for (std::thread& t : pool) t.join();
  return summary;
}

}  // namespace lefmon
