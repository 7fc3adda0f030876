#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lefmon/ideal.hpp"
#include "lefmon/lefschetz.hpp"
#include "lefmon/resolution.hpp"
#include "lefmon/segments.hpp"

namespace lefmon {

// Spanning decision: does the degree-d piece of I + (forms) (or
// I + (forms)^2) fill S_d? Decided by the exact rank of the matrix whose
// columns are the generators of I and the products form * u (or
// form_a * form_b * u) over the monomials u of the complementary degree.
bool ehu_spans(const MonomialIdeal& I, std::span<const LinearForm> forms, bool squared);

struct EhuTrial {
  std::vector<LinearForm> forms;
  bool contains = false;
};

// p in [1, n+1]; the form count is n-p+1 (zero forms degenerates to
// m^d <= I). A single containing trial certifies the generic statement;
// all-trials failure is evidence only.
struct EhuResult {
  bool squared = false;
  int p = 1;
  std::vector<EhuTrial> trials;
  bool any_contains = false;
  bool all_contain = false;
};

EhuResult ehu_containment(const MonomialIdeal& I, int p, std::span<const LinearForm> forms,
                          bool squared);
EhuResult ehu_containment_random(const MonomialIdeal& I, int p, bool squared, std::uint64_t seed,
                                 int trials);

// x ell^a with ell = x_1+...+x_n and a = sum of the componentwise-minimum
// exponent vector of the degree-d standard monomials. A failing cell is
// re-verified through the expansion oracle before being reported.
struct Conj39Result {
  bool sd_nonempty = false;
  std::vector<int> a_vector;
  int a = 0;
  bool hypothesis_holds = false;  // sd_nonempty && a >= 1
  std::optional<LefschetzReport> report;
  bool counterexample = false;
};
Conj39Result conjecture39_check(const MonomialIdeal& I);

// Artinian sample: the n pure powers plus gen_count - n distinct uniform
// degree-d monomials; deterministic in the seed.
MonomialIdeal sample_ideal(int n, int d, int gen_count, std::uint64_t seed);

struct ScanConfig {
  int n_min = 3, n_max = 3;
  int d_min = 3, d_max = 3;
  int gens_min = 0, gens_max = 0;  // 0 = full range [n, C(n+d-1,d)]
  bool exhaustive = false;
  long samples = 0;  // per (n,d) cell when not exhaustive
  std::uint64_t seed = 0;
  std::set<std::string> checks = {"theorem-suite"};
  int trials = 5;
  int jobs = 1;
  bool timings = false;
};

enum class FlagState { ok, violated, not_applicable };

struct ScanRecord {
  long index = 0;
  int n = 0, d = 0;
  std::vector<Monomial> gens;
  std::optional<std::string> error;

  std::vector<long> hilbert;
  std::optional<int> linear_steps_r;
  std::optional<int> reg;
  std::optional<LefschetzReport> wlp;
  std::optional<LefschetzReport> slp_canonical;
  std::optional<LefschetzReport> slp_random;
  std::optional<XYHypothesis> xy;
  std::optional<std::pair<int, int>> slp_pair;
  std::optional<Conj39Result> conj39;
  std::optional<EhuResult> ehu_linear;  // flag (i) evidence, p = r+1
  std::optional<SupportProfile> support;
  std::vector<KernelForm> witnesses;

  bool flags_evaluated = false;
  std::map<char, FlagState> flags;  // 'a'..'i'
  std::vector<char> violations;

  double ms = 0.0;
};

struct ScanSummary {
  long ideals = 0;
  long errors = 0;
  long wlp_checked = 0, wlp_failures = 0;
  long slp_checked = 0, slp_canonical_failures = 0, slp_failures = 0;
  std::map<char, long> flag_violations;
  long total_violations = 0;
  long counterexample_candidates = 0;
};

// One record per ideal, delivered to the sink in input order regardless of
// worker scheduling; per-ideal failures are recorded and never abort the
// stream.
ScanSummary scan(const ScanConfig& cfg, const std::function<void(const ScanRecord&)>& sink);

// 0 = clean, 2 = theorem-consistency violations, 3 = counterexample
// candidates (violations take precedence: they mean a bug, not a finding).
int scan_exit_code(const ScanSummary& s);

}  // namespace lefmon
