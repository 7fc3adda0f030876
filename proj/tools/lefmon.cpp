#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "lefmon/conjectures.hpp"
#include "lefmon/json_io.hpp"
#include "lefmon/lefschetz.hpp"
#include "lefmon/resolution.hpp"
#include "lefmon/segments.hpp"
#include "lefmon/text.hpp"
#include "lefmon/toeplitz.hpp"

namespace {

using namespace lefmon;

constexpr int kSchema = 1;

struct IdealArgs {
  std::string file;
  std::string gens;
  int n = 0;
  int d = 0;
};

void add_ideal_options(CLI::App* cmd, IdealArgs& args) {
  cmd->add_option("--ideal", args.file, "ideal as a JSON file {\"n\",\"d\",\"gens\"}");
  cmd->add_option("--gens", args.gens, "generators, e.g. \"x1^3,x2^3,x3^3,x1*x2*x3\"");
  cmd->add_option("--n", args.n, "number of variables (with --gens)");
  cmd->add_option("--d", args.d, "generation degree (with --gens)");
}

MonomialIdeal load_ideal(const IdealArgs& args) {
  if (!args.file.empty()) {
    std::ifstream in(args.file);
    if (!in) throw std::invalid_argument("cannot open ideal file '" + args.file + "'");
    nlohmann::json j;
    in >> j;
    return ideal_of_json(j);
  }
  if (args.gens.empty())
    throw std::invalid_argument("an ideal is required: --ideal <file> or --gens with --n/--d");
  if (args.n < 1 || args.d < 1) throw std::invalid_argument("--gens needs positive --n and --d");
  return MonomialIdeal(args.n, args.d, parse_generators(args.gens, args.n));
}

void emit(const ojson& j, bool pretty) {
  if (pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

ojson base_json(const std::string& command) {
  ojson j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

// --strict pins every randomized run to an explicit seed
void require_seed(bool strict_random, const CLI::Option* seed_opt) {
  if (strict_random && seed_opt->count() == 0)
    throw std::invalid_argument("--strict requires an explicit --seed for randomized commands");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lefmon: Lefschetz properties, Betti tables and conjecture scans for artinian monomial "
      "algebras, in exact arithmetic"};
  app.require_subcommand(1);
  bool pretty = false;
  bool strict = false;
  app.add_flag("--pretty", pretty, "indent JSON output");
  app.add_flag("--strict", strict, "require explicit seeds for randomized commands");

  IdealArgs ideal_args;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of S/I");
  add_ideal_options(hilbert, ideal_args);

  auto* socle_cmd = app.add_subcommand("socle", "monomial socle of S/I by degree");
  add_ideal_options(socle_cmd, ideal_args);

  auto* wlp = app.add_subcommand("wlp", "weak Lefschetz property via the all-ones form");
  add_ideal_options(wlp, ideal_args);
  bool wlp_witness = true;
  wlp->add_flag("--witnesses,!--no-witnesses", wlp_witness,
                "attach kernel witnesses at surjectivity failures (default on)");

  auto* slp = app.add_subcommand("slp", "strong Lefschetz property");
  add_ideal_options(slp, ideal_args);
  std::string slp_mode = "canonical";
  std::uint64_t slp_seed = 0;
  int slp_trials = 5;
  slp->add_option("--mode", slp_mode, "canonical | random")
      ->check(CLI::IsMember({"canonical", "random"}));
  auto* slp_seed_opt = slp->add_option("--seed", slp_seed, "seed for random mode");
  slp->add_option("--trials", slp_trials, "random trials (default 5)");

  auto* betti = app.add_subcommand("betti", "graded Betti table, linear steps, regularity");
  add_ideal_options(betti, ideal_args);

  auto* segments_cmd =
      app.add_subcommand("segments", "line-segment decomposition and divisibility hypotheses");
  add_ideal_options(segments_cmd, ideal_args);
  int seg_i = 0, seg_j = 0;
  segments_cmd->add_option("--i", seg_i, "first axis (default: all pairs)");
  segments_cmd->add_option("--j", seg_j, "second axis");

  auto* toeplitz_cmd = app.add_subcommand("toeplitz", "banded binomial Toeplitz matrix T_{n,m,k}");
  int tz_n = 0, tz_m = 1, tz_k = 0;
  std::string tz_conv = "standard";
  bool tz_cross = false;
  toeplitz_cmd->add_option("--n", tz_n, "binomial row")->required();
  toeplitz_cmd->add_option("--m", tz_m, "matrix size")->required();
  toeplitz_cmd->add_option("--k", tz_k, "band offset")->required();
  toeplitz_cmd->add_option("--convention", tz_conv, "standard | zero0 (zero0 sets C(n,0)=0)")
      ->check(CLI::IsMember({"standard", "zero0"}));
  toeplitz_cmd->add_flag("--cross-check", tz_cross,
                         "also compare against the two-variable multiplication matrix");

  auto* ehu = app.add_subcommand("ehu", "containment of m^d in I + (forms) or I + (forms)^2");
  add_ideal_options(ehu, ideal_args);
  std::string ehu_forms;
  bool ehu_squared = false;
  bool ehu_random = false;
  int ehu_p = 0;
  std::uint64_t ehu_seed = 0;
  int ehu_trials = 5;
  ehu->add_option("--forms", ehu_forms, "comma-separated linear forms, e.g. \"x-y, x+z\"");
  ehu->add_flag("--squared", ehu_squared, "use the squared ideal of forms");
  ehu->add_flag("--random", ehu_random, "draw random independent forms instead");
  ehu->add_option("--p", ehu_p, "first form index: n-p+1 forms (default from --forms count)");
  auto* ehu_seed_opt = ehu->add_option("--seed", ehu_seed, "seed for --random");
  ehu->add_option("--trials", ehu_trials, "trials for --random (default 5)");

  auto* conj39 = app.add_subcommand("conj39", "power-map conjecture check for one ideal");
  add_ideal_options(conj39, ideal_args);

  auto* witness = app.add_subcommand("witness", "kernel witness of a surjectivity failure");
  add_ideal_options(witness, ideal_args);
  int witness_degree = -1;
  witness->add_option("--degree", witness_degree,
                      "source degree j (default: first failure of the wlp check)");

  auto* scan_cmd = app.add_subcommand("scan", "stream JSONL records over many ideals");
  ScanConfig cfg;
  int scan_n = 0, scan_d = 0;
  std::string checks_csv = "theorem-suite";
  auto* scan_seed_opt = scan_cmd->add_option("--seed", cfg.seed, "sampling seed");
  scan_cmd->add_option("--n", scan_n, "fixed variable count (overrides --n-min/--n-max)");
  scan_cmd->add_option("--d", scan_d, "fixed degree (overrides --d-min/--d-max)");
  scan_cmd->add_option("--n-min", cfg.n_min, "smallest variable count (default 3)");
  scan_cmd->add_option("--n-max", cfg.n_max, "largest variable count (default 3)");
  scan_cmd->add_option("--d-min", cfg.d_min, "smallest degree (default 3)");
  scan_cmd->add_option("--d-max", cfg.d_max, "largest degree (default 3)");
  scan_cmd->add_option("--gens-min", cfg.gens_min, "smallest generator count (default n)");
  scan_cmd->add_option("--gens-max", cfg.gens_max, "largest generator count (default all)");
  scan_cmd->add_flag("--exhaustive", cfg.exhaustive,
                     "enumerate all ideals up to variable permutation");
  scan_cmd->add_option("--samples", cfg.samples, "samples per (n,d) cell");
  scan_cmd->add_option("--checks", checks_csv,
                       "comma-separated: wlp,slp,betti,ehu,conj39,theorem-suite");
  scan_cmd->add_option("--trials", cfg.trials, "random trials per randomized check (default 5)");
  scan_cmd->add_option("--jobs", cfg.jobs, "worker threads (default 1)");
  scan_cmd->add_flag("--timings", cfg.timings, "include per-ideal timings (breaks byte stability)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 1;
  }

  try {
    if (*hilbert) {
      const MonomialIdeal I = load_ideal(ideal_args);
      ojson j = base_json("hilbert");
      j["ideal"] = json_of_ideal(I);
      const HilbertFunction h = hilbert_function(I);
      j["hilbert"] = h.values;
      j["top"] = h.top();
      emit(j, pretty);
    } else if (*socle_cmd) {
      const MonomialIdeal I = load_ideal(ideal_args);
      ojson j = base_json("socle");
      j["ideal"] = json_of_ideal(I);
      j["socle"] = json_of_socle(socle(I));
      emit(j, pretty);
    } else if (*wlp) {
      const MonomialIdeal I = load_ideal(ideal_args);
      LefschetzReport rep = wlp_check(I);
      if (wlp_witness)
        for (const RankCell& c : rep.cells) {
          if (c.maximal) continue;
          if (auto w = wlp_failure_witness(I, c.j)) rep.witnesses.push_back(std::move(*w));
        }
      ojson j = base_json("wlp");
      j["ideal"] = json_of_ideal(I);
      j.update(json_of_report(rep));
      emit(j, pretty);
    } else if (*slp) {
      require_seed(strict && slp_mode == "random", slp_seed_opt);
      const MonomialIdeal I = load_ideal(ideal_args);
      SlpMode mode;
      mode.kind = slp_mode == "random" ? SlpMode::random : SlpMode::canonical;
      mode.seed = slp_seed;
      mode.trials = slp_trials;
      ojson j = base_json("slp");
      j["ideal"] = json_of_ideal(I);
      j.update(json_of_report(slp_check(I, mode)));
      emit(j, pretty);
    } else if (*betti) {
      const MonomialIdeal I = load_ideal(ideal_args);
      const BettiTable b = betti_table(I);
      const int steps = linear_steps(b, I.n(), I.d());
      const int reg = regularity_checked(b, hilbert_function(I));
      ojson j = base_json("betti");
      j["ideal"] = json_of_ideal(I);
      j.update(json_of_betti(b, steps, reg));
      emit(j, pretty);
    } else if (*segments_cmd) {
      const MonomialIdeal I = load_ideal(ideal_args);
      if ((seg_i == 0) != (seg_j == 0))
        throw std::invalid_argument("segments: pass both --i and --j or neither");
      ojson j = base_json("segments");
      j["ideal"] = json_of_ideal(I);
      std::vector<LineSegment> segs;
      if (seg_i != 0) {
        segs = segment_decomposition(I, seg_i, seg_j);
      } else {
        for (int a = 1; a <= I.n(); ++a)
          for (int b = a + 1; b <= I.n(); ++b)
            for (LineSegment& s : segment_decomposition(I, a, b)) segs.push_back(std::move(s));
      }
      j["segments"] = json_of_segments(segs);
      if (!I.is_artinian()) {
        j["xy_hypothesis"] = nullptr;
        j["slp_hypothesis"] = nullptr;
        j["conj39_exponent"] = nullptr;
        emit(j, pretty);
        return 0;
      }
      if (auto xy = xy_hypothesis(I)) {
        ojson x;
        x["i"] = xy->i;
        x["j"] = xy->j;
        x["a"] = xy->a;
        x["b"] = xy->b;
        j["xy_hypothesis"] = std::move(x);
      } else {
        j["xy_hypothesis"] = nullptr;
      }
      if (auto sp = slp_hypothesis(I))
        j["slp_hypothesis"] = std::vector<int>{sp->first, sp->second};
      else
        j["slp_hypothesis"] = nullptr;
      if (auto a = conjecture39_exponent(I))
        j["conj39_exponent"] = *a;
      else
        j["conj39_exponent"] = nullptr;
      emit(j, pretty);
    } else if (*toeplitz_cmd) {
      const BinomialConvention conv =
          tz_conv == "zero0" ? BinomialConvention::zero_at_origin : BinomialConvention::standard;
      const ToeplitzSpec spec{tz_n, tz_m, tz_k};
      const ToeplitzInvertibility inv = toeplitz_invertible(spec, conv);
      ojson j = base_json("toeplitz");
      j["n"] = tz_n;
      j["m"] = tz_m;
      j["k"] = tz_k;
      j["convention"] = tz_conv;
      j["matrix"] = json_of_matrix(toeplitz_matrix(spec, conv));
      j["det"] = to_decimal(inv.det);
      j["invertible"] = inv.invertible;
      if (tz_cross) j["cross_check"] = two_var_cross_oracle(spec, conv);
      emit(j, pretty);
    } else if (*ehu) {
      require_seed(strict && ehu_random, ehu_seed_opt);
      const MonomialIdeal I = load_ideal(ideal_args);
      EhuResult res;
      if (ehu_random) {
        if (ehu_p == 0) throw std::invalid_argument("ehu --random needs --p");
        res = ehu_containment_random(I, ehu_p, ehu_squared, ehu_seed, ehu_trials);
      } else {
        if (ehu_forms.empty()) throw std::invalid_argument("ehu needs --forms or --random");
        const std::vector<LinearForm> forms = parse_linear_forms(ehu_forms, I.n());
        const int p = ehu_p == 0 ? I.n() - static_cast<int>(forms.size()) + 1 : ehu_p;
        res = ehu_containment(I, p, forms, ehu_squared);
      }
      ojson j = base_json("ehu");
      j["ideal"] = json_of_ideal(I);
      j.update(json_of_ehu(res));
      j["verdict"] = res.any_contains ? "contains" : "fails";
      emit(j, pretty);
    } else if (*conj39) {
      const MonomialIdeal I = load_ideal(ideal_args);
      ojson j = base_json("conj39");
      j["ideal"] = json_of_ideal(I);
      j.update(json_of_conj39(conjecture39_check(I)));
      emit(j, pretty);
    } else if (*witness) {
      const MonomialIdeal I = load_ideal(ideal_args);
      int degree = witness_degree;
      if (degree < 0) {
        const LefschetzReport rep = wlp_check(I);
        if (rep.failure_degrees.empty())
          throw std::invalid_argument("witness: the wlp check has no failure degree");
        degree = rep.failure_degrees.front();
      }
      ojson j = base_json("witness");
      j["ideal"] = json_of_ideal(I);
      j["j"] = degree;
      const auto w = wlp_failure_witness(I, degree);
      if (w) {
        j["witness"] = json_of_kernel_form(*w);
        j["support_chain"] = json_of_support_chain(check_support_chain(I, *w));
      } else {
        j["witness"] = nullptr;
        j["support_chain"] = nullptr;
      }
      emit(j, pretty);
    } else if (*scan_cmd) {
      require_seed(strict && !cfg.exhaustive, scan_seed_opt);
      if (!cfg.exhaustive && cfg.samples == 0)
        throw std::invalid_argument("scan: pass --samples N or --exhaustive");
      if (scan_n != 0) cfg.n_min = cfg.n_max = scan_n;
      if (scan_d != 0) cfg.d_min = cfg.d_max = scan_d;
      cfg.checks.clear();
      std::stringstream ss(checks_csv);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) cfg.checks.insert(item);
      const ScanSummary summary = scan(cfg, [&](const ScanRecord& r) {
        std::cout << json_of_scan_record(r, cfg.timings).dump() << "\n" << std::flush;
      });
      ojson s = json_of_scan_summary(summary);
      s["schema"] = kSchema;
      std::cout << s.dump() << "\n";
      return scan_exit_code(summary);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
