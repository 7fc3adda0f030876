// Acceptance suite: eight end-to-end criteria with pinned tolerances (exact
// arithmetic: zero tolerance) and runtime budgets. Pass the CLI binary path
// as argv[1]; criteria that specify command-line behavior run the real
// binary through a shell.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lefmon/conjectures.hpp"
#include "lefmon/lefschetz.hpp"
#include "lefmon/resolution.hpp"
#include "lefmon/rng.hpp"
#include "lefmon/toeplitz.hpp"

using json = nlohmann::json;
using namespace lefmon;

namespace {

std::string cli_path;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = cli_path + " " + args;
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + cmd);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

json last_line_json(const std::string& out) {
  size_t end = out.find_last_not_of('\n');
  if (end == std::string::npos) throw std::runtime_error("empty CLI output");
  size_t start = out.rfind('\n', end);
  return json::parse(out.substr(start == std::string::npos ? 0 : start + 1, end - start));
}

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<void(std::vector<std::string>&)> body;  // push problems
};

const char* kRemark28 = "'x^3,y^3,z^3,x*y^2,x^2*y,x*z^2,x^2*z,y^2*z,y*z^2' --n 3 --d 3";
const char* kTogliatti = "'x1^3,x2^3,x3^3,x1*x2*x3' --n 3 --d 3";

std::map<std::pair<int, int>, long> betti_map(const json& j) {
  std::map<std::pair<int, int>, long> out;
  for (const auto& e : j.at("betti"))
    out[{e.at("i").get<int>(), e.at("j").get<int>()}] = e.at("b").get<long>();
  return out;
}

MonomialIdeal random_artinian(DetRng& rng, int nlo, int nhi, int dlo, int dhi) {
  const int n = nlo + static_cast<int>(rng.below(nhi - nlo + 1));
  const int d = dlo + static_cast<int>(rng.below(dhi - dlo + 1));
  const int cap = static_cast<int>(monomials_of_degree(n, d).size());
  const int count = n + static_cast<int>(rng.below(cap - n + 1));
  return sample_ideal(n, d, count, rng.next());
}

void c1_remark28_goldens(std::vector<std::string>& problems) {
  CliResult b = run_cli(std::string("betti --gens ") + kRemark28);
  if (b.exit_code != 0) problems.push_back("betti exited " + std::to_string(b.exit_code));
  const json bj = last_line_json(b.out);
  const std::map<std::pair<int, int>, long> expected = {
      {{0, 0}, 1}, {{1, 3}, 9}, {{2, 4}, 12}, {{3, 5}, 3}, {{3, 6}, 1}};
  if (betti_map(bj) != expected) problems.push_back("Betti table differs from the golden");
  if (bj.at("linear_steps") != 2) problems.push_back("linear_steps != 2");

  CliResult e1 = run_cli(std::string("ehu --squared --forms 'x' --gens ") + kRemark28);
  if (last_line_json(e1.out).at("verdict") != "fails")
    problems.push_back("m^3 in I+(x)^2 should fail");
  CliResult e2 = run_cli(std::string("ehu --squared --forms 'x-y' --gens ") + kRemark28);
  if (last_line_json(e2.out).at("verdict") != "contains")
    problems.push_back("m^3 in I+(x-y)^2 should hold");
}

void c2_togliatti_goldens(std::vector<std::string>& problems) {
  CliResult w = run_cli(std::string("wlp --gens ") + kTogliatti);
  const json wj = last_line_json(w.out);
  if (wj.at("verdict") != "fails") problems.push_back("wlp verdict should be fails");
  if (wj.at("failure_degrees") != json::array({2})) problems.push_back("failure degree != 2");
  bool cell_ok = false;
  for (const auto& c : wj.at("cells"))
    if (c.at("j") == 2 && c.at("src") == 6 && c.at("tgt") == 6 && c.at("rank") == 5)
      cell_ok = true;
  if (!cell_ok) problems.push_back("failing cell is not 6 -> 6 of rank 5");

  const json bj = last_line_json(run_cli(std::string("betti --gens ") + kTogliatti).out);
  if (bj.at("linear_steps") != 1) problems.push_back("linear_steps != 1");
  if (bj.at("reg") != 4) problems.push_back("regularity != 4");
}

void c3_toeplitz_sweep(std::vector<std::string>& problems) {
  for (int n = 0; n <= 8; ++n)
    for (int m = 1; m <= 8; ++m)
      for (int k = 0; k <= n; ++k) {
        const ToeplitzSpec spec{n, m, k};
        if (!toeplitz_invertible(spec).invertible) {
          problems.push_back("singular T at n=" + std::to_string(n) + " m=" + std::to_string(m) +
                             " k=" + std::to_string(k));
          return;
        }
        if (!two_var_cross_oracle(spec)) {
          problems.push_back("cross oracle mismatch at n=" + std::to_string(n) +
                             " m=" + std::to_string(m) + " k=" + std::to_string(k));
          return;
        }
      }
  const json tj = last_line_json(run_cli("toeplitz --n 2 --m 2 --k 1").out);
  if (tj.at("det") != "3" || tj.at("matrix") != json::parse(R"([["2","1"],["1","2"]])"))
    problems.push_back("CLI toeplitz golden mismatch");
}

void c4_euler_identity(std::vector<std::string>& problems) {
  DetRng rng(2024);
  for (int i = 0; i < 500; ++i) {
    const MonomialIdeal I = random_artinian(rng, 2, 4, 2, 5);
    const BettiTable b = betti_table(I);
    const HilbertFunction h = hilbert_function(I);

    int maxdeg = h.top() + I.n() + 1;
    for (const auto& [key, value] : b.entries) maxdeg = std::max(maxdeg, key.second);
    std::vector<long> lhs(maxdeg + 1, 0), rhs(maxdeg + 1, 0);
    for (const auto& [key, value] : b.entries)
      lhs[key.second] += (key.first % 2 == 0 ? value : -value);
    for (int k = 0; k <= h.top(); ++k)
      for (int t = 0; t <= I.n(); ++t)
        if (k + t <= maxdeg)
          rhs[k + t] +=
              h.at(k) * binomial(I.n(), t).get_si() * ((t % 2 == 0) ? 1 : -1);
    if (lhs != rhs) {
      problems.push_back("Euler identity failed on sample " + std::to_string(i));
      return;
    }
  }
}

void c5_theorem_consistency(std::vector<std::string>& problems) {
  CliResult ex = run_cli("scan --n 3 --d 3 --exhaustive --trials 3");
  if (ex.exit_code != 0)
    problems.push_back("exhaustive n=3 d=3 scan exited " + std::to_string(ex.exit_code));
  json s1 = last_line_json(ex.out);
  if (s1.at("total_violations") != 0) problems.push_back("violations in the exhaustive sweep");

  CliResult sm = run_cli("scan --n 4 --d-min 1 --d-max 4 --samples 250 --seed 11 --trials 3");
  if (sm.exit_code != 0)
    problems.push_back("sampled n=4 scan exited " + std::to_string(sm.exit_code));
  json s2 = last_line_json(sm.out);
  if (s2.at("ideals") != 1000) problems.push_back("expected 1000 sampled ideals");
  if (s2.at("total_violations") != 0) problems.push_back("violations in the sampled sweep");
  if (s2.at("errors") != 0) problems.push_back("per-ideal errors in the sampled sweep");
}

void c6_two_variable_slp(std::vector<std::string>& problems) {
  ScanConfig cfg;
  cfg.n_min = cfg.n_max = 2;
  cfg.d_min = 1;
  cfg.d_max = 5;
  cfg.exhaustive = true;
  cfg.checks = {"slp"};
  cfg.trials = 3;
  const ScanSummary s = scan(cfg, [](const ScanRecord&) {});
  if (s.ideals == 0) problems.push_back("empty exhaustive enumeration");
  if (s.slp_checked != s.ideals) problems.push_back("not every ideal was SLP-checked");
  if (s.slp_failures != 0)
    problems.push_back(std::to_string(s.slp_failures) + " SLP failures in two variables");
}

void c7_conjecture39_evidence(std::vector<std::string>& problems) {
  CliResult ex = run_cli("scan --n 3 --d 3 --exhaustive --checks conj39");
  if (ex.exit_code == 3) problems.push_back("counterexample candidate at n=3 d=3");
  if (last_line_json(ex.out).at("counterexample_candidates") != 0)
    problems.push_back("nonzero candidate count at n=3 d=3");

  ScanConfig cfg;
  cfg.n_min = cfg.n_max = 3;
  cfg.d_min = cfg.d_max = 4;
  cfg.samples = 200;
  cfg.seed = 13;
  cfg.checks = {"conj39"};
  const ScanSummary s = scan(cfg, [](const ScanRecord&) {});
  if (s.ideals != 200) problems.push_back("expected 200 sampled ideals");
  if (scan_exit_code(s) == 3 || s.counterexample_candidates != 0)
    problems.push_back("counterexample candidate at n=3 d=4");
  if (s.errors != 0) problems.push_back("errors in the sampled d=4 sweep");
}

void c8_oracle_equivalence(std::vector<std::string>& problems) {
  DetRng rng(808);
  for (int i = 0; i < 50; ++i) {
    const MonomialIdeal I = random_artinian(rng, 2, 3, 2, 4);
    const HilbertFunction h = hilbert_function(I);
    LinearForm rnd;
    rnd.c.resize(I.n());
    for (int v = 0; v < I.n(); ++v) rnd.c[v] = rng.in(1, 1000000);

    for (const LinearForm& f : {LinearForm::all_ones(I.n()), rnd}) {
      for (int t = 1; t <= h.top() + 1; ++t)
        for (int j = 0; j <= h.top(); ++j) {
          if (h.at(j) == 0 || h.at(j + t) == 0) continue;
          if (!(multiplication_matrix(I, j, t, f) ==
                multiplication_matrix_by_expansion(I, j, t, f))) {
            problems.push_back("matrix mismatch on sample " + std::to_string(i));
            return;
          }
        }
      for (int k = 1; k <= h.top() + 1; ++k)
        if (rank(differentiation_matrix(I, k, f)) != rank(multiplication_matrix(I, k - 1, 1, f))) {
          problems.push_back("duality rank mismatch on sample " + std::to_string(i));
          return;
        }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-lefmon-cli>\n";
    return 2;
  }
  cli_path = argv[1];

  const std::vector<Criterion> criteria = {
      {"C1 nine-generator goldens: Betti table, linear steps, squared containments", 1.0,
       c1_remark28_goldens},
      {"C2 Togliatti goldens: wlp failure at degree 2, linear steps, regularity", 1.0,
       c2_togliatti_goldens},
      {"C3 Toeplitz sweep n<=8, m<=8, 0<=k<=n: invertible + multiplication-matrix oracle", 10.0,
       c3_toeplitz_sweep},
      {"C4 Euler identity on 500 seeded random artinian ideals (n<=4, d<=5)", 300.0,
       c4_euler_identity},
      {"C5 theorem-consistency scan: exhaustive n=3 d=3 plus 1000 samples n=4 d<=4", 900.0,
       c5_theorem_consistency},
      {"C6 exhaustive two-variable ideals d<=5: 100% SLP", 60.0, c6_two_variable_slp},
      {"C7 power-map conjecture evidence: exhaustive n=3 d=3 and 200 samples d=4", 600.0,
       c7_conjecture39_evidence},
      {"C8 expansion-oracle equivalence and duality ranks on 50 random ideals", 120.0,
       c8_oracle_equivalence},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::vector<std::string> problems;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(problems);
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds)
      problems.push_back("over budget: " + std::to_string(secs) + " s > " +
                         std::to_string(c.budget_seconds) + " s");
    std::ostringstream line;
    line << (problems.empty() ? "PASS" : "FAIL") << "  " << c.name << "  (" << secs << " s)";
    std::cout << line.str() << "\n";
    for (const std::string& p : problems) std::cout << "      - " << p << "\n";
    if (!problems.empty()) ++failures;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
