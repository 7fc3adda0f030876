#include "lefmon/json_io.hpp"

#include <stdexcept>


namespace lefmon {

ojson json_of_ideal(const MonomialIdeal& I) {
  ojson j;
  j["n"] = I.n();
  j["d"] = I.d();
  ojson gens = ojson::array();
  for (const Monomial& g : I.generators()) gens.push_back(g.e);
  j["gens"] = std::move(gens);
  return j;
}

MonomialIdeal ideal_of_json(const nlohmann::json& j) {
  if (!j.contains("n") || !j.contains("d") || !j.contains("gens"))
    throw std::invalid_argument("ideal JSON needs fields n, d, gens");
  const int n = j.at("n").get<int>();
  const int d = j.at("d").get<int>();
  std::vector<Monomial> gens;
  for (const auto& g : j.at("gens")) gens.push_back(Monomial(g.get<std::vector<int>>()));
  return MonomialIdeal(n, d, std::move(gens));
}

ojson json_of_matrix(const IntMatrix& m) {
  ojson rows = ojson::array();
  for (int r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_decimal(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson json_of_socle(const SocleSet& s) {
  ojson levels = ojson::array();
  for (const auto& [degree, monos] : s.by_degree) {
    ojson level;
    level["degree"] = degree;
    ojson ms = ojson::array();
    for (const Monomial& m : monos) ms.push_back(m.e);
    level["monomials"] = std::move(ms);
    levels.push_back(std::move(level));
  }
  return levels;
}

ojson json_of_kernel_form(const KernelForm& f) {
  ojson j;
  j["degree"] = f.degree;
  ojson terms = ojson::array();
  for (const auto& [m, c] : f.terms) {
    ojson t;
    t["monomial"] = m.e;
    t["coeff"] = to_decimal(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

ojson json_of_report(const LefschetzReport& r) {
  ojson j;
  j["check"] = r.check;
  j["mode"] = r.mode;
  j["verdict"] = r.holds ? "holds" : "fails";
  ojson cells = ojson::array();
  for (const RankCell& c : r.cells) {
    ojson cell;
    cell["j"] = c.j;
    cell["t"] = c.t;
    cell["src"] = c.src;
    cell["tgt"] = c.tgt;
    cell["rank"] = c.rank;
    cell["maximal"] = c.maximal;
    cells.push_back(std::move(cell));
  }
  j["cells"] = std::move(cells);
  j["failure_degrees"] = r.failure_degrees;
  ojson ws = ojson::array();
  for (const KernelForm& w : r.witnesses) ws.push_back(json_of_kernel_form(w));
  j["witnesses"] = std::move(ws);
  return j;
}

ojson json_of_betti(const BettiTable& b, int steps, int reg) {
  ojson j;
  ojson entries = ojson::array();
  for (const auto& [key, value] : b.entries) {
    if (value == 0) continue;
    ojson e;
    e["i"] = key.first;
    e["j"] = key.second;
    e["b"] = value;
    entries.push_back(std::move(e));
  }
  j["betti"] = std::move(entries);
  j["linear_steps"] = steps;
  j["reg"] = reg;
  return j;
}

ojson json_of_segments(const std::vector<LineSegment>& segs) {
  ojson out = ojson::array();
  for (const LineSegment& s : segs) {
    ojson j;
    j["i"] = s.i;
    j["j"] = s.j;
    ojson ms = ojson::array();
    for (const Monomial& m : s.monomials) ms.push_back(m.e);
    j["monomials"] = std::move(ms);
    j["maximal"] = s.maximal;
    out.push_back(std::move(j));
  }
  return out;
}

ojson json_of_support_chain(const SupportChainResult& r) {
  ojson j;
  j["ok"] = r.ok;
  ojson vs = ojson::array();
  for (const SupportChainViolation& v : r.violations) {
    ojson e;
    e["monomial"] = v.m.e;
    e["var"] = v.var;
    e["missing_degree"] = v.missing;
    vs.push_back(std::move(e));
  }
  j["violations"] = std::move(vs);
  return j;
}

ojson json_of_ehu(const EhuResult& r) {
  ojson j;
  j["squared"] = r.squared;
  j["p"] = r.p;
  ojson trials = ojson::array();
  for (const EhuTrial& t : r.trials) {
    ojson e;
    ojson fs = ojson::array();
    for (const LinearForm& f : t.forms) fs.push_back(f.c);
    e["forms"] = std::move(fs);
    e["contains"] = t.contains;
    trials.push_back(std::move(e));
  }
  j["trials"] = std::move(trials);
  j["any_contains"] = r.any_contains;
  j["all_contain"] = r.all_contain;
  return j;
}

ojson json_of_conj39(const Conj39Result& r) {
  ojson j;
  j["sd_nonempty"] = r.sd_nonempty;
  if (r.sd_nonempty)
    j["a_vector"] = r.a_vector;
  else
    j["a_vector"] = nullptr;
  j["a"] = r.a;
  j["hypothesis_holds"] = r.hypothesis_holds;
  j["report"] = r.report ? json_of_report(*r.report) : ojson(nullptr);
  j["counterexample"] = r.counterexample;
  return j;
}

namespace {

const char* flag_name(FlagState s) {
  switch (s) {
    case FlagState::ok:
      return "ok";
    case FlagState::violated:
      return "violated";
    default:
      return "n/a";
  }
}

}  // namespace

ojson json_of_scan_record(const ScanRecord& r, bool timings) {
  ojson j;
  j["type"] = "record";
  j["index"] = r.index;
  ojson ideal;
  ideal["n"] = r.n;
  ideal["d"] = r.d;
  ojson gens = ojson::array();
  for (const Monomial& g : r.gens) gens.push_back(g.e);
  ideal["gens"] = std::move(gens);
  j["ideal"] = std::move(ideal);
  if (r.error) {
    j["error"] = *r.error;
    if (timings) j["ms"] = r.ms;
    return j;
  }
  j["hilbert"] = r.hilbert;
  j["linear_steps"] = r.linear_steps_r ? ojson(*r.linear_steps_r) : ojson(nullptr);
  j["reg"] = r.reg ? ojson(*r.reg) : ojson(nullptr);
  j["wlp"] = r.wlp ? ojson(r.wlp->holds ? "holds" : "fails") : ojson(nullptr);
  j["wlp_failure_degrees"] = r.wlp ? ojson(r.wlp->failure_degrees) : ojson(nullptr);
  j["slp_canonical"] =
      r.slp_canonical ? ojson(r.slp_canonical->holds ? "holds" : "fails") : ojson(nullptr);
  j["slp_random"] = r.slp_random ? ojson(r.slp_random->holds ? "holds" : "fails") : ojson(nullptr);
  if (r.xy) {
    ojson xy;
    xy["i"] = r.xy->i;
    xy["j"] = r.xy->j;
    xy["a"] = r.xy->a;
    xy["b"] = r.xy->b;
    j["xy_hypothesis"] = std::move(xy);
  } else {
    j["xy_hypothesis"] = nullptr;
  }
  if (r.slp_pair)
    j["slp_hypothesis"] = std::vector<int>{r.slp_pair->first, r.slp_pair->second};
  else
    j["slp_hypothesis"] = nullptr;
  j["conj39"] = r.conj39 ? json_of_conj39(*r.conj39) : ojson(nullptr);
  j["ehu_linear"] = r.ehu_linear ? json_of_ehu(*r.ehu_linear) : ojson(nullptr);
  if (r.support) {
    ojson sp;
    sp["min_support"] = r.support->min_support ? ojson(*r.support->min_support) : ojson(nullptr);
    sp["support_bound_ok"] = r.support->support_bound_ok;
    sp["hd"] = r.support->hd;
    sp["hd_bound"] = r.support->hd_bound;
    sp["hilbert_bound_ok"] = r.support->hilbert_bound_ok;
    j["support"] = std::move(sp);
  } else {
    j["support"] = nullptr;
  }
  ojson ws = ojson::array();
  for (const KernelForm& w : r.witnesses) ws.push_back(json_of_kernel_form(w));
  j["witnesses"] = std::move(ws);
  if (r.flags_evaluated) {
    ojson flags;
    for (const auto& [flag, state] : r.flags) flags[std::string(1, flag)] = flag_name(state);
    j["flags"] = std::move(flags);
    j["violations"] = std::string(r.violations.begin(), r.violations.end());
  } else {
    j["flags"] = nullptr;
    j["violations"] = nullptr;
  }
  if (timings) j["ms"] = r.ms;
  return j;
}

ojson json_of_scan_summary(const ScanSummary& s) {
  ojson j;
  j["type"] = "summary";
  j["ideals"] = s.ideals;
  j["errors"] = s.errors;
  j["wlp_checked"] = s.wlp_checked;
  j["wlp_failures"] = s.wlp_failures;
  j["slp_checked"] = s.slp_checked;
  j["slp_canonical_failures"] = s.slp_canonical_failures;
  j["slp_failures"] = s.slp_failures;
  ojson fv = ojson::object();
  for (const auto& [flag, count] : s.flag_violations) fv[std::string(1, flag)] = count;
  j["flag_violations"] = std::move(fv);
  j["total_violations"] = s.total_violations;
  j["counterexample_candidates"] = s.counterexample_candidates;
  return j;
}

}  // namespace lefmon
