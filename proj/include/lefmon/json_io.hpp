#pragma once

#include <json.hpp>

#include "lefmon/conjectures.hpp"
#include "lefmon/ideal.hpp"
#include "lefmon/lefschetz.hpp"
#include "lefmon/resolution.hpp"
#include "lefmon/segments.hpp"
#include "lefmon/toeplitz.hpp"

namespace lefmon {

using ojson = nlohmann::ordered_json;

// Ideal wire format: {"n": 3, "d": 3, "gens": [[3,0,0], ...]}.
ojson json_of_ideal(const MonomialIdeal& I);
MonomialIdeal ideal_of_json(const nlohmann::json& j);

ojson json_of_matrix(const IntMatrix& m);  // entries as decimal strings
ojson json_of_socle(const SocleSet& s);
ojson json_of_kernel_form(const KernelForm& f);
ojson json_of_report(const LefschetzReport& r);
ojson json_of_betti(const BettiTable& b, int steps, int reg);
ojson json_of_segments(const std::vector<LineSegment>& segs);
ojson json_of_support_chain(const SupportChainResult& r);
ojson json_of_ehu(const EhuResult& r);
ojson json_of_conj39(const Conj39Result& r);
ojson json_of_scan_record(const ScanRecord& r, bool timings);
ojson json_of_scan_summary(const ScanSummary& s);

}  // namespace lefmon
