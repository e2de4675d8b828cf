#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "treeirr/claims.hpp"
#include "treeirr/fixtures.hpp"
#include "treeirr/formulas.hpp"

namespace treeirr {

struct ReportOptions {
  bool all_witnesses = false;  // otherwise capped at the claim's witness_cap
  bool timing = false;         // wall time breaks byte-stability, so it is opt-in
};

inline void write_claim_text(std::ostream& out, const ClaimResult& r, const ReportOptions& opt = {}) {
  out << "claim: " << r.id << '\n';
  out << "verdict: " << verdict_name(r.verdict) << '\n';
  if (!r.statement.empty()) out << "statement: " << r.statement << '\n';
  if (!r.oracle.empty()) out << "oracle: " << r.oracle << '\n';
  if (r.error) {
    out << "error: " << *r.error << '\n';
    return;
  }
  out << "params: " << r.params << '\n';
  out << "instances: " << r.instances << '\n';
  out << "violations: " << r.violations << '\n';
  out << "witnesses: " << r.witnesses.size() << " of " << r.witness_total << '\n';
  for (const auto& n : r.notes) out << "note: " << n << '\n';
  for (const auto& w : r.witnesses) out << "witness: " << w.label << " | " << w.data << '\n';
  if (opt.timing) out << "time: " << r.wall_seconds << "s\n";
}

inline void write_report_text(std::ostream& out, const ClaimReport& report, const ReportOptions& opt = {}) {
  out << "# treeirr claim report\n";
  out << "version: " << kVersion << '\n';
  out << "compiler: " << __VERSION__ << '\n';
  out << "claims: " << report.results.size() << '\n';
  out << "holds: " << report.count(Verdict::holds) << '\n';
  out << "holds-with-notes: " << report.count(Verdict::holds_with_notes) << '\n';
  out << "fails: " << report.count(Verdict::fails) << '\n';
  out << "errors: " << report.count(Verdict::error) << '\n';
  if (opt.timing) out << "jobs: " << report.jobs << '\n';
  for (const auto& r : report.results) {
    out << '\n';
    write_claim_text(out, r, opt);
  }
}

inline nlohmann::ordered_json claim_json(const ClaimResult& r, const ReportOptions& opt = {}) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["verdict"] = verdict_name(r.verdict);
  j["statement"] = r.statement;
  j["oracle"] = r.oracle;
  if (r.error) {
    j["error"] = *r.error;
    return j;
  }
  j["params"] = r.params;
  j["instances"] = r.instances;
  j["violations"] = r.violations;
  j["witness_total"] = r.witness_total;
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back({{"label", w.label}, {"data", w.data}});
  j["notes"] = r.notes;
  if (opt.timing) j["wall_seconds"] = r.wall_seconds;
  return j;
}

inline nlohmann::ordered_json report_json(const ClaimReport& report, const ReportOptions& opt = {}) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["compiler"] = __VERSION__;
  j["totals"] = {{"claims", report.results.size()},
                 {"holds", report.count(Verdict::holds)},
                 {"holds-with-notes", report.count(Verdict::holds_with_notes)},
                 {"fails", report.count(Verdict::fails)},
                 {"errors", report.count(Verdict::error)}};
  if (opt.timing) j["jobs"] = report.jobs;
  j["claims"] = nlohmann::ordered_json::array();
  for (const auto& r : report.results) j["claims"].push_back(claim_json(r, opt));
  return j;
}

// Printed rows next to the closed-form bounds they are compared with.
struct Table1Comparison {
  fixtures::Table1Row row;
  Integer formula_max = 0;
  Integer formula_min = 0;
  Integer diff_formula = 0;  // 2(d2 - d4)
  Integer floor_bound = 0;
};

inline std::vector<Table1Comparison> table1_comparison() {
  std::vector<Table1Comparison> out;
  for (const auto& row : fixtures::parse_table1()) {
    const auto b = evaluate_formula(FormulaId::hyp_four_bounds, row.degrees);
    out.push_back({row, b.value, *b.secondary, 2 * (row.degrees[1] - row.degrees[3]),
                   evaluate_formula(FormulaId::cor_floor_bound, row.degrees).value});
  }
  return out;
}

inline void write_table1_csv(std::ostream& out, const std::vector<Table1Comparison>& rows) {
  out << "d1,d2,d3,d4,irr_max,irr_min,diff,formula_max,formula_min,offset_max,offset_min,2(d2-d4),floor_bound\n";
  for (const auto& c : rows) {
    const auto& d = c.row.degrees;
    out << d[0] << ',' << d[1] << ',' << d[2] << ',' << d[3] << ',' << c.row.irr_max << ',' << c.row.irr_min << ','
        << c.row.diff << ',' << c.formula_max << ',' << c.formula_min << ',' << c.formula_max - c.row.irr_max << ','
        << c.formula_min - c.row.irr_min << ',' << c.diff_formula << ',' << c.floor_bound << '\n';
  }
}

}  // namespace treeirr
