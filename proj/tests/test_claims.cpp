#include <gtest/gtest.h>

#include <limits>
#include <sstream>

#include "treeirr/claims.hpp"
#include "treeirr/report_io.hpp"

using namespace treeirr;

namespace {

const ClaimReport& default_report() {
  static const ClaimReport report = run_report({});
  return report;
}

const ClaimResult& result_for(const ClaimReport& report, std::string_view id) {
  for (const auto& r : report.results) {
    if (r.id == id) return r;
  }
  throw std::out_of_range(std::string(id));
}

bool has_note(const ClaimResult& r, std::string_view needle) {
  for (const auto& n : r.notes) {
    if (n.find(needle) != std::string::npos) return true;
  }
  return false;
}

std::string text(const ClaimReport& report) {
  std::ostringstream out;
  write_report_text(out, report);
  return out.str();
}

}  // namespace

TEST(Catalog, SortedUniqueAndDispatchable) {
  const auto catalog = claim_catalog();
  EXPECT_EQ(catalog.size(), 21u);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (i > 0) {
      EXPECT_LT(catalog[i - 1].id, catalog[i].id);
    }
    EXPECT_NE(detail::claim_function(catalog[i].id), nullptr) << catalog[i].id;
    EXPECT_EQ(find_claim(catalog[i].id), &catalog[i]);
  }
  EXPECT_EQ(find_claim("no-such-claim"), nullptr);
}

TEST(Claims, DefaultReportCoversCatalog) {
  const auto& report = default_report();
  ASSERT_EQ(report.results.size(), claim_catalog().size());
  for (std::size_t i = 0; i < report.results.size(); ++i) {
    EXPECT_EQ(report.results[i].id, claim_catalog()[i].id);
    EXPECT_NE(report.results[i].verdict, Verdict::error) << report.results[i].id;
  }
}

TEST(Claims, VerdictInvariants) {
  for (const auto& r : default_report().results) {
    SCOPED_TRACE(r.id);
    EXPECT_EQ(r.verdict == Verdict::fails, !r.witnesses.empty());
    EXPECT_LE(r.witnesses.size(), 25u);
    EXPECT_LE(r.witnesses.size(), r.witness_total);
    EXPECT_LE(r.violations, r.instances);
    if (r.verdict == Verdict::holds) {
      EXPECT_EQ(r.violations, 0u);
    }
    if (r.verdict == Verdict::fails) {
      EXPECT_EQ(r.witness_total, r.violations);
    }
  }
}

TEST(Claims, StarAlbertson) {
  const auto r = verify("star-albertson", {});
  EXPECT_EQ(r.verdict, Verdict::holds);
  EXPECT_EQ(r.instances, 48u);
  EXPECT_EQ(r.violations, 0u);
}

TEST(Claims, StarIsoSum) { EXPECT_EQ(result_for(default_report(), "star-iso-sum").verdict, Verdict::holds); }

TEST(Claims, ExhaustiveIdentitiesHold) {
  for (auto id : {"irrT-seq-formula", "m1-edge-identity", "cor3-part1"}) {
    EXPECT_EQ(result_for(default_report(), id).verdict, Verdict::holds) << id;
  }
}

TEST(Claims, SandwichInequalitiesHoldEverywhere) {
  const auto& r = result_for(default_report(), "sandwich");
  EXPECT_EQ(r.violations, 0u);
  EXPECT_EQ(r.instances, 200u);  // trees of order 2..10
  EXPECT_TRUE(has_note(r, "enumerators agree for orders 1..10"));
}

TEST(Claims, IrrUpperBoundHolds) {
  const auto& r = result_for(default_report(), "irr-upper-tree");
  EXPECT_EQ(r.violations, 0u);
  EXPECT_NE(r.verdict, Verdict::fails);
}

TEST(Claims, Table1DocumentedOffset) {
  const auto& r = result_for(default_report(), "table1");
  EXPECT_EQ(r.verdict, Verdict::holds_with_notes);
  EXPECT_EQ(r.instances, 24u);
  EXPECT_EQ(r.violations, 0u);
  EXPECT_TRUE(has_note(r, "irr_max exceeds the printed value by exactly 4 in 24/24"));
  EXPECT_TRUE(has_note(r, "irr_min exceeds the printed value by exactly 4 in 24/24"));
}

TEST(Claims, Figure2) {
  const auto& r = result_for(default_report(), "figure2");
  EXPECT_EQ(r.verdict, Verdict::holds_with_notes);
  EXPECT_EQ(r.violations, 0u);
}

TEST(Claims, PermExampleMatchesNeitherReading) {
  const auto& r = result_for(default_report(), "perm-example");
  EXPECT_EQ(r.verdict, Verdict::fails);
  EXPECT_TRUE(has_note(r, "formula: 720 orderings"));
  EXPECT_TRUE(has_note(r, "caterpillar: 720 orderings"));
}

TEST(Claims, Resn1DependsOnReading) {
  const auto& r = result_for(default_report(), "resn1");
  EXPECT_EQ(r.verdict, Verdict::holds_with_notes);
  EXPECT_EQ(r.violations, 0u);
}

TEST(Claims, SmallerSweepHasFewerInstances) {
  ReportConfig cfg;
  cfg.params.n_max = 6;
  const auto small = run_report(cfg);
  for (const auto& r : small.results) {
    const ClaimInfo* info = find_claim(r.id);
    if (info->default_n_max == 0) continue;
    EXPECT_LT(r.instances, result_for(default_report(), r.id).instances) << r.id;
  }
}

TEST(Claims, UnknownIdIsAnErrorEntry) {
  EXPECT_THROW(verify("no-such-claim"), std::invalid_argument);
  const auto report = run_report({{"star-albertson", "no-such-claim"}, {}, 1});
  ASSERT_EQ(report.results.size(), 2u);
  EXPECT_EQ(report.results[0].id, "no-such-claim");
  EXPECT_EQ(report.results[0].verdict, Verdict::error);
  EXPECT_TRUE(report.results[0].error.has_value());
  EXPECT_EQ(report.results[1].verdict, Verdict::holds);
  EXPECT_TRUE(report.any_error());
}

TEST(Claims, GuardOverflowIsReported) {
  ClaimParams p;
  p.n_max = 20;
  EXPECT_THROW(verify("sandwich", p), GuardError);
  const auto report = run_report({{"sandwich"}, p, 1});
  EXPECT_EQ(report.results[0].verdict, Verdict::error);
}

TEST(Claims, WitnessCap) {
  ClaimParams capped;
  capped.witness_cap = 3;
  const auto r = verify("irr-decrease", capped);
  ASSERT_EQ(r.verdict, Verdict::fails);
  EXPECT_EQ(r.witnesses.size(), 3u);
  EXPECT_GT(r.witness_total, 3u);

  ClaimParams all;
  all.witness_cap = std::numeric_limits<std::size_t>::max();
  const auto full = verify("irr-decrease", all);
  EXPECT_EQ(full.witnesses.size(), full.violations);
  EXPECT_EQ(full.witness_total, full.violations);
}

TEST(Claims, WitnessesAreEdgeLists) {
  const auto& r = result_for(default_report(), "irr-decrease");
  ASSERT_FALSE(r.witnesses.empty());
  for (const auto& w : r.witnesses) EXPECT_EQ(w.data.rfind("edges=", 0), 0u);
}

TEST(Report, DeterministicAcrossRunsAndWorkers) {
  const std::string first = text(default_report());
  EXPECT_EQ(text(run_report({})), first);
  EXPECT_EQ(text(run_report({{}, {}, 4})), first);
}

TEST(Report, JsonTotals) {
  const auto j = report_json(default_report());
  EXPECT_EQ(j["totals"]["claims"], 21);
  EXPECT_EQ(j["claims"].size(), 21u);
  EXPECT_FALSE(j["claims"][0].contains("wall_seconds"));
  EXPECT_TRUE(report_json(default_report(), {false, true})["claims"][0].contains("wall_seconds"));
}
