#include <gtest/gtest.h>

#include "oracles.hpp"
#include "treeirr/fixtures.hpp"
#include "treeirr/formulas.hpp"
#include "treeirr/indices.hpp"

using namespace treeirr;

TEST(Formulas, HypFourBounds) {
  const auto r = evaluate_formula(FormulaId::hyp_four_bounds, {18, 12, 6, 4});
  EXPECT_EQ(r.value, 458);
  EXPECT_EQ(r.secondary, 442);
}

TEST(Formulas, FloorBound) { EXPECT_EQ(evaluate_formula(FormulaId::cor_floor_bound, {18, 12, 6, 4}).value, 170); }

TEST(Formulas, DiffBound) {
  const auto r = evaluate_formula(FormulaId::cor_diff_bound, {18, 12, 6, 4});
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.secondary, 16);
}

TEST(Formulas, SigmaOrdered) {
  EXPECT_EQ(evaluate_formula(FormulaId::sigma_ordered, {1, 2, 3, 4, 5, 6}).value, 379);
  EXPECT_EQ(evaluate_formula(FormulaId::sigma_ordered, {3}).value, 16);
}

TEST(Formulas, SigmaFive) { EXPECT_EQ(evaluate_formula(FormulaId::sigma_five, {1, 2, 3, 4, 5}).value, 138); }

TEST(Formulas, ThreeCAnomaly) {
  EXPECT_EQ(evaluate_formula(FormulaId::three_c_max, {3, 2, 1}).value, 5);
  EXPECT_EQ(evaluate_formula(FormulaId::three_c_min, {3, 2, 1}).value, 6);
}

TEST(Formulas, HypFourClosedForm) {
  // 17^2 + 11^2 + 5^2 + (12 - 36) + 3*1
  EXPECT_EQ(evaluate_formula(FormulaId::hyp_four, {18, 12, 6, 4}).value, 289 + 121 + 25 - 24 + 3);
}

TEST(Formulas, Cor3Part1) {
  const auto r = evaluate_formula(FormulaId::cor3_part1, {4, 4});
  // log_2(4/3) < 2
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.secondary, 2);
  EXPECT_THROW(evaluate_formula(FormulaId::cor3_part1, {3, 5}), DomainError);
  EXPECT_THROW(evaluate_formula(FormulaId::cor3_part1, {4, 3}), DomainError);
}

TEST(Formulas, ExactLogComparison) {
  EXPECT_TRUE(detail::log_ratio_below(8, 1, 2, 4));   // log2 8 = 3 < 4
  EXPECT_FALSE(detail::log_ratio_below(8, 1, 2, 3));  // 3 < 3 is false
  EXPECT_TRUE(detail::log_ratio_below(7, 1, 2, 3));
  EXPECT_FALSE(detail::log_ratio_below(9, 1, 3, 2));
}

TEST(Formulas, ArityAndDomainErrors) {
  EXPECT_THROW(evaluate_formula(FormulaId::three_c_max, {3, 2}), std::invalid_argument);
  EXPECT_THROW(evaluate_formula(FormulaId::sigma_ordered, std::span<const Integer>{}), std::invalid_argument);
  EXPECT_THROW(evaluate_formula(FormulaId::hyp_four, {3, 2, 0, 1}), DomainError);
  EXPECT_THROW(evaluate_formula(FormulaId::hyp_four, {1, 2, 3, 4}), DomainError);
  const auto flagged = evaluate_formula(FormulaId::hyp_four, {1, 2, 3, 4}, OrderingPolicy::flag);
  EXPECT_EQ(flagged.notes.size(), 1u);
}

TEST(Formulas, NamesRoundTrip) {
  for (FormulaId id : kAllFormulas) EXPECT_EQ(parse_formula_id(formula_name(id)), id);
  EXPECT_FALSE(parse_formula_id("nope"));
}

TEST(Formulas, WorkedExampleDisplay) {
  const auto d = degrees(fixtures::figure2_tree());
  EXPECT_EQ(worked_example_irr(d[0], {d[1], d[2], d[3], d[4]}), 20);
  EXPECT_EQ(worked_example_irr(d[0], {d[1], d[2], d[3], fixtures::kFig2ProseDegreeV04}), 18);
}

TEST(Table1Fixture, TranscriptionChecksum) {
  EXPECT_EQ(oracle::fnv1a(fixtures::kTable1Text), 0xf8dbc32cf35a989eull);
}

TEST(Table1Fixture, Parses24Rows) {
  const auto rows = fixtures::parse_table1();
  ASSERT_EQ(rows.size(), 24u);
  EXPECT_EQ(rows.front(), (fixtures::Table1Row{{18, 12, 6, 4}, 454, 438, 16}));
  EXPECT_EQ(rows.back(), (fixtures::Table1Row{{14, 9, 5, 3}, 260, 248, 12}));
}

TEST(Table1Fixture, ColumnsAgainstFormulas) {
  for (const auto& row : fixtures::parse_table1()) {
    const auto& d = row.degrees;
    EXPECT_EQ(row.diff, 2 * (d[1] - d[3]));
    EXPECT_EQ(row.diff, row.irr_max - row.irr_min);
    EXPECT_LT(row.diff, 2 * d[0]);
    EXPECT_GE(row.irr_min, evaluate_formula(FormulaId::cor_floor_bound, d).value);
    const auto b = evaluate_formula(FormulaId::hyp_four_bounds, d);
    EXPECT_EQ(b.value - row.irr_max, 4);
    EXPECT_EQ(*b.secondary - row.irr_min, 4);
  }
}
