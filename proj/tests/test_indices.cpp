#include <gtest/gtest.h>

#include "oracles.hpp"
#include "treeirr/degree_sequence.hpp"
#include "treeirr/enumeration.hpp"
#include "treeirr/fixtures.hpp"
#include "treeirr/indices.hpp"

using namespace treeirr;

TEST(Indices, Path4) {
  const auto b = compute_indices(build_path(4));
  EXPECT_EQ(b, (IndexBundle{2, 4, 2, 10, 8}));
}

TEST(Indices, Star4) {
  const auto b = compute_indices(build_star(4));
  EXPECT_EQ(b, (IndexBundle{12, 12, 36, 20, 16}));
}

TEST(Indices, Figure2Tree) {
  const auto b = compute_indices(fixtures::figure2_tree());
  EXPECT_EQ(b.irr, 20);
  EXPECT_EQ(b.sigma, 54);
  EXPECT_EQ(b.m1, 48);
  EXPECT_EQ(b.m2, 54);
  EXPECT_EQ(b.irr_total, oracle::irr_total(fixtures::figure2_tree()));
}

TEST(Indices, TrivialTrees) {
  EXPECT_EQ(compute_indices(Tree(1, {})), (IndexBundle{0, 0, 0, 0, 0}));
  EXPECT_EQ(compute_indices(build_path(2)), (IndexBundle{0, 0, 0, 2, 1}));
}

TEST(Indices, StarLaw) {
  for (std::size_t k = 1; k <= 50; ++k) {
    const auto kk = static_cast<Integer>(k);
    EXPECT_EQ(albertson_index(build_star(k)), kk * (kk - 1)) << k;
    EXPECT_EQ(sigma_index(build_star(k)), kk * (kk - 1) * (kk - 1)) << k;
  }
}

TEST(Indices, SequenceFormForTotalIrregularity) {
  EXPECT_EQ(total_irregularity_by_sequence(build_star(3)), 6);
  EXPECT_EQ(total_irregularity_by_sequence(build_path(3)), 2);
  EXPECT_EQ(total_irregularity_by_sequence(build_path(2)), 0);
}

TEST(Indices, MatchDefinitionsOnEveryTreeUpTo10) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& t : all_trees(n)) {
      const auto b = compute_indices(t);
      EXPECT_EQ(b.irr, oracle::irr(t));
      EXPECT_EQ(b.sigma, oracle::sigma(t));
      EXPECT_EQ(b.irr_total, oracle::irr_total(t));
      EXPECT_EQ(b.irr_total, total_irregularity_by_sequence(t));
    }
  }
}

TEST(Indices, IndexValueAndNames) {
  const IndexBundle b{1, 2, 3, 4, 5};
  EXPECT_EQ(index_value(b, IndexKind::irr), 1);
  EXPECT_EQ(index_value(b, IndexKind::irr_total), 2);
  EXPECT_EQ(index_value(b, IndexKind::sigma), 3);
  EXPECT_EQ(index_name(IndexKind::irr_total), "irr_T");
}

TEST(PathImbalance, Examples) {
  EXPECT_EQ(path_imbalance(build_path(4), 0, 3), 2);
  EXPECT_EQ(path_imbalance(build_star(4), 0, 2), 3);
  EXPECT_EQ(path_imbalance(fixtures::figure2_tree(), fixtures::kFig2V01, 7), 6);
  EXPECT_EQ(path_imbalance(build_path(4), 2, 2), 0);
  EXPECT_THROW(path_imbalance(build_path(4), 0, 9), std::out_of_range);
}
