#include <gtest/gtest.h>

#include "peano/finite_oracle.hpp"

using namespace peano::oracle;

namespace {

// A finite relation is well-founded iff its graph has no cycle (self-loops
// included). Kahn-style peeling: repeatedly drop elements with nothing left
// below them.
bool acyclic(const FiniteRelation& r) {
  std::uint32_t left = r.full();
  bool progress = true;
  while (left && progress) {
    progress = false;
    for (unsigned m = 0; m < r.size(); ++m)
      if (((left >> m) & 1U) && (r.below(m) & left) == 0) {
        left &= ~(std::uint32_t{1} << m);
        progress = true;
      }
  }
  return left == 0;
}

// Least fixpoint of "everything below p is accessible => p accessible".
std::uint32_t accessible_part(const FiniteRelation& r) {
  std::uint32_t acc = 0;
  for (bool grew = true; grew;) {
    grew = false;
    for (unsigned p = 0; p < r.size(); ++p)
      if (!((acc >> p) & 1U) && (r.below(p) & ~acc) == 0) {
        acc |= std::uint32_t{1} << p;
        grew = true;
      }
  }
  return acc;
}

}  // namespace

TEST(FiniteOracle, WellFoundedExamples) {
  EXPECT_TRUE(fin_well_founded(FiniteRelation(3, {{0, 1}, {1, 2}})));
  EXPECT_FALSE(fin_well_founded(FiniteRelation(1, {{0, 0}})));
  EXPECT_TRUE(fin_well_founded(FiniteRelation(4)));
  EXPECT_FALSE(fin_well_founded(FiniteRelation(3, {{0, 1}, {1, 2}, {2, 0}})));
}

TEST(FiniteOracle, InductionExamples) {
  EXPECT_TRUE(fin_induction_principle(FiniteRelation(3, {{0, 1}, {1, 2}})));
  EXPECT_FALSE(fin_induction_principle(FiniteRelation(1, {{0, 0}})));
  EXPECT_TRUE(fin_induction_principle(FiniteRelation(2)));
}

TEST(FiniteOracle, AgreementExamples) {
  EXPECT_TRUE(fin_theorem2_agrees(FiniteRelation(3, {{0, 1}, {1, 2}})));
  EXPECT_TRUE(fin_theorem2_agrees(FiniteRelation(1, {{0, 0}})));
}

TEST(FiniteOracle, RelationBounds) {
  EXPECT_THROW(FiniteRelation(17), std::out_of_range);
  EXPECT_THROW(FiniteRelation(2, {{0, 2}}), std::out_of_range);
  EXPECT_THROW(gen_relation(17, 0.5, 1), std::out_of_range);
  EXPECT_THROW(gen_relation(3, 1.5, 1), std::out_of_range);
  EXPECT_NO_THROW(fin_well_founded(gen_relation(16, 0.05, 3)));
}

TEST(FiniteOracle, GenRelation) {
  EXPECT_TRUE(gen_relation(3, 0.0, 99).pairs().empty());
  EXPECT_EQ(gen_relation(3, 1.0, 99).pairs().size(), 9u);
  EXPECT_EQ(gen_relation(5, 0.3, 42), gen_relation(5, 0.3, 42));
  EXPECT_NE(gen_relation(8, 0.5, 1), gen_relation(8, 0.5, 2));
  // Golden value, pinned from the first run.
  const std::vector<std::pair<unsigned, unsigned>> golden = {
      {0, 3}, {1, 0}, {1, 3}, {2, 0}, {3, 3}, {3, 4}, {4, 1}, {4, 3}, {4, 4}};
  EXPECT_EQ(gen_relation(5, 0.3, 42).pairs(), golden);
}

TEST(FiniteOracle, AgreesWithGraphOracles) {
  const auto s = fuzz(10, 300, 11);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto r = gen_relation(1 + seed % 10, (seed % 7) / 12.0, seed);
    EXPECT_EQ(fin_well_founded(r), acyclic(r));
    EXPECT_EQ(fin_induction_principle(r), accessible_part(r) == r.full());
    EXPECT_EQ(fin_finite_descent(r), acyclic(r));
  }
  EXPECT_TRUE(s.all_agree());
}

TEST(FiniteOracle, ExhaustiveSmallRelations) {
  const auto s = exhaustive(3);
  EXPECT_EQ(s.checked, 1u + 2u + 16u + 512u);
  EXPECT_EQ(s.theorem_agree, s.checked);
  EXPECT_EQ(s.duality_agree, s.checked);
  EXPECT_FALSE(s.first_disagreement);
  for (unsigned n = 0; n <= 3; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      const auto r = relation_from_code(n, code);
      ASSERT_EQ(fin_well_founded(r), acyclic(r));
      ASSERT_EQ(fin_induction_principle(r), accessible_part(r) == r.full());
    }
}

TEST(FiniteOracle, SampledAndSeeded) {
  const auto four = sampled(4, 10000, 7);
  EXPECT_EQ(four.checked, 10000u);
  EXPECT_TRUE(four.all_agree());
  const auto seeded = fuzz(10, 500, 7);
  EXPECT_EQ(seeded.checked, 500u);
  EXPECT_TRUE(seeded.all_agree());
  EXPECT_EQ(seeded.seed, 7u);
}

TEST(FiniteOracle, DisagreementIsReported) {
  FuzzSummary s;
  tally(s, FiniteRelation(2, {{0, 1}}));
  EXPECT_TRUE(s.all_agree());
  // Feed a summary a count that cannot match to check the bookkeeping.
  s.checked += 1;
  EXPECT_FALSE(s.all_agree());
}
