#include <gtest/gtest.h>

#include <vector>

#include "peano/ordinal.hpp"

using namespace peano;

TEST(Ordinal, FromNat) {
  EXPECT_TRUE(ord_from_nat(0).terms().empty());
  ASSERT_EQ(ord_from_nat(3).terms().size(), 1u);
  EXPECT_EQ(ord_from_nat(3).terms()[0].exponent, 0u);
  EXPECT_EQ(ord_from_nat(3).terms()[0].coefficient, 3u);
  EXPECT_EQ(ord_from_nat(1).terms()[0].coefficient, 1u);
}

TEST(Ordinal, MakeValidates) {
  EXPECT_EQ(ord_make({{1, 1}, {0, 2}}).to_string(), "w^1 + 2");
  try {
    ord_make({{0, 1}, {1, 1}});
    FAIL() << "expected OrdinalError";
  } catch (const OrdinalError& e) {
    EXPECT_EQ(e.index(), 1u);
  }
  try {
    ord_make({{1, 0}});
    FAIL() << "expected OrdinalError";
  } catch (const OrdinalError& e) {
    EXPECT_EQ(e.index(), 0u);
  }
  EXPECT_THROW(ord_make({{2, 1}, {2, 1}}), OrdinalError);
}

TEST(Ordinal, CompareExamples) {
  const auto w = Ordinal::omega();
  EXPECT_EQ(ord_compare(ord_make({{1, 1}, {0, 1}}), w), Ordering::greater);
  EXPECT_EQ(ord_compare(ord_from_nat(3), w), Ordering::less);
  EXPECT_EQ(ord_compare(ord_make({{1, 1}, {0, 2}}), ord_make({{1, 2}})), Ordering::less);
  EXPECT_EQ(ord_compare(w, w), Ordering::equal);
}

namespace {

// Every CNF with exponents <= 2 and coefficients <= 3, paired with its
// coefficient vector (c2, c1, c0) read as a base-4 integer.
std::vector<std::pair<Ordinal, int>> small_ordinals() {
  std::vector<std::pair<Ordinal, int>> out;
  for (int c2 = 0; c2 <= 3; ++c2)
    for (int c1 = 0; c1 <= 3; ++c1)
      for (int c0 = 0; c0 <= 3; ++c0) {
        std::vector<CnfTerm> t;
        if (c2) t.push_back({2, static_cast<std::uint64_t>(c2)});
        if (c1) t.push_back({1, static_cast<std::uint64_t>(c1)});
        if (c0) t.push_back({0, static_cast<std::uint64_t>(c0)});
        out.emplace_back(ord_make(t), c2 * 16 + c1 * 4 + c0);
      }
  return out;
}

}  // namespace

TEST(Ordinal, TotalOrderMatchesPositionalValue) {
  const auto all = small_ordinals();
  for (const auto& [a, ka] : all)
    for (const auto& [b, kb] : all) {
      const auto c = ord_compare(a, b);
      const auto expected = ka < kb ? Ordering::less : ka == kb ? Ordering::equal : Ordering::greater;
      EXPECT_EQ(c, expected) << a.to_string() << " vs " << b.to_string();
      EXPECT_EQ(a == b, ka == kb);
    }
  for (const auto& [a, ka] : all)
    for (const auto& [b, kb] : all)
      for (const auto& [c, kc] : all)
        if (a < b && b < c) ASSERT_TRUE(a < c);
}

TEST(Ordinal, FromNatPreservesOrder) {
  for (std::uint64_t m = 0; m < 20; ++m)
    for (std::uint64_t n = 0; n < 20; ++n)
      EXPECT_EQ(m < n, ord_compare(ord_from_nat(m), ord_from_nat(n)) == Ordering::less);
}

TEST(Ordinal, RenderAndParse) {
  EXPECT_EQ(ord_from_nat(0).to_string(), "0");
  EXPECT_EQ(ord_from_nat(5).to_string(), "5");
  EXPECT_EQ(ord_make({{2, 3}, {1, 1}, {0, 5}}).to_string(), "w^2*3 + w^1 + 5");
  for (const auto& [a, k] : small_ordinals()) EXPECT_EQ(Ordinal::parse(a.to_string()), a);
  EXPECT_EQ(Ordinal::parse("w"), Ordinal::omega());
  EXPECT_EQ(Ordinal::parse("w*2 + 1"), ord_make({{1, 2}, {0, 1}}));
  EXPECT_THROW(Ordinal::parse("w^1 + w^2"), ValidationError);
  EXPECT_THROW(Ordinal::parse("w^"), ValidationError);
  EXPECT_THROW(Ordinal::parse(""), ValidationError);
}
