#include <gtest/gtest.h>

#include <set>

#include "peano/builtin_models.hpp"
#include "peano/principles.hpp"

using namespace peano;

namespace {

long long v(const Element& e, std::size_t i) { return e[i].convert_to<long long>(); }

// The order formulas, written out again from the model descriptions.
bool reference_less(ModelId id, const Element& a, const Element& b) {
  const bool a_is_a = a.sort() == "A";
  const bool b_is_a = b.sort() == "A";
  switch (id) {
    case ModelId::STD: return v(a, 0) < v(b, 0);
    case ModelId::M5_REVERSED: return v(b, 0) < v(a, 0);
    case ModelId::M7_DISCRETE: return false;
    case ModelId::M1_OMEGA_PLUS_OMEGA:
    case ModelId::M4_OMEGA_PLUS_ZETA:
      if (a.sort() == b.sort()) return v(a, 0) < v(b, 0);
      return a_is_a && !b_is_a;
    case ModelId::M2_OMEGA_INCOMPARABLE: return a.sort() == b.sort() && v(a, 0) < v(b, 0);
    case ModelId::M3_GRID: {
      const auto n1 = v(a, 0), k1 = v(a, 1), n2 = v(b, 0), k2 = v(b, 1);
      return (n1 == n2 && k1 < k2) || (k1 == 0 && 0 < n2 && n2 < n1);
    }
    case ModelId::M6_BRAID: return v(a, 1) * v(b, 1) > 0 && v(a, 0) < v(b, 0);
    case ModelId::M8_OMEGA_PLUS_ZETA_CUT:
      if (a_is_a && b_is_a) return v(a, 0) < v(b, 0);
      if (a_is_a) return true;
      if (b_is_a) return false;
      if (v(a, 0) >= 0) return v(a, 0) < v(b, 0);
      return v(b, 0) >= 0;
  }
  return false;
}

Element reference_succ(ModelId id, const Element& e) {
  if (id == ModelId::M3_GRID) return Element("G", {v(e, 0), v(e, 1) + 1});
  if (id == ModelId::M6_BRAID) {
    const auto x = v(e, 0), y = v(e, 1);
    if (x == 0 && y == 0) return Element("Br", {2, -2});
    if (y < 0) return Element("Br", {x, -y});
    if (x % 2 == 0) return Element("Br", {x - 1, 1 - x});
    return Element("Br", {x + 3, -x - 3});
  }
  return Element(e.sort(), {v(e, 0) + 1});
}

}  // namespace

TEST(BuiltinModels, Ids) {
  std::set<std::string> ids;
  for (auto id : kAllModels) {
    ids.insert(to_string(id));
    EXPECT_EQ(parse_model_id(to_string(id)), id);
    EXPECT_EQ(parse_model_id(source_stem(id)), id);
    EXPECT_EQ(build(id)->name(), to_string(id));
  }
  EXPECT_EQ(ids.size(), 9u);
  EXPECT_FALSE(parse_model_id("m9"));
}

TEST(BuiltinModels, Examples) {
  EXPECT_EQ(build(ModelId::M1_OMEGA_PLUS_OMEGA)->succ(Element("A", {0})), Element("A", {1}));
  EXPECT_TRUE(build(ModelId::M3_GRID)->less(Element("G", {3, 0}), Element("G", {2, 0})));
  EXPECT_EQ(build(ModelId::M6_BRAID)->succ(Element("Br", {2, -2})), Element("Br", {2, 2}));
}

TEST(BuiltinModels, MatchReferenceFormulas) {
  for (auto id : kAllModels) {
    const auto m = build(id);
    const auto xs = m->enumerate(64);
    for (const auto& x : xs) {
      EXPECT_EQ(m->succ(x), reference_succ(id, x)) << to_string(id) << " " << x;
      for (const auto& y : xs) ASSERT_EQ(m->less(x, y), reference_less(id, x, y)) << to_string(id) << " " << x << " " << y;
    }
  }
}

TEST(BuiltinModels, Carriers) {
  const auto m4 = build(ModelId::M4_OMEGA_PLUS_ZETA);
  EXPECT_TRUE(m4->in_carrier(Element("B", {-7})));
  EXPECT_FALSE(m4->in_carrier(Element("A", {-7})));
  const auto m6 = build(ModelId::M6_BRAID);
  EXPECT_TRUE(m6->in_carrier(Element("Br", {0, 0})));
  EXPECT_TRUE(m6->in_carrier(Element("Br", {5, -5})));
  EXPECT_FALSE(m6->in_carrier(Element("Br", {0, 1})));
  EXPECT_FALSE(m6->in_carrier(Element("Br", {3, 2})));
  EXPECT_FALSE(m6->in_carrier(Element("Br", {-1, 1})));
}

TEST(BuiltinModels, AxiomConformance) {
  for (auto id : kAllModels) {
    const auto report = check_axioms(*build(id), regime_of(id), 64);
    EXPECT_TRUE(report.passed()) << to_string(id);
  }
  EXPECT_FALSE(check_axioms(*build(ModelId::M5_REVERSED), Regime::pre_inductive, 8).passed());
  EXPECT_FALSE(check_axioms(*build(ModelId::M7_DISCRETE), Regime::pre_inductive, 8).passed());
}

TEST(BuiltinModels, BraidOrbitCoversSmallCarrier) {
  const auto m6 = build(ModelId::M6_BRAID);
  std::set<Element> seen;
  Element x = m6->zero();
  for (int i = 0; i < 40; ++i) {
    seen.insert(x);
    x = m6->succ(x);
  }
  for (long long n = 1; n <= 8; ++n) {
    EXPECT_TRUE(seen.count(Element("Br", {n, n}))) << n;
    EXPECT_TRUE(seen.count(Element("Br", {n, -n}))) << n;
  }
  EXPECT_TRUE(seen.count(Element("Br", {0, 0})));
}

TEST(BuiltinModels, EveryBundleItemVerifies) {
  for (auto id : kAllModels) {
    const auto m = build(id);
    for (const auto& e : evidence(id)) {
      const auto c = verify(*m, e, 64);
      EXPECT_TRUE(c.verified) << to_string(id) << ": " << describe(e) << ": " << c.reason;
    }
  }
}

TEST(BuiltinModels, BundleExamples) {
  const auto m1 = evidence(ModelId::M1_OMEGA_PLUS_OMEGA);
  const auto* w = std::get_if<SubsetWitness>(&m1[0]);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->target, Principle::RI);
  EXPECT_EQ(w->excluded, Element("B", {0}));
  EXPECT_TRUE(w->member(Element("A", {7})));
  EXPECT_FALSE(w->member(Element("B", {7})));

  bool m3_descent = false;
  for (const auto& e : evidence(ModelId::M3_GRID))
    if (const auto* d = std::get_if<DescentWitness>(&e)) {
      m3_descent = d->kind == RelationKind::order;
      for (std::uint64_t j = 0; j < 10; ++j) EXPECT_EQ(d->seq(j), Element("G", {static_cast<long long>(j) + 1, 0}));
    }
  EXPECT_TRUE(m3_descent);

  bool m4_descent = false;
  for (const auto& e : evidence(ModelId::M4_OMEGA_PLUS_ZETA))
    if (const auto* d = std::get_if<DescentWitness>(&e); d && d->kind == RelationKind::successor) {
      m4_descent = true;
      for (std::uint64_t j = 0; j < 10; ++j) EXPECT_EQ(d->seq(j), Element("B", {-static_cast<long long>(j)}));
    }
  EXPECT_TRUE(m4_descent);
}
