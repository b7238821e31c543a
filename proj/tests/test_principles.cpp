#include <gtest/gtest.h>

#include <map>

#include "peano/builtin_models.hpp"
#include "peano/principles.hpp"

using namespace peano;

namespace {

Element N(long long n) { return Element("N", {n}); }

const auto H = Verdict::holds;
const auto F = Verdict::fails;
const auto U = Verdict::unknown;

using P = Principle;

// Direct statuses, before any propagation.
std::map<Principle, Verdict> expected_direct(ModelId id) {
  switch (id) {
    case ModelId::STD:
      return {{P::RI, H}, {P::SI, H}, {P::CI, H}, {P::IPS, H}, {P::WO, H},
              {P::WFO, H}, {P::WFS, H}, {P::FDO, H}, {P::FDS, H}, {P::ZS, H}};
    case ModelId::M1_OMEGA_PLUS_OMEGA:
      return {{P::RI, F}, {P::SI, F}, {P::CI, H}, {P::IPS, H}, {P::WO, H},
              {P::WFO, H}, {P::WFS, H}, {P::FDO, H}, {P::FDS, H}, {P::ZS, F}};
    case ModelId::M2_OMEGA_INCOMPARABLE:
      return {{P::RI, F}, {P::SI, F}, {P::CI, H}, {P::IPS, H}, {P::WO, F},
              {P::WFO, H}, {P::WFS, H}, {P::FDO, H}, {P::FDS, H}, {P::ZS, F}};
    case ModelId::M3_GRID:
      return {{P::RI, F}, {P::SI, F}, {P::CI, F}, {P::IPS, H}, {P::WO, F},
              {P::WFO, F}, {P::WFS, H}, {P::FDO, F}, {P::FDS, H}, {P::ZS, F}};
    case ModelId::M4_OMEGA_PLUS_ZETA:
      return {{P::RI, F}, {P::SI, F}, {P::CI, F}, {P::IPS, F}, {P::WO, F},
              {P::WFO, F}, {P::WFS, F}, {P::FDO, F}, {P::FDS, F}, {P::ZS, H}};
    case ModelId::M5_REVERSED:
      return {{P::RI, H}, {P::SI, F}, {P::CI, F}, {P::IPS, H}, {P::WO, F},
              {P::WFO, F}, {P::WFS, H}, {P::FDO, F}, {P::FDS, H}, {P::ZS, H}};
    case ModelId::M6_BRAID:
      return {{P::RI, H}, {P::SI, F}, {P::CI, H}, {P::IPS, H}, {P::WO, F},
              {P::WFO, H}, {P::WFS, H}, {P::FDO, H}, {P::FDS, H}, {P::ZS, H}};
    case ModelId::M7_DISCRETE:
      return {{P::RI, H}, {P::SI, U}, {P::CI, H}, {P::IPS, H}, {P::WO, F},
              {P::WFO, H}, {P::WFS, H}, {P::FDO, H}, {P::FDS, H}, {P::ZS, H}};
    case ModelId::M8_OMEGA_PLUS_ZETA_CUT:
      return {{P::RI, F}, {P::SI, U}, {P::CI, H}, {P::IPS, F}, {P::WO, F},
              {P::WFO, H}, {P::WFS, F}, {P::FDO, H}, {P::FDS, F}, {P::ZS, H}};
  }
  return {};
}

StatusTable table(ModelId id, std::size_t budget = 64) {
  return evaluate(*build(id), evidence(id), budget, regime_of(id));
}

}  // namespace

TEST(Principles, Names) {
  for (auto p : kAllPrinciples) EXPECT_EQ(parse_principle(to_string(p)), p);
  EXPECT_FALSE(parse_principle("XX"));
}

TEST(Principles, SubsetWitnessExamples) {
  const auto m1 = build(ModelId::M1_OMEGA_PLUS_OMEGA);
  SubsetWitness a{P::RI, "A", [](const Element& e) { return e.sort() == "A"; }, Element("B", {0})};
  EXPECT_TRUE(verify_subset_witness(*m1, a, 64));

  const auto s = build(ModelId::STD);
  SubsetWitness evens{P::RI, "evens", [](const Element& e) { return e[0] % 2 == 0; }, N(1)};
  const auto c = verify_subset_witness(*s, evens, 64);
  EXPECT_FALSE(c);
  EXPECT_EQ(c.elements, (std::vector<Element>{N(0), N(1)}));

  const auto m6 = build(ModelId::M6_BRAID);
  SubsetWitness pair{P::SI, "pair",
                     [](const Element& e) { return (e[0] == 0 && e[1] == 0) || (e[0] == 2 && e[1] == -2); },
                     Element("Br", {1, 1})};
  EXPECT_TRUE(verify_subset_witness(*m6, pair, 64));

  SubsetWitness out{P::RI, "A", [](const Element&) { return true; }, N(-1)};
  EXPECT_THROW(verify_subset_witness(*s, out, 8), CarrierError);

  SubsetWitness no_zero{P::RI, "none", [](const Element&) { return false; }, N(1)};
  EXPECT_FALSE(verify_subset_witness(*s, no_zero, 8));
  SubsetWitness all{P::RI, "all", [](const Element&) { return true; }, N(1)};
  EXPECT_FALSE(verify_subset_witness(*s, all, 8));
}

TEST(Principles, StrongSubsetNeedsKnownSections) {
  // On M1 the lower section of B(0) is infinite; a set containing all of A and
  // B(0) cannot be checked for the strong step at B(0).
  const auto m1 = build(ModelId::M1_OMEGA_PLUS_OMEGA);
  SubsetWitness w{P::SI, "A or B(0)", [](const Element& e) { return e.sort() == "A" || e[0] == 0; },
                  Element("B", {1})};
  EXPECT_FALSE(verify_subset_witness(*m1, w, 64));
}

TEST(Principles, DescentExamples) {
  DescentWitness grid{RelationKind::order, "grid",
                      [](std::uint64_t j) { return Element("G", std::vector<Int>{Int(j) + 1, 0}); }};
  EXPECT_TRUE(verify_descent(*build(ModelId::M3_GRID), grid, 64));
  DescentWitness zeta{RelationKind::successor, "zeta",
                      [](std::uint64_t j) { return Element("B", std::vector<Int>{-Int(j)}); }};
  EXPECT_TRUE(verify_descent(*build(ModelId::M4_OMEGA_PLUS_ZETA), zeta, 64));
  DescentWitness up{RelationKind::order, "up", [](std::uint64_t j) { return Element("N", std::vector<Int>{Int(j)}); }};
  const auto c = verify_descent(*build(ModelId::STD), up, 64);
  EXPECT_FALSE(c);
  EXPECT_EQ(c.step, 0u);
  DescentWitness stuck{RelationKind::order, "stuck", [](std::uint64_t) { return N(0); }};
  EXPECT_FALSE(verify_descent(*build(ModelId::M5_REVERSED), stuck, 4));
}

TEST(Principles, RankExamples) {
  auto m1_rank = [](const Element& e) {
    const auto n = e[0].convert_to<std::uint64_t>();
    if (e.sort() == "A") return ord_from_nat(n);
    return n ? ord_make({{1, 1}, {0, n}}) : Ordinal::omega();
  };
  EXPECT_TRUE(verify_rank(*build(ModelId::M1_OMEGA_PLUS_OMEGA), {RelationKind::order, "r", m1_rank}, 64));
  auto k = [](const Element& e) { return ord_from_nat(e[1].convert_to<std::uint64_t>()); };
  const auto m3 = build(ModelId::M3_GRID);
  EXPECT_TRUE(verify_rank(*m3, {RelationKind::successor, "k", k}, 64));
  const auto c = verify_rank(*m3, {RelationKind::order, "k", k}, 64);
  EXPECT_FALSE(c);
  ASSERT_EQ(c.elements.size(), 2u);
  EXPECT_TRUE(m3->less(c.elements[0], c.elements[1]));
  EXPECT_EQ(c.elements[0][1], c.elements[1][1]);
  // The pair named by the specification is among the rejected pairs.
  EXPECT_TRUE(m3->less(Element("G", {3, 0}), Element("G", {2, 0})));

  auto throws = [](const Element&) -> Ordinal { throw std::runtime_error("no"); };
  EXPECT_FALSE(verify_rank(*m3, {RelationKind::order, "bad", throws}, 4));
}

TEST(Principles, ReachabilityExamples) {
  EXPECT_TRUE(verify_reachability(*build(ModelId::STD), 100));
  const auto r = verify_reachability(*build(ModelId::M1_OMEGA_PLUS_OMEGA), 20);
  EXPECT_FALSE(r);
  EXPECT_EQ(r.stuck, Element("B", {0}));
  EXPECT_EQ(r.reason, StuckReason::no_predecessor);
  EXPECT_TRUE(verify_reachability(*build(ModelId::M6_BRAID), 64));
}

TEST(Principles, IncomparableExamples) {
  EXPECT_TRUE(verify_incomparable_pair(*build(ModelId::M2_OMEGA_INCOMPARABLE), {Element("A", {0}), Element("B", {0})}));
  EXPECT_FALSE(verify_incomparable_pair(*build(ModelId::M1_OMEGA_PLUS_OMEGA), {Element("A", {0}), Element("B", {0})}));
  EXPECT_TRUE(verify_incomparable_pair(*build(ModelId::M7_DISCRETE), {N(0), N(1)}));
  EXPECT_THROW(verify_incomparable_pair(*build(ModelId::M7_DISCRETE), {N(0), N(0)}), std::invalid_argument);
  EXPECT_THROW(verify_incomparable_pair(*build(ModelId::M7_DISCRETE), {N(0), N(-1)}), CarrierError);
}

TEST(Principles, DescentAndRankNeverBothVerify) {
  for (auto id : {ModelId::M3_GRID, ModelId::M5_REVERSED}) {
    const auto m = build(id);
    for (const auto& e : evidence(id)) {
      const auto* d = std::get_if<DescentWitness>(&e);
      if (!d || d->kind != RelationKind::order) continue;
      ASSERT_TRUE(verify_descent(*m, *d, 64));
      // Any rank at all: try the natural candidates built from parameters.
      for (std::size_t i = 0; i < m->sorts()[0].domains.size(); ++i) {
        auto r = [i](const Element& x) { return ord_from_nat(x[i].convert_to<std::uint64_t>()); };
        EXPECT_FALSE(verify_rank(*m, {RelationKind::order, "p", r}, 64)) << to_string(id);
      }
    }
  }
}

TEST(Principles, EvaluateGallery) {
  for (auto id : kAllModels) {
    const auto t = table(id);
    EXPECT_EQ(t.model, to_string(id));
    EXPECT_EQ(t.budget, 64u);
    for (const auto& [p, v] : expected_direct(id))
      EXPECT_EQ(t.verdict(p), v) << to_string(id) << " " << to_string(p);
    for (const auto& [p, entry] : t.entries) {
      if (entry.verdict != Verdict::unknown) EXPECT_TRUE(entry.evidence) << to_string(id) << " " << to_string(p);
      EXPECT_TRUE(entry.derivation.empty());
    }
  }
}

TEST(Principles, DualFormsShareStatus) {
  for (auto id : kAllModels) {
    const auto t = table(id);
    EXPECT_EQ(t.verdict(P::FDO), t.verdict(P::WFO));
    EXPECT_EQ(t.verdict(P::FDS), t.verdict(P::WFS));
  }
}

TEST(Principles, RegularAndStrongAgreeOnPreInductiveModels) {
  for (auto id : kAllModels)
    if (regime_of(id) == Regime::pre_inductive) EXPECT_EQ(table(id).verdict(P::RI), table(id).verdict(P::SI));
}

TEST(Principles, EmptyBundleIsAllUnknownExceptClosure) {
  const auto t = evaluate(*build(ModelId::M1_OMEGA_PLUS_OMEGA), {}, 16, Regime::pre_inductive);
  for (auto p : kAllPrinciples)
    EXPECT_EQ(t.verdict(p), p == P::ZS ? F : U);
}

TEST(Principles, BadEvidenceIsAnError) {
  EvidenceBundle bundle{IncomparablePair{Element("A", {0}), Element("B", {0})}};
  try {
    evaluate(*build(ModelId::M1_OMEGA_PLUS_OMEGA), bundle, 64, Regime::pre_inductive);
    FAIL() << "expected EvidenceError";
  } catch (const EvidenceError& e) {
    EXPECT_NE(std::string(e.what()).find("bundle item 0"), std::string::npos);
  }
  // Two verified items that settle RI differently: under the pre-inductive
  // reading a strong-induction counterexample also refutes RI.
  EvidenceBundle conflict{ReachabilityCertificate{}, SubsetWitness{P::SI, "zero", [](const Element& e) { return e[0] == 0; }, N(1)}};
  EXPECT_THROW(evaluate(*build(ModelId::M5_REVERSED), conflict, 64, Regime::pre_inductive), EvidenceError);
}
