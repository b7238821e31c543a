#pragma once

// The reproduction suite: each criterion recomputes one published result and
// compares it with the expected statuses.

#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "peano/peano.hpp"

namespace peano::repro {

struct Config {
  std::size_t budget = 64;
  std::uint64_t seed = 7;
  std::string models_dir = PEANO_MODELS_DIR;
};

struct Outcome {
  int id = 0;
  std::string title;
  bool passed = true;
  std::vector<std::string> failures;  // empty when passed
  std::string summary;                // one line when passed
};

namespace detail {

using P = Principle;
constexpr auto H = Verdict::holds;
constexpr auto F = Verdict::fails;

// Collects mismatches for one criterion.
class Probe {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void expect_verdict(const StatusTable& t, Principle p, Verdict v) {
    expect(t.verdict(p) == v, t.model + ": " + to_string(p) + " is " + to_string(t.verdict(p)) + ", expected " +
                                  to_string(v));
  }
  void expect_verdicts(const StatusTable& t, const std::map<Principle, Verdict>& want) {
    for (const auto& [p, v] : want) expect_verdict(t, p, v);
  }
  void expect_verified(const Model& m, const Evidence& e, std::size_t budget) {
    const auto c = verify(m, e, budget);
    expect(c.verified, m.name() + ": " + describe(e) + " rejected: " + c.reason);
  }
  void expect_consistent(const StatusTable& t) {
    const auto g = build_graph(t.regime);
    const auto bad = check_consistency(t, g);
    expect(!bad, t.model + ": contradicts " + (bad ? edge_label(*bad) : std::string()));
  }
  std::vector<std::string> failures;
};

inline const Evidence& item(const EvidenceBundle& b, const std::string& kind, std::size_t nth = 0) {
  for (const auto& e : b)
    if (evidence_kind(e) == kind && nth-- == 0) return e;
  throw std::logic_error("bundle has no " + kind);
}

inline StatusTable direct(ModelId id, std::size_t budget) {
  return evaluate(*build(id), evidence(id), budget, regime_of(id));
}

inline StatusTable full(ModelId id, std::size_t budget) {
  return propagate(direct(id, budget), build_graph(regime_of(id)));
}

inline std::string witness_text(const ClauseVerdict* c) {
  if (!c || c->passed) return "none";
  std::string out;
  for (const auto& w : c->witness) out += (out.empty() ? "" : " ") + w.to_string();
  return out;
}

inline std::string agree_text(const oracle::FuzzSummary& s, bool duality) {
  return std::to_string(duality ? s.duality_agree : s.theorem_agree) + "/" + std::to_string(s.checked);
}

inline std::string c1(Probe& pr, const Config& cfg) {
  for (auto id : kAllModels) {
    const auto r = check_axioms(*build(id), regime_of(id), cfg.budget);
    pr.expect(r.passed(), std::string(to_string(id)) + " fails its " + to_string(regime_of(id)) + " axioms at " +
                              (r.first_failure() ? to_string(r.first_failure()->clause) : ""));
  }
  const auto m5 = check_axioms(*build(ModelId::M5_REVERSED), Regime::pre_inductive, 8);
  const auto* zero = m5.find(Clause::nothing_below_zero);
  pr.expect(zero && !zero->passed && !zero->witness.empty(), "m5-reversed passes nothing-below-zero at budget 8");
  const auto m7 = check_axioms(*build(ModelId::M7_DISCRETE), Regime::pre_inductive, 8);
  const auto* below = m7.find(Clause::below_successor);
  pr.expect(below && !below->passed && !below->witness.empty(), "m7-discrete passes below-successor at budget 8");
  return "9 models pass their axioms at budget " + std::to_string(cfg.budget) + "; m5 below zero: " +
         witness_text(zero) + "; m7 below successor: " + witness_text(below);
}

inline std::string c2(Probe& pr, const Config& cfg) {
  const auto id = ModelId::M1_OMEGA_PLUS_OMEGA;
  const auto m = build(id);
  const auto b = evidence(id);
  pr.expect_verified(*m, item(b, "subset-witness"), cfg.budget);
  pr.expect_verified(*m, item(b, "rank-certificate"), cfg.budget);
  const auto t = direct(id, cfg.budget);
  pr.expect_verdicts(t, {{P::CI, H}, {P::IPS, H}, {P::WO, H}, {P::WFO, H}, {P::WFS, H}, {P::FDO, H}, {P::FDS, H},
                         {P::RI, F}, {P::SI, F}, {P::ZS, F}});
  pr.expect_consistent(t);
  return "CI IPS WO WFO WFS FDO FDS Holds; RI SI ZS Fails; consistent with the pre-inductive graph";
}

inline std::string c3(Probe& pr, const Config& cfg) {
  const auto id = ModelId::M2_OMEGA_INCOMPARABLE;
  const auto m = build(id);
  const auto b = evidence(id);
  const auto& pair = item(b, "incomparable-pair");
  pr.expect_verified(*m, pair, cfg.budget);
  pr.expect_verified(*m, item(b, "rank-certificate"), cfg.budget);
  const auto t = direct(id, cfg.budget);
  pr.expect_verdicts(t, {{P::WO, F}, {P::WFO, H}});
  pr.expect_consistent(t);
  return describe(pair) + ": WO Fails, WFO Holds";
}

inline std::string c4(Probe& pr, const Config& cfg) {
  const auto id = ModelId::M3_GRID;
  const auto m = build(id);
  const auto b = evidence(id);
  const auto& rank = item(b, "rank-certificate");
  const auto& descent = item(b, "descent-witness");
  pr.expect(std::get<RankCertificate>(rank).kind == RelationKind::successor, "m3 rank is not a successor rank");
  pr.expect(std::get<DescentWitness>(descent).kind == RelationKind::order, "m3 descent is not an order descent");
  pr.expect_verified(*m, rank, cfg.budget);
  pr.expect_verified(*m, descent, 64);
  const auto t = direct(id, cfg.budget);
  pr.expect_verdicts(t, {{P::WFS, H}, {P::WFO, F}});
  pr.expect_consistent(t);
  return describe(rank) + ": WFS Holds; " + describe(descent) + ": WFO Fails";
}

inline std::string c5(Probe& pr, const Config& cfg) {
  const auto id = ModelId::M4_OMEGA_PLUS_ZETA;
  const auto m = build(id);
  const auto closure = zero_succ_closure(*m, 100);
  pr.expect(closure.holds_at_budget, "m4: ZS fails at budget 100");
  const auto& descent = item(evidence(id), "descent-witness", 1);
  pr.expect(std::get<DescentWitness>(descent).kind == RelationKind::successor, "m4 second descent is not successor");
  pr.expect_verified(*m, descent, cfg.budget);
  StatusTable seed;
  seed.model = to_string(id);
  seed.regime = regime_of(id);
  seed.entries[P::WFS].verdict = F;
  seed.entries[P::ZS].verdict = closure.holds_at_budget ? H : F;
  const auto t = propagate(seed, build_graph(seed.regime));
  std::size_t fails = 0;
  for (auto p : kAllPrinciples)
    if (p != P::ZS) {
      pr.expect_verdict(t, p, F);
      fails += t.verdict(p) == F;
    }
  return "ZS Holds at budget 100; " + describe(descent) + "; WFS Fails propagates to " + std::to_string(fails) +
         "/9 principles";
}

inline std::string c6_7(Probe& pr, const Config& cfg, bool duality) {
  const auto ex = oracle::exhaustive(3);
  const auto four = oracle::sampled(4, 10000, cfg.seed);
  const auto fz = oracle::fuzz(10, 500, cfg.seed);
  for (const auto* s : {&ex, &four, &fz}) {
    const auto agree = duality ? s->duality_agree : s->theorem_agree;
    pr.expect(agree == s->checked, "disagreement: " + agree_text(*s, duality) + " agree");
  }
  pr.expect(ex.checked == 531, "exhaustive corpus has " + std::to_string(ex.checked) + " relations, expected 531");
  return "exhaustive n <= 3: " + agree_text(ex, duality) + "; sampled n = 4: " + agree_text(four, duality) +
         "; seeded n <= 10: " + agree_text(fz, duality) + " agree (seed " + std::to_string(cfg.seed) + ")";
}

inline std::string c8(Probe& pr, const Config& cfg) {
  const auto m = build(ModelId::STD);
  pr.expect(zero_succ_closure(*m, cfg.budget).holds_at_budget, "std: ZS fails");
  const auto xs = m->enumerate(cfg.budget);
  const auto z = m->zero();
  std::size_t pairs = 0;
  for (const auto& x : xs) {
    pr.expect(leq(*m, z, x), "std: not 0 <= " + x.to_string());
    for (const auto& y : xs) {
      ++pairs;
      if (m->less(x, y)) pr.expect(m->less(m->succ(x), m->succ(y)), "std: succ not monotone at " + x.to_string());
      const int rel = int(m->less(x, y)) + int(x == y) + int(m->less(y, x));
      pr.expect(rel == 1, "std: trichotomy fails at " + x.to_string() + ", " + y.to_string());
    }
  }
  return "ZS, 0 <= x, succ monotone, trichotomy on " + std::to_string(pairs) + " pairs";
}

inline std::string c9(Probe& pr, const Config& cfg) {
  const std::map<ModelId, std::map<Principle, Verdict>> want = {
      {ModelId::M5_REVERSED, {{P::RI, H}, {P::SI, F}, {P::CI, F}, {P::WFS, H}, {P::WFO, F}, {P::WO, F}}},
      {ModelId::M6_BRAID, {{P::CI, H}, {P::ZS, H}, {P::SI, F}}},
      {ModelId::M7_DISCRETE, {{P::WFO, H}, {P::ZS, H}, {P::WO, F}}},
      {ModelId::M8_OMEGA_PLUS_ZETA_CUT, {{P::WFO, H}, {P::WFS, F}}},
  };
  std::vector<StatusTable> tables;
  for (const auto& [id, verdicts] : want) {
    const auto t = full(id, cfg.budget);
    pr.expect_verdicts(t, verdicts);
    pr.expect_consistent(t);
    tables.push_back(t);
  }
  const auto g = build_graph(Regime::sub_inductive);
  std::size_t refuted = 0;
  for (const auto& e : g.edges()) refuted += e.status == EdgeStatus::invalid;
  for (const auto& e : uncovered_invalid_edges(g, tables)) pr.expect(false, "uncovered edge " + edge_label(e));
  return "m5 m6 m7 m8 tables as expected and consistent; " + std::to_string(refuted) +
         " refuted sub-inductive edges all covered";
}

inline std::string c10(Probe& pr, const Config& cfg) {
  for (auto id : kAllModels) {
    const std::string stem = source_stem(id);
    const auto dsl = dsl::load_file(cfg.models_dir + "/" + stem + ".model", cfg.budget);
    const auto ref = build(id);
    const auto& m = *dsl.model;
    pr.expect(m.zero() == ref->zero(), stem + ": zero differs");
    const auto xs = ref->enumerate(cfg.budget);
    pr.expect(m.enumerate(cfg.budget) == xs, stem + ": enumeration differs");
    std::size_t bad = 0;
    for (const auto& x : xs) {
      bad += m.succ(x) != ref->succ(x);
      bad += m.pred(x) != ref->pred(x);
      for (const auto& y : xs) bad += m.less(x, y) != ref->less(x, y);
    }
    pr.expect(bad == 0, stem + ": " + std::to_string(bad) + " disagreements on succ/pred/less");
    const auto a = evaluate(m, dsl.evidence, cfg.budget, dsl.regime);
    const auto b = direct(id, cfg.budget);
    pr.expect(a.regime == b.regime, stem + ": regime differs");
    for (auto p : kAllPrinciples) {
      const auto& ea = a.entries.at(p);
      const auto& eb = b.entries.at(p);
      const bool same = ea.verdict == eb.verdict && ea.evidence.has_value() == eb.evidence.has_value() &&
                        (!ea.evidence || (evidence_kind(*ea.evidence) == evidence_kind(*eb.evidence) &&
                                          describe(*ea.evidence) == describe(*eb.evidence)));
      pr.expect(same, stem + ": " + to_string(p) + " entry differs");
    }
  }
  return "9 sources agree with the builtins on enumerate(" + std::to_string(cfg.budget) +
         ") and yield identical tables";
}

}  // namespace detail

struct Criterion {
  int id;
  std::string title;
  std::function<std::string(detail::Probe&, const Config&)> run;
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "axiom conformance", detail::c1},
      {2, "m1 omega + omega", detail::c2},
      {3, "m2 incomparable copies", detail::c3},
      {4, "m3 grid", detail::c4},
      {5, "m4 omega + zeta", detail::c5},
      {6, "well-foundedness vs induction oracle",
       [](detail::Probe& p, const Config& c) { return detail::c6_7(p, c, false); }},
      {7, "well-foundedness vs finite descent oracle",
       [](detail::Probe& p, const Config& c) { return detail::c6_7(p, c, true); }},
      {8, "standard model facts", detail::c8},
      {9, "sub-inductive separations", detail::c9},
      {10, "DSL round-trip", detail::c10},
  };
  return all;
}

inline Outcome run_criterion(const Criterion& c, const Config& cfg) {
  Outcome out{c.id, c.title};
  detail::Probe pr;
  try {
    out.summary = c.run(pr, cfg);
  } catch (const std::exception& e) {
    pr.failures.push_back(std::string("error: ") + e.what());
  }
  out.failures = std::move(pr.failures);
  out.passed = out.failures.empty();
  return out;
}

inline std::vector<Outcome> run_all(const Config& cfg) {
  std::vector<Outcome> out;
  for (const auto& c : criteria()) out.push_back(run_criterion(c, cfg));
  return out;
}

}  // namespace peano::repro
