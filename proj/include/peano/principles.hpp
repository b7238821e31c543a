#pragma once

// Budgeted verifiers for failure witnesses and hold certificates, and the
// status table they produce. Nothing here decides a principle outright: a
// status is Holds or Fails only when a supplied piece of evidence verifies.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "peano/evidence.hpp"
#include "peano/model.hpp"

namespace peano {

struct Check {
  bool verified = false;
  std::string reason;
  std::vector<Element> elements;  // offending elements on rejection
  std::optional<std::uint64_t> step;

  explicit operator bool() const noexcept { return verified; }

  static Check ok() { return {true, {}, {}, std::nullopt}; }
  static Check reject(std::string why, std::vector<Element> els = {}, std::optional<std::uint64_t> step = {}) {
    return {false, std::move(why), std::move(els), step};
  }
};

// Refutes RI (closure under succ) or SI (closure under the strong-induction
// step). For SI, a hypothesis X_{<=p} subset-of Y counts as established only
// when the reflexive section is known exhaustively.
inline Check verify_subset_witness(const Model& m, const SubsetWitness& w, std::size_t budget) {
  m.require(w.excluded);
  if (w.target != Principle::RI && w.target != Principle::SI)
    throw std::invalid_argument("subset witnesses refute RI or SI only");
  const auto zero = m.zero();
  if (!w.member(zero)) return Check::reject("zero is not a member", {zero});
  if (w.member(w.excluded)) return Check::reject("excluded element is a member", {w.excluded});

  for (const auto& p : m.enumerate(budget)) {
    if (w.target == Principle::RI) {
      if (!w.member(p)) continue;
      const auto s = m.succ(p);
      if (!w.member(s)) return Check::reject("not closed under succ at " + p.to_string(), {p, s});
      continue;
    }
    const auto sec = section(m, SectionKind::order_reflexive, p, budget);
    bool outside = false;
    for (const auto& x : sec.elements) {
      if (!w.member(x)) {
        outside = true;
        break;
      }
    }
    if (outside) continue;  // hypothesis false, vacuous
    if (!sec.exhaustive)
      return Check::reject("cannot establish the lower section of " + p.to_string() + " at this budget", {p});
    const auto s = m.succ(p);
    if (!w.member(s)) return Check::reject("strong step fails at " + p.to_string(), {p, s});
  }
  return Check::ok();
}

// Checks seq(0..budget) are distinct carrier elements with seq(j+1) below
// seq(j) (order) or succ(seq(j+1)) = seq(j) (successor).
inline Check verify_descent(const Model& m, const DescentWitness& w, std::size_t budget) {
  std::vector<Element> seq;
  std::set<Element> seen;
  for (std::uint64_t j = 0; j <= budget; ++j) {
    auto e = w.seq(j);
    if (!m.in_carrier(e)) return Check::reject("term outside the carrier", {e}, j);
    if (!seen.insert(e).second) return Check::reject("repeated term", {e}, j);
    seq.push_back(std::move(e));
  }
  for (std::uint64_t j = 0; j < budget; ++j) {
    const auto& cur = seq[j];
    const auto& next = seq[j + 1];
    const bool step_ok = w.kind == RelationKind::order ? m.less(next, cur) : m.succ(next) == cur;
    if (!step_ok) return Check::reject("step does not descend", {cur, next}, j);
  }
  return Check::ok();
}

namespace detail {

inline std::optional<Ordinal> try_rank(const std::function<Ordinal(const Element&)>& rank, const Element& e,
                                       std::string& err) {
  try {
    return rank(e);
  } catch (const std::exception& ex) {
    err = ex.what();
    return std::nullopt;
  }
}

}  // namespace detail

inline Check verify_rank(const Model& m, const RankCertificate& c, std::size_t budget) {
  const auto xs = m.enumerate(budget);
  std::vector<Ordinal> ranks;
  ranks.reserve(xs.size());
  std::string err;
  for (const auto& x : xs) {
    auto r = detail::try_rank(c.rank, x, err);
    if (!r) return Check::reject("rank undefined at " + x.to_string() + ": " + err, {x});
    ranks.push_back(std::move(*r));
  }
  if (c.kind == RelationKind::order) {
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < xs.size(); ++j)
        if (m.less(xs[i], xs[j]) && !(ranks[i] < ranks[j]))
          return Check::reject("order step does not increase the rank", {xs[i], xs[j]});
    return Check::ok();
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto s = m.succ(xs[i]);
    auto r = detail::try_rank(c.rank, s, err);
    if (!r) return Check::reject("rank undefined at " + s.to_string() + ": " + err, {s});
    if (!(ranks[i] < *r)) return Check::reject("successor step does not increase the rank", {xs[i], s});
  }
  return Check::ok();
}

enum class StuckReason { none, no_predecessor, step_cap };

struct Reachability {
  bool verified = true;
  std::optional<Element> stuck;
  StuckReason reason = StuckReason::none;
  explicit operator bool() const noexcept { return verified; }
};

// Walks every enumerated element back along pred, at most `budget` steps.
inline Reachability verify_reachability(const Model& m, std::size_t budget) {
  const auto zero = m.zero();
  for (const auto& x : m.enumerate(budget)) {
    Element cur = x;
    std::size_t steps = 0;
    while (cur != zero) {
      auto p = m.pred(cur);
      if (!p) return {false, cur, StuckReason::no_predecessor};
      if (++steps > budget) return {false, x, StuckReason::step_cap};
      cur = std::move(*p);
    }
  }
  return {};
}

inline Check verify_incomparable_pair(const Model& m, const IncomparablePair& w) {
  m.require(w.x);
  m.require(w.y);
  if (w.x == w.y) throw std::invalid_argument("incomparable pair needs two distinct elements");
  if (leq(m, w.x, w.y)) return Check::reject(w.x.to_string() + " <= " + w.y.to_string(), {w.x, w.y});
  if (leq(m, w.y, w.x)) return Check::reject(w.y.to_string() + " <= " + w.x.to_string(), {w.y, w.x});
  return Check::ok();
}

inline Check verify_linearity(const Model& m, const LinearityPlusRank& c, std::size_t budget) {
  const auto xs = m.enumerate(budget);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!m.less(xs[i], xs[j]) && !m.less(xs[j], xs[i]))
        return Check::reject("incomparable pair", {xs[i], xs[j]});
  return verify_rank(m, RankCertificate{RelationKind::order, c.name, c.rank}, budget);
}

enum class Verdict { holds, fails, unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "Holds";
    case Verdict::fails: return "Fails";
    case Verdict::unknown: return "Unknown";
  }
  return "?";
}

// One implication used while propagating a status.
struct DerivationStep {
  Principle src;
  Principle dst;
  bool almost_valid = false;
  bool backward = false;  // modus tollens
};

struct StatusEntry {
  Verdict verdict = Verdict::unknown;
  std::optional<Evidence> evidence;      // set when verified directly
  std::vector<DerivationStep> derivation;  // set when propagated
};

struct StatusTable {
  std::string model;
  std::size_t budget = 0;
  Regime regime = Regime::pre_inductive;
  std::map<Principle, StatusEntry> entries;

  StatusTable() {
    for (auto p : kAllPrinciples) entries[p];
  }

  Verdict verdict(Principle p) const { return entries.at(p).verdict; }
};

class EvidenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The principles a verified evidence item settles, and how.
inline std::vector<std::pair<Principle, Verdict>> consequences(const Evidence& e, Regime regime) {
  using P = Principle;
  const auto H = Verdict::holds;
  const auto F = Verdict::fails;
  const bool pre = regime == Regime::pre_inductive;
  struct V {
    bool pre;
    Verdict H, F;
    std::vector<std::pair<P, Verdict>> operator()(const SubsetWitness& w) const {
      // Regular and strong induction coincide on pre-inductive models.
      if (pre) return {{P::RI, F}, {P::SI, F}};
      return {{w.target, F}};
    }
    std::vector<std::pair<P, Verdict>> operator()(const DescentWitness& w) const {
      // The range of an order descent has no minimal, hence no minimum.
      if (w.kind == RelationKind::order) return {{P::WFO, F}, {P::FDO, F}, {P::CI, F}, {P::WO, F}};
      return {{P::WFS, F}, {P::FDS, F}, {P::IPS, F}};
    }
    std::vector<std::pair<P, Verdict>> operator()(const IncomparablePair&) const { return {{P::WO, F}}; }
    std::vector<std::pair<P, Verdict>> operator()(const RankCertificate& c) const {
      if (c.kind == RelationKind::order) return {{P::WFO, H}, {P::FDO, H}, {P::CI, H}};
      return {{P::WFS, H}, {P::FDS, H}, {P::IPS, H}};
    }
    std::vector<std::pair<P, Verdict>> operator()(const ReachabilityCertificate&) const {
      if (pre) return {{P::RI, H}, {P::SI, H}};
      return {{P::RI, H}};
    }
    std::vector<std::pair<P, Verdict>> operator()(const LinearityPlusRank&) const { return {{P::WO, H}}; }
    std::vector<std::pair<P, Verdict>> operator()(const ClosureCheck& c) const { return {{P::ZS, c.holds ? H : F}}; }
  };
  return std::visit(V{pre, H, F}, e);
}

inline Check verify(const Model& m, const Evidence& e, std::size_t budget) {
  struct V {
    const Model& m;
    std::size_t budget;
    Check operator()(const SubsetWitness& w) const { return verify_subset_witness(m, w, budget); }
    Check operator()(const DescentWitness& w) const { return verify_descent(m, w, budget); }
    Check operator()(const IncomparablePair& w) const { return verify_incomparable_pair(m, w); }
    Check operator()(const RankCertificate& c) const { return verify_rank(m, c, budget); }
    Check operator()(const ReachabilityCertificate&) const {
      auto r = verify_reachability(m, budget);
      if (r) return Check::ok();
      return Check::reject(r.reason == StuckReason::no_predecessor ? "nonzero element without predecessor"
                                                                   : "predecessor chain exceeds the step cap",
                           {*r.stuck});
    }
    Check operator()(const LinearityPlusRank& c) const { return verify_linearity(m, c, budget); }
    Check operator()(const ClosureCheck& c) const {
      const auto r = zero_succ_closure(m, budget);
      if (r.holds_at_budget == c.holds && r.witness == c.witness) return Check::ok();
      return Check::reject("closure scan disagrees with the claim");
    }
  };
  return std::visit(V{m, budget}, e);
}

// Verifies every bundle item and records what it settles; ZS comes from the
// closure scan. Principles without evidence stay Unknown.
inline StatusTable evaluate(const Model& m, const EvidenceBundle& bundle, std::size_t budget, Regime regime) {
  StatusTable t;
  t.model = m.name();
  t.budget = budget;
  t.regime = regime;

  auto assign = [&](Principle p, Verdict v, const Evidence& e, std::size_t item) {
    auto& entry = t.entries[p];
    if (entry.verdict == Verdict::unknown) {
      entry.verdict = v;
      entry.evidence = e;
    } else if (entry.verdict != v) {
      throw EvidenceError("bundle item " + std::to_string(item) + " (" + describe(e) + ") contradicts the " +
                          to_string(entry.verdict) + " verdict already recorded for " + to_string(p));
    }
  };

  for (std::size_t i = 0; i < bundle.size(); ++i) {
    const auto& e = bundle[i];
    Check c;
    try {
      c = verify(m, e, budget);
    } catch (const std::exception& ex) {
      c = Check::reject(ex.what());
    }
    if (!c)
      throw EvidenceError("bundle item " + std::to_string(i) + " (" + evidence_kind(e) + ": " + describe(e) +
                          ") rejected: " + c.reason);
    for (const auto& [p, v] : consequences(e, regime)) assign(p, v, e, i);
  }

  const auto closure = zero_succ_closure(m, budget);
  assign(Principle::ZS, closure.holds_at_budget ? Verdict::holds : Verdict::fails,
         ClosureCheck{closure.holds_at_budget, closure.witness}, bundle.size());
  return t;
}

}  // namespace peano
