#pragma once

// The valid / almost-valid / invalid implications among the principles, per
// axiom regime, with status propagation and a consistency check.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "peano/model.hpp"
#include "peano/principles.hpp"

namespace peano {

enum class EdgeStatus { valid, almost_valid, invalid };

inline const char* to_string(EdgeStatus s) {
  switch (s) {
    case EdgeStatus::valid: return "valid";
    case EdgeStatus::almost_valid: return "almost-valid";
    case EdgeStatus::invalid: return "invalid";
  }
  return "?";
}

struct ImplicationEdge {
  Principle src;
  Principle dst;
  EdgeStatus status = EdgeStatus::valid;
  std::string cite;
  // For invalid edges: the refutation holds even on models satisfying ZS.
  bool refuted_under_zs = false;

  friend bool operator==(const ImplicationEdge&, const ImplicationEdge&) = default;
};

inline std::string edge_label(const ImplicationEdge& e) {
  return std::string(to_string(e.src)) + "->" + to_string(e.dst);
}

class ImplicationGraph {
 public:
  ImplicationGraph(Regime regime, std::vector<ImplicationEdge> edges) : regime_(regime), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) {
      return std::string(to_string(a.src)) + " " + to_string(a.dst) <
             std::string(to_string(b.src)) + " " + to_string(b.dst);
    });
    for (std::size_t i = 1; i < edges_.size(); ++i)
      if (edges_[i - 1].src == edges_[i].src && edges_[i - 1].dst == edges_[i].dst)
        throw std::invalid_argument("duplicate implication edge " + edge_label(edges_[i]));
  }

  Regime regime() const noexcept { return regime_; }
  const std::vector<ImplicationEdge>& edges() const noexcept { return edges_; }

  const ImplicationEdge* find(Principle src, Principle dst) const {
    for (const auto& e : edges_)
      if (e.src == src && e.dst == dst) return &e;
    return nullptr;
  }

 private:
  Regime regime_;
  std::vector<ImplicationEdge> edges_;
};

namespace detail {

inline void both_ways(std::vector<ImplicationEdge>& out, Principle a, Principle b, const std::string& cite) {
  out.push_back({a, b, EdgeStatus::valid, cite});
  out.push_back({b, a, EdgeStatus::valid, cite});
}

}  // namespace detail

inline ImplicationGraph build_graph(Regime regime) {
  using P = Principle;
  const auto V = EdgeStatus::valid;
  const auto A = EdgeStatus::almost_valid;
  const auto X = EdgeStatus::invalid;
  std::vector<ImplicationEdge> e;

  // Shared by both regimes.
  e.push_back({P::SI, P::RI, V, "strong induction implies regular induction"});
  e.push_back({P::SI, P::CI, V, "strong induction implies complete induction"});
  e.push_back({P::RI, P::IPS, V, "regular induction is the induction principle of the successor relation"});
  e.push_back({P::IPS, P::RI, A, "converse holds when every nonzero element is a successor"});
  detail::both_ways(e, P::CI, P::WFO, "an induction principle holds iff its relation is well-founded");
  detail::both_ways(e, P::IPS, P::WFS, "an induction principle holds iff its relation is well-founded");
  detail::both_ways(e, P::FDO, P::WFO, "finite descent is the contrapositive of well-foundedness");
  detail::both_ways(e, P::FDS, P::WFS, "finite descent is the contrapositive of well-foundedness");
  e.push_back({P::WO, P::WFO, V, "a minimum is a minimal element"});
  e.push_back({P::RI, P::ZS, V, "under regular induction every nonzero element is a successor"});

  if (regime == Regime::pre_inductive) {
    e.push_back({P::RI, P::SI, V, "regular and strong induction are equivalent"});
    e.push_back({P::CI, P::SI, A, "complete induction gives strong induction when every nonzero element is a successor"});
    e.push_back({P::WFO, P::WFS, V, "a minimal element for the order is minimal for the successor"});
    e.push_back({P::WFS, P::WFO, A, "successor minimality lifts to the order when every nonzero element is a successor"});
    e.push_back({P::WFO, P::WO, A, "a minimal element is a minimum when every nonzero element is a successor"});
    e.push_back({P::RI, P::WO, V, "regular induction makes the order a well-order"});
    e.push_back({P::CI, P::RI, X, "omega + omega: complete induction without regular induction"});
    e.push_back({P::ZS, P::RI, X, "omega + zeta: every nonzero element a successor, no induction"});
  } else {
    e.push_back({P::RI, P::SI, X, "dual order on the naturals: regular but not strong induction", true});
    e.push_back({P::RI, P::CI, X, "dual order on the naturals: regular but not complete induction", true});
    e.push_back({P::RI, P::WO, X, "dual order on the naturals: regular induction without a well-order", true});
    e.push_back({P::WFS, P::WFO, X, "dual order on the naturals: successor well-founded, order not", true});
    e.push_back({P::CI, P::SI, X, "braided chains: complete but not strong induction", true});
    e.push_back({P::WFO, P::WO, X, "empty order: well-founded without minimum", true});
    e.push_back({P::WFO, P::WFS, X, "omega + zeta with cut order: order well-founded, successor not"});
  }
  return ImplicationGraph(regime, std::move(e));
}

inline bool edge_usable(const ImplicationEdge& e, const StatusTable& t) {
  if (e.status == EdgeStatus::valid) return true;
  return e.status == EdgeStatus::almost_valid && t.verdict(Principle::ZS) == Verdict::holds;
}

// The first usable edge whose source holds while its target fails.
inline std::optional<ImplicationEdge> check_consistency(const StatusTable& t, const ImplicationGraph& g) {
  for (const auto& e : g.edges()) {
    if (!edge_usable(e, t)) continue;
    if (t.verdict(e.src) == Verdict::holds && t.verdict(e.dst) == Verdict::fails) return e;
  }
  return std::nullopt;
}

class PropagationError : public std::runtime_error {
 public:
  PropagationError(const std::string& what, ImplicationEdge edge) : std::runtime_error(what), edge_(std::move(edge)) {}
  const ImplicationEdge& edge() const noexcept { return edge_; }

 private:
  ImplicationEdge edge_;
};

// Modus ponens forward and modus tollens backward over usable edges, to a
// fixpoint. Existing verdicts are never changed.
inline StatusTable propagate(const StatusTable& in, const ImplicationGraph& g) {
  if (auto v = check_consistency(in, g))
    throw PropagationError("table contradicts " + std::string(to_string(v->status)) + " edge " + edge_label(*v), *v);
  StatusTable t = in;
  const std::size_t max_rounds = g.edges().size() + 1;
  for (std::size_t round = 0;; ++round) {
    if (round > max_rounds) throw std::logic_error("propagation did not reach a fixpoint");
    bool changed = false;
    for (const auto& e : g.edges()) {
      if (!edge_usable(e, t)) continue;
      auto& src = t.entries[e.src];
      auto& dst = t.entries[e.dst];
      const bool almost = e.status == EdgeStatus::almost_valid;
      if (src.verdict == Verdict::holds && dst.verdict == Verdict::unknown) {
        dst.verdict = Verdict::holds;
        dst.derivation = src.derivation;
        dst.derivation.push_back({e.src, e.dst, almost, false});
        changed = true;
      } else if (dst.verdict == Verdict::fails && src.verdict == Verdict::unknown) {
        src.verdict = Verdict::fails;
        src.derivation = dst.derivation;
        src.derivation.push_back({e.src, e.dst, almost, true});
        changed = true;
      } else if (src.verdict == Verdict::holds && dst.verdict == Verdict::fails) {
        throw PropagationError("contradiction along " + edge_label(e), e);
      }
    }
    if (!changed) break;
  }
  return t;
}

// Tables refuting an edge: source holds, target fails, and ZS holds when the
// refutation is claimed even under ZS. For almost-valid edges the table must
// lack ZS, which refutes only the unconditional implication.
inline std::vector<std::string> refuting_models(const ImplicationEdge& e, const std::vector<StatusTable>& tables) {
  std::vector<std::string> out;
  for (const auto& t : tables) {
    if (t.verdict(e.src) != Verdict::holds || t.verdict(e.dst) != Verdict::fails) continue;
    const auto zs = t.verdict(Principle::ZS);
    if (e.status == EdgeStatus::invalid && e.refuted_under_zs && zs != Verdict::holds) continue;
    if (e.status == EdgeStatus::almost_valid && zs == Verdict::holds) continue;
    if (e.status == EdgeStatus::valid) continue;
    out.push_back(t.model);
  }
  return out;
}

inline std::vector<ImplicationEdge> uncovered_invalid_edges(const ImplicationGraph& g,
                                                            const std::vector<StatusTable>& tables) {
  std::vector<ImplicationEdge> out;
  for (const auto& e : g.edges())
    if (e.status == EdgeStatus::invalid && refuting_models(e, tables).empty()) out.push_back(e);
  return out;
}

inline std::string export_dot(const ImplicationGraph& g, const std::vector<StatusTable>& tables = {}) {
  std::ostringstream os;
  os << "digraph implications_" << to_string(g.regime()) << " {\n";
  os << "  node [shape=box];\n";
  std::vector<std::string> names;
  for (auto p : kAllPrinciples) names.emplace_back(to_string(p));
  std::sort(names.begin(), names.end());
  auto sorted_tables = tables;
  std::sort(sorted_tables.begin(), sorted_tables.end(),
            [](const auto& a, const auto& b) { return a.model < b.model; });
  for (const auto& n : names) {
    os << "  " << n << " [label=\"" << n << "\"";
    if (!sorted_tables.empty()) {
      const auto p = *parse_principle(n);
      os << ", tooltip=\"";
      for (std::size_t i = 0; i < sorted_tables.size(); ++i) {
        if (i) os << "\\n";
        os << sorted_tables[i].model << ": " << to_string(sorted_tables[i].verdict(p));
      }
      os << "\"";
    }
    os << "];\n";
  }
  for (const auto& e : g.edges()) {
    os << "  " << to_string(e.src) << " -> " << to_string(e.dst) << " [";
    switch (e.status) {
      case EdgeStatus::valid: os << "style=solid"; break;
      case EdgeStatus::almost_valid: os << "style=dashed"; break;
      case EdgeStatus::invalid: os << "style=solid, label=\"x\", color=red"; break;
    }
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace peano
