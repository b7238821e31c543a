#pragma once

// Text and JSON renderings shared by the CLI commands.

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "peano/peano.hpp"

namespace peano::report {

using nlohmann::ordered_json;

inline constexpr int kSchema = 1;

inline const char* regime_name(Regime r) { return r == Regime::pre_inductive ? "pre-inductive" : "sub-inductive"; }

inline std::string derivation_text(const std::vector<DerivationStep>& steps) {
  std::string out;
  for (const auto& s : steps) {
    if (!out.empty()) out += ", ";
    out += std::string(to_string(s.src)) + "->" + to_string(s.dst);
    if (s.backward) out += " backward";
    if (s.almost_valid) out += " given ZS";
  }
  return out;
}

inline ordered_json elements_json(const std::vector<Element>& xs) {
  auto out = ordered_json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

inline ordered_json table_json(const StatusTable& t) {
  ordered_json j;
  j["model"] = t.model;
  j["budget"] = t.budget;
  j["regime"] = to_string(t.regime);
  ordered_json st = ordered_json::object();
  for (auto p : kAllPrinciples) {
    const auto& e = t.entries.at(p);
    ordered_json row;
    row["verdict"] = to_string(e.verdict);
    if (e.evidence)
      row["evidence"] = {{"kind", evidence_kind(*e.evidence)}, {"description", describe(*e.evidence)}};
    else
      row["evidence"] = nullptr;
    if (!e.derivation.empty()) {
      auto d = ordered_json::array();
      for (const auto& s : e.derivation)
        d.push_back({{"edge", std::string(to_string(s.src)) + "->" + to_string(s.dst)},
                     {"backward", s.backward},
                     {"almost_valid", s.almost_valid}});
      row["derivation"] = d;
    }
    st[to_string(p)] = row;
  }
  j["statuses"] = st;
  return j;
}

inline std::string table_text(const StatusTable& t) {
  std::ostringstream os;
  os << "model " << t.model << " (" << regime_name(t.regime) << ", budget " << t.budget << ")\n";
  for (auto p : kAllPrinciples) {
    const auto& e = t.entries.at(p);
    os << "  " << std::left << std::setw(4) << to_string(p) << std::setw(8) << to_string(e.verdict);
    if (e.evidence)
      os << evidence_kind(*e.evidence) << ": " << describe(*e.evidence);
    else if (!e.derivation.empty())
      os << "derived: " << derivation_text(e.derivation);
    os << "\n";
  }
  return os.str();
}

inline ordered_json axioms_json(const std::string& model, const AxiomReport& r) {
  ordered_json j;
  j["model"] = model;
  j["regime"] = to_string(r.regime);
  j["budget"] = r.budget;
  j["passed"] = r.passed();
  auto cs = ordered_json::array();
  for (const auto& c : r.clauses) {
    ordered_json row{{"clause", to_string(c.clause)}, {"passed", c.passed}};
    if (!c.passed) {
      row["witness"] = elements_json(c.witness);
      row["detail"] = c.detail;
    }
    cs.push_back(row);
  }
  j["clauses"] = cs;
  return j;
}

inline std::string axioms_text(const std::string& model, const AxiomReport& r) {
  std::ostringstream os;
  os << "model " << model << " (" << regime_name(r.regime) << " axioms, budget " << r.budget << ")\n";
  for (const auto& c : r.clauses) {
    os << "  " << std::left << std::setw(20) << to_string(c.clause) << (c.passed ? "pass" : "FAIL");
    if (!c.passed) {
      os << "  witness";
      for (const auto& w : c.witness) os << " " << w;
      os << ": " << c.detail;
    }
    os << "\n";
  }
  os << (r.passed() ? "all axioms hold\n" : "axioms violated\n");
  return os.str();
}

inline ordered_json graph_json(const ImplicationGraph& g, const std::vector<StatusTable>& tables) {
  ordered_json j;
  j["regime"] = to_string(g.regime());
  auto es = ordered_json::array();
  for (const auto& e : g.edges()) {
    ordered_json row{{"src", to_string(e.src)},
                     {"dst", to_string(e.dst)},
                     {"status", to_string(e.status)},
                     {"cite", e.cite}};
    if (e.status != EdgeStatus::valid) row["refuted_by"] = refuting_models(e, tables);
    es.push_back(row);
  }
  j["edges"] = es;
  return j;
}

inline std::string graph_text(const ImplicationGraph& g, const std::vector<StatusTable>& tables) {
  std::ostringstream os;
  os << regime_name(g.regime()) << " implications\n";
  for (const auto& e : g.edges()) {
    os << "  " << std::left << std::setw(10) << edge_label(e) << std::setw(13) << to_string(e.status) << e.cite;
    if (e.status != EdgeStatus::valid) {
      const auto refs = refuting_models(e, tables);
      os << " [refuted by: ";
      for (std::size_t i = 0; i < refs.size(); ++i) os << (i ? ", " : "") << refs[i];
      os << (refs.empty() ? "none" : "") << "]";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace peano::report
