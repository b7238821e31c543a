#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "peano/element.hpp"
#include "peano/ordinal.hpp"

namespace peano {

// ZS is the auxiliary property "every nonzero element is a successor".
enum class Principle { RI, SI, CI, IPS, WO, WFO, WFS, FDO, FDS, ZS };

inline constexpr Principle kAllPrinciples[] = {Principle::RI,  Principle::SI,  Principle::CI,
                                               Principle::IPS, Principle::WO,  Principle::WFO,
                                               Principle::WFS, Principle::FDO, Principle::FDS,
                                               Principle::ZS};

inline const char* to_string(Principle p) {
  switch (p) {
    case Principle::RI: return "RI";
    case Principle::SI: return "SI";
    case Principle::CI: return "CI";
    case Principle::IPS: return "IPS";
    case Principle::WO: return "WO";
    case Principle::WFO: return "WFO";
    case Principle::WFS: return "WFS";
    case Principle::FDO: return "FDO";
    case Principle::FDS: return "FDS";
    case Principle::ZS: return "ZS";
  }
  return "?";
}

inline std::optional<Principle> parse_principle(const std::string& s) {
  for (auto p : kAllPrinciples)
    if (s == to_string(p)) return p;
  return std::nullopt;
}

enum class RelationKind { order, successor };

inline const char* to_string(RelationKind k) { return k == RelationKind::order ? "order" : "successor"; }

// A proper subset containing zero, refuting RI or SI.
struct SubsetWitness {
  Principle target = Principle::RI;
  std::string name;
  std::function<bool(const Element&)> member;
  Element excluded;
};

// An infinite strictly descending sequence (order) or infinite predecessor
// chain (successor).
struct DescentWitness {
  RelationKind kind = RelationKind::order;
  std::string name;
  std::function<Element(std::uint64_t)> seq;
};

struct IncomparablePair {
  Element x;
  Element y;
};

// A map into ordinals that strictly increases along the relation.
struct RankCertificate {
  RelationKind kind = RelationKind::order;
  std::string name;
  std::function<Ordinal(const Element&)> rank;
};

// Every predecessor chain ends at zero.
struct ReachabilityCertificate {};

// Trichotomy on the enumerated fragment plus an order rank.
struct LinearityPlusRank {
  std::string name;
  std::function<Ordinal(const Element&)> rank;
};

// Outcome of the zero/successor closure scan; produced by evaluate, and
// re-checked if it appears in a bundle.
struct ClosureCheck {
  bool holds = true;
  std::optional<Element> witness;
};

using Evidence = std::variant<SubsetWitness, DescentWitness, IncomparablePair, RankCertificate,
                              ReachabilityCertificate, LinearityPlusRank, ClosureCheck>;

using EvidenceBundle = std::vector<Evidence>;

inline std::string evidence_kind(const Evidence& e) {
  struct V {
    std::string operator()(const SubsetWitness&) const { return "subset-witness"; }
    std::string operator()(const DescentWitness&) const { return "descent-witness"; }
    std::string operator()(const IncomparablePair&) const { return "incomparable-pair"; }
    std::string operator()(const RankCertificate&) const { return "rank-certificate"; }
    std::string operator()(const ReachabilityCertificate&) const { return "reachability-certificate"; }
    std::string operator()(const LinearityPlusRank&) const { return "linearity-plus-rank"; }
    std::string operator()(const ClosureCheck&) const { return "closure-check"; }
  };
  return std::visit(V{}, e);
}

// One-line human description, stable across runs.
inline std::string describe(const Evidence& e) {
  struct V {
    std::string operator()(const SubsetWitness& w) const {
      return std::string("subset {") + w.name + "} excluding " + w.excluded.to_string() + " refutes " +
             to_string(w.target);
    }
    std::string operator()(const DescentWitness& w) const {
      return std::string(to_string(w.kind)) + " descent " + w.name;
    }
    std::string operator()(const IncomparablePair& w) const {
      return "incomparable " + w.x.to_string() + ", " + w.y.to_string();
    }
    std::string operator()(const RankCertificate& c) const {
      return std::string(to_string(c.kind)) + " rank " + c.name;
    }
    std::string operator()(const ReachabilityCertificate&) const { return "predecessor chains reach zero"; }
    std::string operator()(const LinearityPlusRank& c) const { return "linear order with rank " + c.name; }
    std::string operator()(const ClosureCheck& c) const {
      if (c.holds) return "every enumerated element is zero or a successor";
      return c.witness->to_string() + " is neither zero nor a successor";
    }
  };
  return std::visit(V{}, e);
}

}  // namespace peano
