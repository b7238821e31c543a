#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "peano/dsl/expr.hpp"
#include "peano/evidence.hpp"
#include "peano/model.hpp"

namespace peano::dsl {

// Source position; ignored by AST equality so that printed and re-parsed
// trees compare equal.
struct Loc {
  int line = 0;
  int col = 0;
  friend bool operator==(const Loc&, const Loc&) { return true; }
};

struct SortDecl {
  Loc loc;
  std::string name;
  std::vector<VarDecl> params;
  std::optional<Guard> where;
  friend bool operator==(const SortDecl& a, const SortDecl& b) {
    if (a.name != b.name || a.where != b.where || a.params.size() != b.params.size()) return false;
    for (std::size_t i = 0; i < a.params.size(); ++i)
      if (a.params[i].name != b.params[i].name || a.params[i].domain != b.params[i].domain) return false;
    return true;
  }
};

// Sort applied to distinct variables, e.g. G(n, k).
struct Pattern {
  std::string sort;
  std::vector<std::string> vars;
  std::string to_string() const {
    std::string out = sort + "(";
    for (std::size_t i = 0; i < vars.size(); ++i) out += (i ? ", " : "") + vars[i];
    return out + ")";
  }
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

// Sort applied to expressions, e.g. G(j + 1, 0).
struct Term {
  std::string sort;
  std::vector<Affine> args;
  std::string to_string() const {
    std::string out = sort + "(";
    for (std::size_t i = 0; i < args.size(); ++i) out += (i ? ", " : "") + args[i].to_string();
    return out + ")";
  }
  void collect_vars(std::set<std::string>& out) const {
    for (const auto& a : args) a.collect_vars(out);
  }
  Element eval(const Env& env) const {
    std::vector<Int> ps;
    ps.reserve(args.size());
    for (const auto& a : args) ps.push_back(a.eval(env));
    return Element(sort, std::move(ps));
  }
  friend bool operator==(const Term&, const Term&) = default;
};

// pattern [if guard]
struct Clause {
  Pattern pattern;
  std::optional<Guard> guard;
  std::string to_string() const { return pattern.to_string() + (guard ? " if " + guard->to_string() : ""); }
  friend bool operator==(const Clause&, const Clause&) = default;
};

// succ / pred rule: clause -> term
struct MapRule {
  Loc loc;
  Clause from;
  Term to;
  friend bool operator==(const MapRule&, const MapRule&) = default;
};

struct LessRule {
  Loc loc;
  Pattern left, right;
  Guard guard;
  friend bool operator==(const LessRule&, const LessRule&) = default;
};

// One CNF term of a rank expression; coefficient 1 when absent.
struct OrdTerm {
  std::uint64_t exponent = 0;
  Affine coefficient = Affine::of_const(1);
  friend bool operator==(const OrdTerm&, const OrdTerm&) = default;
};

struct OrdExpr {
  std::vector<OrdTerm> terms;  // empty for the literal 0

  std::string to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i) out += " + ";
      const auto& t = terms[i];
      const auto coef = t.coefficient.to_string();
      const bool atomic = t.coefficient.is_constant() ? t.coefficient.constant >= 0
                                                      : t.coefficient.constant == 0 &&
                                                            t.coefficient.coeffs.size() == 1 &&
                                                            t.coefficient.coeffs.begin()->second == 1;
      const auto wrapped = atomic ? coef : "(" + coef + ")";
      if (t.exponent == 0) {
        out += wrapped;
      } else {
        out += "w^" + std::to_string(t.exponent);
        if (!(t.coefficient == Affine::of_const(1))) out += "*" + wrapped;
      }
    }
    return out;
  }

  Ordinal eval(const Env& env) const {
    std::vector<CnfTerm> cnf;
    for (const auto& t : terms) {
      const Int c = t.coefficient.eval(env);
      if (c < 0) throw EvalError("negative ordinal coefficient " + c.str());
      if (c == 0) continue;
      if (c > Int(std::numeric_limits<std::uint64_t>::max())) throw EvalError("ordinal coefficient too large");
      cnf.push_back({t.exponent, c.convert_to<std::uint64_t>()});
    }
    return Ordinal::make(std::move(cnf));
  }

  void collect_vars(std::set<std::string>& out) const {
    for (const auto& t : terms) t.coefficient.collect_vars(out);
  }

  friend bool operator==(const OrdExpr&, const OrdExpr&) = default;
};

enum class RankKind { order, succ };

// rank [order|succ] clause -> ordexpr; no kind means both relations.
struct RankDecl {
  Loc loc;
  std::optional<RankKind> kind;
  Clause clause;
  OrdExpr value;
  bool applies_to(RelationKind k) const {
    return !kind || (*kind == RankKind::order) == (k == RelationKind::order);
  }
  std::string body() const { return clause.to_string() + " -> " + value.to_string(); }
  friend bool operator==(const RankDecl&, const RankDecl&) = default;
};

struct SubsetDecl {
  Loc loc;
  Principle target = Principle::RI;
  std::vector<Clause> members;
  Term excluded;
  std::string name() const {
    std::string out;
    for (std::size_t i = 0; i < members.size(); ++i) out += (i ? " | " : "") + members[i].to_string();
    return out;
  }
  friend bool operator==(const SubsetDecl&, const SubsetDecl&) = default;
};

struct DescentDecl {
  Loc loc;
  RelationKind kind = RelationKind::order;
  std::string index;
  Term term;
  std::string name() const { return index + " -> " + term.to_string(); }
  friend bool operator==(const DescentDecl&, const DescentDecl&) = default;
};

struct IncomparableDecl {
  Loc loc;
  Term x, y;
  friend bool operator==(const IncomparableDecl&, const IncomparableDecl&) = default;
};

struct ReachabilityDecl {
  Loc loc;
  friend bool operator==(const ReachabilityDecl&, const ReachabilityDecl&) = default;
};

struct LinearDecl {
  Loc loc;
  friend bool operator==(const LinearDecl&, const LinearDecl&) = default;
};

// Rank clauses and witnesses, kept in source order: the compiled evidence
// bundle follows it.
using EvidenceDecl =
    std::variant<RankDecl, SubsetDecl, DescentDecl, IncomparableDecl, ReachabilityDecl, LinearDecl>;

struct ModelAst {
  Loc loc;
  std::string name;
  std::vector<SortDecl> sorts;
  Term zero;
  Loc zero_loc;
  std::vector<MapRule> succs;
  std::vector<MapRule> preds;
  std::vector<LessRule> lesses;
  std::vector<EvidenceDecl> evidence;
  friend bool operator==(const ModelAst&, const ModelAst&) = default;
};

}  // namespace peano::dsl
