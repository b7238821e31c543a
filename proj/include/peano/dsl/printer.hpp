#pragma once

// Canonical rendering of a model AST; parse(print(ast)) == ast.

#include <sstream>
#include <string>

#include "peano/dsl/ast.hpp"

namespace peano::dsl {

inline std::string print(const ModelAst& ast) {
  std::ostringstream os;
  os << "model " << ast.name << " {\n";
  for (const auto& s : ast.sorts) {
    os << "  sort " << s.name << "(";
    for (std::size_t i = 0; i < s.params.size(); ++i)
      os << (i ? ", " : "") << s.params[i].name << ": " << (s.params[i].domain == ParamDomain::nat ? "nat" : "int");
    os << ")";
    if (s.where) os << " where " << s.where->to_string();
    os << "\n";
  }
  os << "  zero " << ast.zero.to_string() << "\n";
  for (const auto& r : ast.succs) os << "  succ " << r.from.to_string() << " -> " << r.to.to_string() << "\n";
  for (const auto& r : ast.preds) os << "  pred " << r.from.to_string() << " -> " << r.to.to_string() << "\n";
  for (const auto& r : ast.lesses)
    os << "  less " << r.left.to_string() << " < " << r.right.to_string() << " iff " << r.guard.to_string() << "\n";
  struct V {
    std::ostringstream& os;
    void operator()(const RankDecl& r) const {
      os << "  rank ";
      if (r.kind) os << (*r.kind == RankKind::order ? "order " : "succ ");
      os << r.body() << "\n";
    }
    void operator()(const SubsetDecl& s) const {
      os << "  witness subset " << to_string(s.target) << " ";
      for (std::size_t i = 0; i < s.members.size(); ++i) os << (i ? " | " : "") << s.members[i].to_string();
      os << " excluding " << s.excluded.to_string() << "\n";
    }
    void operator()(const DescentDecl& d) const {
      os << "  witness descent " << (d.kind == RelationKind::order ? "order " : "succ ") << d.name() << "\n";
    }
    void operator()(const IncomparableDecl& d) const {
      os << "  witness incomparable " << d.x.to_string() << ", " << d.y.to_string() << "\n";
    }
    void operator()(const ReachabilityDecl&) const { os << "  witness reachability\n"; }
    void operator()(const LinearDecl&) const { os << "  witness linear\n"; }
  };
  for (const auto& e : ast.evidence) std::visit(V{os}, e);
  os << "}\n";
  return os.str();
}

}  // namespace peano::dsl
