#pragma once

// Validation of parsed models and their compilation to the Model contract.

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "peano/dsl/ast.hpp"
#include "peano/dsl/parser.hpp"
#include "peano/dsl/printer.hpp"
#include "peano/evidence.hpp"
#include "peano/model.hpp"

namespace peano::dsl {

class ValidationErrors : public ValidationError {
 public:
  explicit ValidationErrors(std::vector<std::string> errors)
      : ValidationError(join(errors)), errors_(std::move(errors)) {}
  const std::vector<std::string>& errors() const noexcept { return errors_; }

 private:
  static std::string join(const std::vector<std::string>& es) {
    std::string out;
    for (const auto& e : es) out += (out.empty() ? "" : "\n") + e;
    return out;
  }
  std::vector<std::string> errors_;
};

// A model that passed validation. `sampled` lists the checks that were only
// carried out on sample points.
struct CheckedModelDef {
  ModelAst ast;
  std::vector<std::string> sampled;
  std::string rendering;
};

// Points checked per sort when a guard system is not scanned exhaustively.
inline constexpr std::size_t kSamplePoints = 256;
// Widest one-parameter window scanned point by point.
inline constexpr long kScanWindow = 100000;

namespace detail {

inline std::string rule_ref(const char* what, std::size_t i, const Loc& loc) {
  return std::string(what) + " rule #" + std::to_string(i + 1) + " at line " + std::to_string(loc.line);
}

inline const SortDecl* find_sort(const ModelAst& ast, const std::string& name) {
  for (const auto& s : ast.sorts)
    if (s.name == name) return &s;
  return nullptr;
}

inline bool clause_matches(const Clause& c, const Element& e, Env& env) {
  if (c.pattern.sort != e.sort() || c.pattern.vars.size() != e.arity()) return false;
  env.clear();
  for (std::size_t i = 0; i < e.arity(); ++i) env[c.pattern.vars[i]] = e[i];
  return !c.guard || c.guard->eval(env);
}

inline bool clause_matches(const Clause& c, const Element& e) {
  Env env;
  return clause_matches(c, e, env);
}

inline Env param_env(const SortDecl& s, const std::vector<Int>& ps) {
  Env env;
  for (std::size_t i = 0; i < s.params.size(); ++i) env[s.params[i].name] = ps[i];
  return env;
}

inline bool sort_admits(const SortDecl& s, const std::vector<Int>& ps) {
  if (ps.size() != s.params.size()) return false;
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (s.params[i].domain == ParamDomain::nat && ps[i] < 0) return false;
  return !s.where || s.where->eval(param_env(s, ps));
}

// Renames a clause's pattern variables to the sort's parameter names.
inline Guard guard_over_params(const Clause& c, const SortDecl& s) {
  if (!c.guard) return Guard::literal(true);
  std::map<std::string, Affine> ren;
  for (std::size_t i = 0; i < c.pattern.vars.size(); ++i) ren[c.pattern.vars[i]] = Affine::of_var(s.params[i].name);
  return c.guard->substitute(ren);
}

// Inverse of a succ rule whose every pattern variable occurs alone, with
// coefficient +1 or -1, in exactly one target argument.
struct Inverse {
  struct Slot {
    std::size_t arg;
    Int sign;
    Int offset;
  };
  std::vector<Slot> slots;  // one per pattern variable
};

inline std::optional<Inverse> invert(const MapRule& r) {
  Inverse inv;
  for (const auto& v : r.from.pattern.vars) {
    std::optional<Inverse::Slot> slot;
    for (std::size_t i = 0; i < r.to.args.size(); ++i) {
      const auto& a = r.to.args[i];
      auto it = a.coeffs.find(v);
      if (it == a.coeffs.end()) continue;
      if (slot || a.coeffs.size() != 1 || (it->second != 1 && it->second != -1)) return std::nullopt;
      slot = Inverse::Slot{i, it->second, a.constant};
    }
    if (!slot) return std::nullopt;
    inv.slots.push_back(*slot);
  }
  return inv;
}

}  // namespace detail

// Interprets the rules of a checked model.
class CompiledModel final : public Model {
 public:
  explicit CompiledModel(const ModelAst& ast) : ast_(ast) {
    for (const auto& s : ast_.sorts) {
      SortSpec spec{s.name, {}, std::nullopt};
      for (const auto& p : s.params) spec.domains.push_back(p.domain);
      if (s.where) {
        if (auto sols = finite_solutions(*s.where, s.params)) {
          Int shell = -1;
          for (const auto& env : *sols)
            for (const auto& [v, x] : env) shell = std::max(shell, x < 0 ? Int(-x) : x);
          spec.max_shell = shell;
        }
      }
      specs_.push_back(std::move(spec));
    }
    if (ast_.preds.empty())
      for (const auto& r : ast_.succs) inverses_.push_back(detail::invert(r));
  }

  std::string name() const override { return ast_.name; }
  const std::vector<SortSpec>& sorts() const override { return specs_; }
  const ModelAst& ast() const { return ast_; }

 protected:
  Element do_zero() const override { return ast_.zero.eval({}); }

  Element do_succ(const Element& x) const override {
    Env env;
    for (const auto& r : ast_.succs)
      if (detail::clause_matches(r.from, x, env)) return r.to.eval(env);
    throw std::logic_error("no succ rule applies to " + x.to_string());
  }

  std::optional<Element> do_pred(const Element& y) const override {
    Env env;
    if (!ast_.preds.empty()) {
      for (const auto& r : ast_.preds) {
        if (!detail::clause_matches(r.from, y, env)) continue;
        auto x = r.to.eval(env);
        if (in_carrier(x) && do_succ(x) == y) return x;
      }
      return std::nullopt;
    }
    for (std::size_t i = 0; i < ast_.succs.size(); ++i) {
      const auto& r = ast_.succs[i];
      if (!inverses_[i] || r.to.sort != y.sort() || r.to.args.size() != y.arity()) continue;
      std::vector<Int> ps;
      for (const auto& s : inverses_[i]->slots) ps.push_back(s.sign * (y[s.arg] - s.offset));
      Element x(r.from.pattern.sort, std::move(ps));
      if (in_carrier(x) && detail::clause_matches(r.from, x) && r.to.eval(bind(r.from, x)) == y) return x;
    }
    return std::nullopt;
  }

  bool do_less(const Element& x, const Element& y) const override {
    for (const auto& r : ast_.lesses) {
      if (r.left.sort != x.sort() || r.right.sort != y.sort()) continue;
      Env env = bind(Clause{r.left, {}}, x);
      for (std::size_t i = 0; i < y.arity(); ++i) env[r.right.vars[i]] = y[i];
      return r.guard.eval(env);
    }
    return false;
  }

  bool do_in_carrier(const Element& x) const override {
    const auto* s = detail::find_sort(ast_, x.sort());
    return !s->where || s->where->eval(detail::param_env(*s, x.params()));
  }

  std::optional<std::vector<Element>> do_finite_lower_section(const Element& p) const override {
    std::vector<Element> out;
    for (const auto& r : ast_.lesses) {
      if (r.right.sort != p.sort()) continue;
      const auto* s = detail::find_sort(ast_, r.left.sort);
      std::map<std::string, Affine> fix;
      for (std::size_t i = 0; i < p.arity(); ++i) fix[r.right.vars[i]] = Affine::of_const(p[i]);
      std::vector<Guard> parts{r.guard.substitute(fix)};
      std::vector<VarDecl> vars;
      std::map<std::string, Affine> ren;
      for (std::size_t i = 0; i < s->params.size(); ++i) {
        vars.push_back({r.left.vars[i], s->params[i].domain});
        ren[s->params[i].name] = Affine::of_var(r.left.vars[i]);
      }
      if (s->where) parts.push_back(s->where->substitute(ren));
      auto sols = finite_solutions(Guard::all(std::move(parts)), vars);
      if (!sols) return std::nullopt;
      for (const auto& env : *sols) {
        std::vector<Int> ps;
        for (const auto& v : vars) ps.push_back(env.at(v.name));
        out.emplace_back(s->name, std::move(ps));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static Env bind(const Clause& c, const Element& e) {
    Env env;
    for (std::size_t i = 0; i < e.arity(); ++i) env[c.pattern.vars[i]] = e[i];
    return env;
  }

  ModelAst ast_;
  std::vector<SortSpec> specs_;
  std::vector<std::optional<detail::Inverse>> inverses_;
};

namespace detail {

class Validator {
 public:
  explicit Validator(const ModelAst& ast) : ast_(ast) {}

  CheckedModelDef run() {
    structure();
    if (errors_.empty()) coverage();
    if (errors_.empty()) inversion();
    if (errors_.empty()) semantics();
    if (!errors_.empty()) throw ValidationErrors(errors_);
    return {ast_, sampled_, print(ast_)};
  }

 private:
  void error(std::string msg) { errors_.push_back(std::move(msg)); }

  // Variables of `g` outside `scope`, reported against `where`.
  void scoped(const std::set<std::string>& used, const std::set<std::string>& scope, const std::string& where) {
    for (const auto& v : used)
      if (!scope.count(v)) error(where + ": unknown variable '" + v + "'");
  }

  bool pattern_ok(const Pattern& p, const std::string& where) {
    const auto* s = find_sort(ast_, p.sort);
    if (!s) {
      error(where + ": unknown sort '" + p.sort + "'");
      return false;
    }
    if (s->params.size() != p.vars.size()) {
      error(where + ": sort " + p.sort + " takes " + std::to_string(s->params.size()) + " parameters, got " +
            std::to_string(p.vars.size()));
      return false;
    }
    return true;
  }

  bool term_ok(const Term& t, const std::set<std::string>& scope, const std::string& where) {
    const auto* s = find_sort(ast_, t.sort);
    if (!s) {
      error(where + ": unknown sort '" + t.sort + "'");
      return false;
    }
    if (s->params.size() != t.args.size()) {
      error(where + ": sort " + t.sort + " takes " + std::to_string(s->params.size()) + " parameters, got " +
            std::to_string(t.args.size()));
      return false;
    }
    std::set<std::string> used;
    t.collect_vars(used);
    scoped(used, scope, where);
    return true;
  }

  static std::set<std::string> vars_of(const Pattern& p) { return {p.vars.begin(), p.vars.end()}; }

  void clause_ok(const Clause& c, const std::string& where) {
    if (!pattern_ok(c.pattern, where) || !c.guard) return;
    std::set<std::string> used;
    c.guard->collect_vars(used);
    scoped(used, vars_of(c.pattern), where);
  }

  void constant_term(const Term& t, const std::string& where) {
    if (term_ok(t, {}, where) && !sort_admits(*find_sort(ast_, t.sort), t.eval({}).params()))
      error(where + ": " + t.eval({}).to_string() + " is not in the carrier");
  }

  void structure() {
    std::set<std::string> names;
    for (const auto& s : ast_.sorts) {
      const auto where = "sort " + s.name + " at line " + std::to_string(s.loc.line);
      if (!names.insert(s.name).second) error(where + ": duplicate sort");
      std::set<std::string> params;
      for (const auto& p : s.params)
        if (!params.insert(p.name).second) error(where + ": duplicate parameter '" + p.name + "'");
      if (s.where) {
        std::set<std::string> used;
        s.where->collect_vars(used);
        scoped(used, params, where);
      }
    }
    if (!errors_.empty()) return;
    constant_term(ast_.zero, "zero at line " + std::to_string(ast_.zero_loc.line));
    for (std::size_t i = 0; i < ast_.succs.size(); ++i) map_rule(ast_.succs[i], rule_ref("succ", i, ast_.succs[i].loc));
    for (std::size_t i = 0; i < ast_.preds.size(); ++i) map_rule(ast_.preds[i], rule_ref("pred", i, ast_.preds[i].loc));
    std::set<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < ast_.lesses.size(); ++i) {
      const auto& r = ast_.lesses[i];
      const auto where = rule_ref("less", i, r.loc);
      if (!pattern_ok(r.left, where) || !pattern_ok(r.right, where)) continue;
      if (!pairs.insert({r.left.sort, r.right.sort}).second)
        error(where + ": second rule for " + r.left.sort + " < " + r.right.sort);
      auto scope = vars_of(r.left);
      for (const auto& v : r.right.vars)
        if (!scope.insert(v).second) error(where + ": variable '" + v + "' used on both sides");
      std::set<std::string> used;
      r.guard.collect_vars(used);
      scoped(used, scope, where);
    }
    std::size_t ranks = 0, witnesses = 0;
    bool order_rank = false;
    for (const auto& e : ast_.evidence) {
      if (const auto* r = std::get_if<RankDecl>(&e)) {
        const auto where = rule_ref("rank", ranks++, r->loc);
        clause_ok(r->clause, where);
        std::set<std::string> used;
        r->value.collect_vars(used);
        scoped(used, vars_of(r->clause.pattern), where);
        order_rank = order_rank || r->applies_to(RelationKind::order);
        continue;
      }
      const auto where = "witness #" + std::to_string(++witnesses) + " at line " + std::to_string(loc_of(e).line);
      if (const auto* w = std::get_if<SubsetDecl>(&e)) {
        for (const auto& m : w->members) clause_ok(m, where);
        constant_term(w->excluded, where);
      } else if (const auto* w = std::get_if<DescentDecl>(&e)) {
        term_ok(w->term, {w->index}, where);
      } else if (const auto* w = std::get_if<IncomparableDecl>(&e)) {
        constant_term(w->x, where);
        constant_term(w->y, where);
      } else if (std::holds_alternative<LinearDecl>(e) && !order_rank) {
        error(where + ": linear needs an order rank declared before it");
      }
    }
  }

  static Loc loc_of(const EvidenceDecl& e) {
    return std::visit([](const auto& d) { return d.loc; }, e);
  }

  void map_rule(const MapRule& r, const std::string& where) {
    clause_ok(r.from, where);
    if (find_sort(ast_, r.from.pattern.sort)) term_ok(r.to, vars_of(r.from.pattern), where);
  }

  // Succ guards of each sort must be pairwise disjoint and jointly total on
  // the sort's carrier.
  void coverage() {
    for (const auto& s : ast_.sorts) {
      std::vector<std::size_t> rules;
      for (std::size_t i = 0; i < ast_.succs.size(); ++i)
        if (ast_.succs[i].from.pattern.sort == s.name) rules.push_back(i);
      bool exhaustive = false;
      const auto points = s.params.size() == 1 ? scan_points(s, rules, exhaustive) : sample_points(s);
      if (!exhaustive)
        sampled_.push_back("sort " + s.name + ": succ guard disjointness/totality sampled at " +
                           std::to_string(points.size()) + " points");
      std::set<std::pair<std::size_t, std::size_t>> reported;
      bool gap = false;
      for (const auto& ps : points) {
        const Element e(s.name, ps);
        std::vector<std::size_t> hits;
        for (auto i : rules)
          if (clause_matches(ast_.succs[i].from, e)) hits.push_back(i);
        if (hits.empty() && !gap) {
          gap = true;
          error("sort " + s.name + ": no succ rule applies to " + e.to_string());
        }
        for (std::size_t a = 0; a < hits.size(); ++a)
          for (std::size_t b = a + 1; b < hits.size(); ++b)
            if (reported.insert({hits[a], hits[b]}).second)
              error(rule_ref("succ", hits[a], ast_.succs[hits[a]].loc) + " and " +
                    rule_ref("succ", hits[b], ast_.succs[hits[b]].loc) + " overlap at " + e.to_string());
      }
    }
  }

  // Every integer in a window around the guards' critical points. Outside
  // the window each guard only depends on parity, which the two extra
  // points on either side cover.
  std::vector<std::vector<Int>> scan_points(const SortDecl& s, const std::vector<std::size_t>& rules,
                                            bool& exhaustive) {
    const auto& v = s.params[0].name;
    std::vector<Int> crit;
    for (auto i : rules) {
      auto c = critical_points(guard_over_params(ast_.succs[i].from, s), v);
      crit.insert(crit.end(), c.begin(), c.end());
    }
    if (s.where) {
      auto c = critical_points(*s.where, v);
      crit.insert(crit.end(), c.begin(), c.end());
    }
    Int lo = crit.empty() ? Int(0) : *std::min_element(crit.begin(), crit.end());
    Int hi = crit.empty() ? Int(0) : *std::max_element(crit.begin(), crit.end());
    lo -= 2;
    hi += 2;
    if (s.params[0].domain == ParamDomain::nat) lo = std::max(lo, Int(0));
    std::vector<Int> xs;
    if (hi - lo <= kScanWindow) {
      exhaustive = true;
      for (Int x = lo; x <= hi; ++x) xs.push_back(x);
    } else {
      for (const auto& c : crit)
        for (int d = -2; d <= 2; ++d) xs.push_back(c + d);
      std::sort(xs.begin(), xs.end());
      xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    }
    std::vector<std::vector<Int>> out;
    for (const auto& x : xs)
      if (sort_admits(s, {x})) out.push_back({x});
    return out;
  }

  // The first carrier points in shell order.
  std::vector<std::vector<Int>> sample_points(const SortDecl& s) {
    std::vector<ParamDomain> doms;
    for (const auto& p : s.params) doms.push_back(p.domain);
    std::vector<std::vector<Int>> out;
    std::size_t scanned = 0;
    for (Int shell = 0; out.size() < kSamplePoints && scanned < (std::size_t{1} << 16); ++shell)
      for (auto& t : peano::detail::shell_tuples(doms, shell)) {
        ++scanned;
        if (out.size() < kSamplePoints && sort_admits(s, t)) out.push_back(std::move(t));
      }
    return out;
  }

  void inversion() {
    if (!ast_.preds.empty()) return;
    for (std::size_t i = 0; i < ast_.succs.size(); ++i)
      if (!invert(ast_.succs[i]))
        error(rule_ref("succ", i, ast_.succs[i].loc) + ": " + ast_.succs[i].to.to_string() +
              " is not invertible (each variable must occur once with coefficient 1 or -1); declare pred rules");
  }

  // Checked on the first enumerated elements: succ stays in the carrier and
  // pred undoes succ.
  void semantics() {
    const CompiledModel m(ast_);
    sampled_.push_back("succ closure and pred inversion sampled at " + std::to_string(kSamplePoints) + " points");
    for (const auto& x : m.enumerate(kSamplePoints)) {
      const auto y = m.succ(x);
      if (!m.in_carrier(y)) {
        error(succ_rule_for(x) + ": maps " + x.to_string() + " to " + y.to_string() + " outside the carrier");
        return;
      }
      const auto back = m.pred(y);
      if (!back || *back != x) {
        error((ast_.preds.empty() ? succ_rule_for(x) : std::string("pred rules")) + ": pred(" + y.to_string() +
              ") should be " + x.to_string());
        return;
      }
    }
  }

  std::string succ_rule_for(const Element& x) const {
    for (std::size_t i = 0; i < ast_.succs.size(); ++i)
      if (clause_matches(ast_.succs[i].from, x)) return rule_ref("succ", i, ast_.succs[i].loc);
    return "succ rules";
  }

  const ModelAst& ast_;
  std::vector<std::string> errors_;
  std::vector<std::string> sampled_;
};

}  // namespace detail

inline CheckedModelDef validate(const ModelAst& ast) { return detail::Validator(ast).run(); }

inline ModelPtr compile(const CheckedModelDef& def) { return std::make_shared<CompiledModel>(def.ast); }

namespace detail {

struct RankGroup {
  std::vector<RankDecl> clauses;
  std::string name() const {
    std::string out;
    for (const auto& c : clauses) out += (out.empty() ? "" : "; ") + c.body();
    return out;
  }
  Ordinal operator()(const Element& e) const {
    Env env;
    for (const auto& c : clauses)
      if (clause_matches(c.clause, e, env)) return c.value.eval(env);
    throw EvalError("no rank clause applies to " + e.to_string());
  }
};

}  // namespace detail

// The declared evidence, in source order. Rank clauses of one relation form
// a single certificate, placed where its first clause appears.
inline EvidenceBundle compile_evidence(const CheckedModelDef& def) {
  detail::RankGroup order, succ;
  for (const auto& e : def.ast.evidence)
    if (const auto* r = std::get_if<RankDecl>(&e)) {
      if (r->applies_to(RelationKind::order)) order.clauses.push_back(*r);
      if (r->applies_to(RelationKind::successor)) succ.clauses.push_back(*r);
    }
  EvidenceBundle out;
  bool placed_order = false, placed_succ = false;
  for (const auto& e : def.ast.evidence) {
    if (const auto* r = std::get_if<RankDecl>(&e)) {
      if (r->applies_to(RelationKind::order) && !placed_order) {
        placed_order = true;
        out.push_back(RankCertificate{RelationKind::order, order.name(), order});
      }
      if (r->applies_to(RelationKind::successor) && !placed_succ) {
        placed_succ = true;
        out.push_back(RankCertificate{RelationKind::successor, succ.name(), succ});
      }
    } else if (const auto* w = std::get_if<SubsetDecl>(&e)) {
      auto members = w->members;
      out.push_back(SubsetWitness{w->target, w->name(),
                                  [members](const Element& x) {
                                    return std::any_of(members.begin(), members.end(),
                                                       [&](const Clause& c) { return detail::clause_matches(c, x); });
                                  },
                                  w->excluded.eval({})});
    } else if (const auto* w = std::get_if<DescentDecl>(&e)) {
      out.push_back(DescentWitness{w->kind, w->name(), [idx = w->index, t = w->term](std::uint64_t j) {
                                     return t.eval({{idx, Int(j)}});
                                   }});
    } else if (const auto* w = std::get_if<IncomparableDecl>(&e)) {
      out.push_back(IncomparablePair{w->x.eval({}), w->y.eval({})});
    } else if (std::holds_alternative<ReachabilityDecl>(e)) {
      out.push_back(ReachabilityCertificate{});
    } else if (std::holds_alternative<LinearDecl>(e)) {
      out.push_back(LinearityPlusRank{order.name(), order});
    }
  }
  return out;
}

// A compiled model with its evidence and the regime whose axioms it passes.
struct LoadedModel {
  CheckedModelDef def;
  ModelPtr model;
  EvidenceBundle evidence;
  Regime regime = Regime::pre_inductive;
};

inline LoadedModel load(std::string_view source, std::size_t budget = 64) {
  LoadedModel out;
  out.def = validate(parse(source));
  out.model = compile(out.def);
  out.evidence = compile_evidence(out.def);
  out.regime = check_axioms(*out.model, Regime::pre_inductive, budget).passed() ? Regime::pre_inductive
                                                                                : Regime::sub_inductive;
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline LoadedModel load_file(const std::string& path, std::size_t budget = 64) { return load(read_file(path), budget); }

}  // namespace peano::dsl
