#pragma once

// Integer-linear expressions and boolean guards over named parameters, plus a
// bounds analysis that decides when a guard has finitely many solutions.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "peano/element.hpp"
#include "peano/model.hpp"

namespace peano::dsl {

using Env = std::map<std::string, Int>;

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// c0 + sum ci * vi, with zero coefficients never stored.
struct Affine {
  std::map<std::string, Int> coeffs;
  Int constant = 0;

  static Affine of_var(const std::string& v) {
    Affine a;
    a.coeffs[v] = 1;
    return a;
  }
  static Affine of_const(Int c) {
    Affine a;
    a.constant = std::move(c);
    return a;
  }

  bool is_constant() const { return coeffs.empty(); }

  Affine& operator+=(const Affine& o) {
    constant += o.constant;
    for (const auto& [v, c] : o.coeffs) {
      auto& slot = coeffs[v];
      slot += c;
      if (slot == 0) coeffs.erase(v);
    }
    return *this;
  }
  Affine scaled(const Int& k) const {
    if (k == 0) return {};
    Affine a = *this;
    a.constant *= k;
    for (auto& [v, c] : a.coeffs) c *= k;
    return a;
  }
  friend Affine operator+(Affine a, const Affine& b) { return a += b; }
  friend Affine operator-(Affine a, const Affine& b) { return a += b.scaled(-1); }

  Int eval(const Env& env) const {
    Int out = constant;
    for (const auto& [v, c] : coeffs) {
      auto it = env.find(v);
      if (it == env.end()) throw EvalError("unbound variable " + v);
      out += c * it->second;
    }
    return out;
  }

  // Replaces bound variables by the affine expressions they map to.
  Affine substitute(const std::map<std::string, Affine>& s) const {
    Affine out = of_const(constant);
    for (const auto& [v, c] : coeffs) {
      auto it = s.find(v);
      out += it == s.end() ? of_var(v).scaled(c) : it->second.scaled(c);
    }
    return out;
  }

  void collect_vars(std::set<std::string>& out) const {
    for (const auto& [v, c] : coeffs) out.insert(v);
  }

  // Variables by name, then the constant: "2*x - 3", "-j", "j + 1", "0".
  std::string to_string() const {
    std::string out;
    bool first = true;
    auto emit = [&](Int c, const std::string& body) {
      const bool neg = c < 0;
      if (neg) c = -c;
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (body.empty()) {
        out += c.str();
      } else {
        if (c != 1) out += c.str() + "*";
        out += body;
      }
      first = false;
    };
    for (const auto& [v, c] : coeffs) emit(c, v);
    if (constant != 0 || first) emit(constant, "");
    return out;
  }

  friend bool operator==(const Affine&, const Affine&) = default;
};

enum class CmpOp { lt, le, eq, ne, gt, ge };

inline const char* to_string(CmpOp op) {
  switch (op) {
    case CmpOp::lt: return "<";
    case CmpOp::le: return "<=";
    case CmpOp::eq: return "=";
    case CmpOp::ne: return "/=";
    case CmpOp::gt: return ">";
    case CmpOp::ge: return ">=";
  }
  return "?";
}

inline CmpOp negate(CmpOp op) {
  switch (op) {
    case CmpOp::lt: return CmpOp::ge;
    case CmpOp::le: return CmpOp::gt;
    case CmpOp::eq: return CmpOp::ne;
    case CmpOp::ne: return CmpOp::eq;
    case CmpOp::gt: return CmpOp::le;
    case CmpOp::ge: return CmpOp::lt;
  }
  return op;
}

inline bool compare(const Int& a, CmpOp op, const Int& b) {
  switch (op) {
    case CmpOp::lt: return a < b;
    case CmpOp::le: return a <= b;
    case CmpOp::eq: return a == b;
    case CmpOp::ne: return a != b;
    case CmpOp::gt: return a > b;
    case CmpOp::ge: return a >= b;
  }
  return false;
}

struct Guard {
  enum class Kind { literal, compare, even, odd, conj, disj, negation };

  Kind kind = Kind::literal;
  bool value = true;       // literal
  CmpOp op = CmpOp::eq;    // compare
  Affine lhs, rhs;         // compare; lhs alone for even/odd
  std::vector<Guard> kids;  // conj, disj, negation

  static Guard literal(bool v) {
    Guard g;
    g.value = v;
    return g;
  }
  static Guard cmp(Affine l, CmpOp op, Affine r) {
    Guard g;
    g.kind = Kind::compare;
    g.op = op;
    g.lhs = std::move(l);
    g.rhs = std::move(r);
    return g;
  }
  static Guard parity(bool even, Affine e) {
    Guard g;
    g.kind = even ? Kind::even : Kind::odd;
    g.lhs = std::move(e);
    return g;
  }
  static Guard all(std::vector<Guard> gs) { return nary(Kind::conj, std::move(gs)); }
  static Guard any(std::vector<Guard> gs) { return nary(Kind::disj, std::move(gs)); }
  static Guard negation(Guard g) {
    Guard out;
    out.kind = Kind::negation;
    out.kids.push_back(std::move(g));
    return out;
  }

  bool is_atomic() const { return kind != Kind::conj && kind != Kind::disj && kind != Kind::negation; }

  bool eval(const Env& env) const {
    switch (kind) {
      case Kind::literal: return value;
      case Kind::compare: return compare(lhs.eval(env), op, rhs.eval(env));
      case Kind::even: return boost::multiprecision::bit_test(lhs.eval(env), 0) == false;
      case Kind::odd: return boost::multiprecision::bit_test(lhs.eval(env), 0);
      case Kind::conj:
        return std::all_of(kids.begin(), kids.end(), [&](const Guard& k) { return k.eval(env); });
      case Kind::disj:
        return std::any_of(kids.begin(), kids.end(), [&](const Guard& k) { return k.eval(env); });
      case Kind::negation: return !kids[0].eval(env);
    }
    return false;
  }

  Guard substitute(const std::map<std::string, Affine>& s) const {
    Guard g = *this;
    g.lhs = lhs.substitute(s);
    g.rhs = rhs.substitute(s);
    for (auto& k : g.kids) k = k.substitute(s);
    return g;
  }

  void collect_vars(std::set<std::string>& out) const {
    lhs.collect_vars(out);
    rhs.collect_vars(out);
    for (const auto& k : kids) k.collect_vars(out);
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::literal: return value ? "true" : "false";
      case Kind::compare: return lhs.to_string() + " " + peano::dsl::to_string(op) + " " + rhs.to_string();
      case Kind::even: return "even(" + lhs.to_string() + ")";
      case Kind::odd: return "odd(" + lhs.to_string() + ")";
      case Kind::negation: {
        const auto& k = kids[0];
        return "not " + (k.is_atomic() ? k.to_string() : "(" + k.to_string() + ")");
      }
      case Kind::conj:
      case Kind::disj: {
        std::string out;
        for (std::size_t i = 0; i < kids.size(); ++i) {
          if (i) out += kind == Kind::conj ? " and " : " or ";
          const auto& k = kids[i];
          out += k.kind == Kind::conj || k.kind == Kind::disj ? "(" + k.to_string() + ")" : k.to_string();
        }
        return out;
      }
    }
    return "?";
  }

  friend bool operator==(const Guard&, const Guard&) = default;

 private:
  static Guard nary(Kind k, std::vector<Guard> gs) {
    if (gs.size() == 1) return std::move(gs[0]);
    Guard g;
    g.kind = k;
    g.kids = std::move(gs);
    return g;
  }
};

// ---- bounds analysis ----

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

struct Interval {
  std::optional<Int> lo, hi;
  bool empty() const { return lo && hi && *lo > *hi; }
  bool bounded() const { return lo && hi; }
};

using Bounds = std::map<std::string, Interval>;

namespace detail {

// Negation pushed to the atoms.
inline Guard nnf(const Guard& g, bool negated = false) {
  using K = Guard::Kind;
  switch (g.kind) {
    case K::literal: return Guard::literal(g.value != negated);
    case K::compare: return Guard::cmp(g.lhs, negated ? negate(g.op) : g.op, g.rhs);
    case K::even: return Guard::parity(!negated, g.lhs);
    case K::odd: return Guard::parity(negated, g.lhs);
    case K::negation: return nnf(g.kids[0], !negated);
    case K::conj:
    case K::disj: {
      std::vector<Guard> kids;
      for (const auto& k : g.kids) kids.push_back(nnf(k, negated));
      const bool as_conj = (g.kind == K::conj) != negated;
      return as_conj ? Guard::all(std::move(kids)) : Guard::any(std::move(kids));
    }
  }
  return g;
}

inline constexpr std::size_t kDnfCap = 256;

// Disjunction of conjunctions of atoms; nullopt once the cap is exceeded.
inline std::optional<std::vector<std::vector<Guard>>> dnf(const Guard& g) {
  using K = Guard::Kind;
  if (g.kind == K::disj) {
    std::vector<std::vector<Guard>> out;
    for (const auto& k : g.kids) {
      auto part = dnf(k);
      if (!part) return std::nullopt;
      out.insert(out.end(), part->begin(), part->end());
      if (out.size() > kDnfCap) return std::nullopt;
    }
    return out;
  }
  if (g.kind == K::conj) {
    std::vector<std::vector<Guard>> out{{}};
    for (const auto& k : g.kids) {
      auto part = dnf(k);
      if (!part) return std::nullopt;
      std::vector<std::vector<Guard>> next;
      for (const auto& a : out)
        for (const auto& b : *part) {
          auto c = a;
          c.insert(c.end(), b.begin(), b.end());
          next.push_back(std::move(c));
          if (next.size() > kDnfCap) return std::nullopt;
        }
      out = std::move(next);
    }
    return out;
  }
  if (g.kind == K::literal) {
    if (!g.value) return std::vector<std::vector<Guard>>{};
    return std::vector<std::vector<Guard>>{{}};
  }
  return std::vector<std::vector<Guard>>{{g}};
}

// Tightens bounds from sum(coeffs) <= k. Returns true when anything changed.
inline bool tighten_le(const std::map<std::string, Int>& coeffs, const Int& k, Bounds& b) {
  bool changed = false;
  for (const auto& [v, a] : coeffs) {
    Int rest_min = 0;
    bool known = true;
    for (const auto& [u, c] : coeffs) {
      if (u == v) continue;
      const auto& iv = b[u];
      if (c > 0 && iv.lo) {
        rest_min += c * *iv.lo;
      } else if (c < 0 && iv.hi) {
        rest_min += c * *iv.hi;
      } else {
        known = false;
        break;
      }
    }
    if (!known) continue;
    auto& iv = b[v];
    const Int room = k - rest_min;
    if (a > 0) {
      const Int hi = floor_div(room, a);
      if (!iv.hi || hi < *iv.hi) {
        iv.hi = hi;
        changed = true;
      }
    } else {
      const Int lo = ceil_div(room, a);
      if (!iv.lo || lo > *iv.lo) {
        iv.lo = lo;
        changed = true;
      }
    }
  }
  return changed;
}

inline constexpr int kPropagationRounds = 64;

// Interval propagation over one conjunction; false when it is unsatisfiable.
inline bool propagate_bounds(const std::vector<Guard>& atoms, Bounds& b) {
  for (int round = 0; round < kPropagationRounds; ++round) {
    bool changed = false;
    for (const auto& a : atoms) {
      if (a.kind == Guard::Kind::literal && !a.value) return false;
      if (a.kind != Guard::Kind::compare) continue;
      const Affine d = a.lhs - a.rhs;  // d op 0
      if (d.is_constant()) {
        if (!compare(d.constant, a.op, 0)) return false;
        continue;
      }
      const Affine neg = d.scaled(-1);
      switch (a.op) {
        case CmpOp::lt: changed |= tighten_le(d.coeffs, -d.constant - 1, b); break;
        case CmpOp::le: changed |= tighten_le(d.coeffs, -d.constant, b); break;
        case CmpOp::gt: changed |= tighten_le(neg.coeffs, -neg.constant - 1, b); break;
        case CmpOp::ge: changed |= tighten_le(neg.coeffs, -neg.constant, b); break;
        case CmpOp::eq:
          changed |= tighten_le(d.coeffs, -d.constant, b);
          changed |= tighten_le(neg.coeffs, -neg.constant, b);
          break;
        case CmpOp::ne: break;
      }
    }
    for (const auto& [v, iv] : b)
      if (iv.empty()) return false;
    if (!changed) break;
  }
  return true;
}

}  // namespace detail

struct VarDecl {
  std::string name;
  ParamDomain domain = ParamDomain::integer;
};

inline constexpr std::size_t kBoxCap = 100000;

// Every assignment to `vars` satisfying g, when bounds propagation proves the
// set finite and small enough to list; nullopt means "not known finite".
inline std::optional<std::vector<Env>> finite_solutions(const Guard& g, const std::vector<VarDecl>& vars) {
  auto clauses = detail::dnf(detail::nnf(g));
  if (!clauses) return std::nullopt;
  std::set<std::vector<Int>> seen;
  std::vector<Env> out;
  for (const auto& atoms : *clauses) {
    Bounds b;
    for (const auto& v : vars)
      if (v.domain == ParamDomain::nat) b[v.name].lo = Int(0);
    if (!detail::propagate_bounds(atoms, b)) continue;
    Int box = 1;
    for (const auto& v : vars) {
      const auto& iv = b[v.name];
      if (!iv.bounded()) return std::nullopt;
      box *= *iv.hi - *iv.lo + 1;
      if (box > kBoxCap) return std::nullopt;
    }
    std::vector<Int> cur(vars.size());
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == vars.size()) {
        Env env;
        for (std::size_t j = 0; j < vars.size(); ++j) env[vars[j].name] = cur[j];
        if (g.eval(env) && seen.insert(cur).second) out.push_back(std::move(env));
        return;
      }
      const auto& iv = b[vars[i].name];
      for (Int x = *iv.lo; x <= *iv.hi; ++x) {
        cur[i] = x;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Integer points where the truth of a one-variable guard can change: the
// roots of its comparison atoms, rounded both ways.
inline std::vector<Int> critical_points(const Guard& g, const std::string& var) {
  std::vector<Int> out;
  auto visit = [&](auto&& self, const Guard& h) -> void {
    if (h.kind == Guard::Kind::compare) {
      const Affine d = h.lhs - h.rhs;
      auto it = d.coeffs.find(var);
      if (it != d.coeffs.end()) {
        out.push_back(floor_div(-d.constant, it->second));
        out.push_back(ceil_div(-d.constant, it->second));
      }
    }
    for (const auto& k : h.kids) self(self, k);
  };
  visit(visit, g);
  return out;
}

}  // namespace peano::dsl
