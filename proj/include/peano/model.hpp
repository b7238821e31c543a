#pragma once

// The Model contract, carrier enumeration, derived order operations and the
// axiom checkers for both regimes.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "peano/element.hpp"

namespace peano {

class CarrierError : public std::invalid_argument {
 public:
  explicit CarrierError(const Element& e)
      : std::invalid_argument("element " + e.to_string() + " is not in the carrier"), element_(e) {}
  const Element& element() const noexcept { return element_; }

 private:
  Element element_;
};

enum class Regime { pre_inductive, sub_inductive };

inline const char* to_string(Regime r) { return r == Regime::pre_inductive ? "pre" : "sub"; }

inline Regime parse_regime(const std::string& s) {
  if (s == "pre" || s == "pre-inductive") return Regime::pre_inductive;
  if (s == "sub" || s == "sub-inductive") return Regime::sub_inductive;
  throw std::invalid_argument("unknown regime '" + s + "' (expected pre or sub)");
}

enum class ParamDomain { nat, integer };

struct SortSpec {
  std::string name;
  std::vector<ParamDomain> domains;
  // Largest shell that can hold a carrier element, when known to be finite.
  std::optional<Int> max_shell;
};

// Zero, successor, partial predecessor, strict order and a fair enumerator.
// Public operations validate carrier membership; subclasses implement the
// do_* hooks and may assume their arguments are carrier elements.
class Model {
 public:
  virtual ~Model() = default;

  virtual std::string name() const = 0;
  virtual const std::vector<SortSpec>& sorts() const = 0;

  Element zero() const { return do_zero(); }

  Element succ(const Element& x) const {
    require(x);
    return do_succ(x);
  }

  std::optional<Element> pred(const Element& x) const {
    require(x);
    return do_pred(x);
  }

  bool less(const Element& x, const Element& y) const {
    require(x);
    require(y);
    return do_less(x, y);
  }

  bool in_carrier(const Element& x) const {
    for (const auto& s : sorts()) {
      if (s.name != x.sort()) continue;
      if (s.domains.size() != x.arity()) return false;
      for (std::size_t i = 0; i < s.domains.size(); ++i)
        if (s.domains[i] == ParamDomain::nat && x[i] < 0) return false;
      return do_in_carrier(x);
    }
    return false;
  }

  // The complete strict lower section of p when the model knows it to be
  // finite; nullopt means "not known to be finite".
  std::optional<std::vector<Element>> finite_lower_section(const Element& p) const {
    require(p);
    return do_finite_lower_section(p);
  }

  // First `budget` carrier elements; deterministic and prefix-monotone.
  virtual std::vector<Element> enumerate(std::size_t budget) const;

  void require(const Element& x) const {
    if (!in_carrier(x)) throw CarrierError(x);
  }

 protected:
  virtual Element do_zero() const = 0;
  virtual Element do_succ(const Element& x) const = 0;
  virtual std::optional<Element> do_pred(const Element& x) const = 0;
  virtual bool do_less(const Element& x, const Element& y) const = 0;
  virtual bool do_in_carrier(const Element& x) const = 0;
  virtual std::optional<std::vector<Element>> do_finite_lower_section(const Element&) const { return std::nullopt; }
};

using ModelPtr = std::shared_ptr<const Model>;

namespace detail {

// zigzag code -> integer: 0, 1, -1, 2, -2, ...
inline Int zigzag(const Int& code) {
  if (code == 0) return 0;
  if (boost::multiprecision::bit_test(code, 0)) return (code + 1) / 2;
  return -(code / 2);
}

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// All parameter tuples whose largest absolute coordinate is exactly `shell`,
// in lexicographic order of per-coordinate codes (values for nat, zigzag
// codes for int).
inline std::vector<std::vector<Int>> shell_tuples(const std::vector<ParamDomain>& domains, const Int& shell) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(domains.size());
  auto rec = [&](auto&& self, std::size_t i, bool hit) -> void {
    if (i == domains.size()) {
      if (hit) out.push_back(cur);
      return;
    }
    const Int max_code = domains[i] == ParamDomain::nat ? shell : Int(2 * shell);
    for (Int code = 0; code <= max_code; ++code) {
      cur[i] = domains[i] == ParamDomain::nat ? code : zigzag(code);
      self(self, i + 1, hit || abs_int(cur[i]) == shell);
    }
  };
  rec(rec, 0, false);
  return out;
}

class SortStream {
 public:
  // Candidate tuples scanned without a carrier hit before a sort whose
  // finiteness is unknown is treated as exhausted.
  static constexpr std::size_t kBarrenLimit = std::size_t{1} << 20;

  SortStream(const Model& m, const SortSpec& s) : model_(m), spec_(s) {}

  std::optional<Element> next() {
    while (!done_) {
      if (idx_ < buf_.size()) return std::move(buf_[idx_++]);
      load_shell();
    }
    return std::nullopt;
  }

 private:
  void load_shell() {
    buf_.clear();
    idx_ = 0;
    if (spec_.max_shell && shell_ > *spec_.max_shell) {
      done_ = true;
      return;
    }
    if (spec_.domains.empty()) {
      if (shell_ == 0) {
        Element e(spec_.name, std::vector<Int>{});
        if (model_.in_carrier(e)) buf_.push_back(std::move(e));
        ++shell_;
      } else {
        done_ = true;
      }
      return;
    }
    for (auto& t : shell_tuples(spec_.domains, shell_)) {
      Element e(spec_.name, std::move(t));
      ++barren_;
      if (model_.in_carrier(e)) {
        buf_.push_back(std::move(e));
        barren_ = 0;
      }
    }
    ++shell_;
    if (buf_.empty() && !spec_.max_shell && barren_ > kBarrenLimit) done_ = true;
  }

  const Model& model_;
  const SortSpec& spec_;
  Int shell_ = 0;
  std::vector<Element> buf_;
  std::size_t idx_ = 0;
  std::size_t barren_ = 0;
  bool done_ = false;
};

}  // namespace detail

// Round-robin over the declared sorts; within a sort, shells of increasing
// parameter magnitude.
inline std::vector<Element> Model::enumerate(std::size_t budget) const {
  std::vector<Element> out;
  if (budget == 0) return out;
  std::vector<detail::SortStream> streams;
  for (const auto& s : sorts()) streams.emplace_back(*this, s);
  std::vector<bool> alive(streams.size(), true);
  bool any = true;
  while (out.size() < budget && any) {
    any = false;
    for (std::size_t i = 0; i < streams.size() && out.size() < budget; ++i) {
      if (!alive[i]) continue;
      if (auto e = streams[i].next()) {
        out.push_back(std::move(*e));
        any = true;
      } else {
        alive[i] = false;
      }
    }
  }
  return out;
}

inline std::vector<Element> enumerate_carrier(const Model& m, std::size_t budget) { return m.enumerate(budget); }

// x <= y iff x < y or x = y.
inline bool leq(const Model& m, const Element& x, const Element& y) {
  m.require(x);
  m.require(y);
  return x == y || m.less(x, y);
}

enum class SectionKind { order_strict, order_reflexive, successor };

struct Section {
  std::vector<Element> elements;
  bool exhaustive = false;
};

// Elements standing in the chosen relation to p. With a finiteness oracle
// the complete section is returned whatever the budget; otherwise the
// enumerated fragment, flagged non-exhaustive.
inline Section section(const Model& m, SectionKind kind, const Element& p, std::size_t budget) {
  m.require(p);
  Section out;
  if (kind == SectionKind::successor) {
    if (auto q = m.pred(p)) out.elements.push_back(*q);
    out.exhaustive = true;
    return out;
  }
  if (auto fin = m.finite_lower_section(p)) {
    out.elements = std::move(*fin);
    out.exhaustive = true;
  } else {
    for (auto& x : m.enumerate(budget))
      if (m.less(x, p)) out.elements.push_back(std::move(x));
  }
  if (kind == SectionKind::order_reflexive) out.elements.push_back(p);
  return out;
}

enum class Clause {
  succ_injective,
  zero_not_successor,
  order_irreflexive,
  order_transitive,
  nothing_below_zero,
  below_successor,
};

inline const char* to_string(Clause c) {
  switch (c) {
    case Clause::succ_injective: return "succ-injective";
    case Clause::zero_not_successor: return "zero-not-successor";
    case Clause::order_irreflexive: return "order-irreflexive";
    case Clause::order_transitive: return "order-transitive";
    case Clause::nothing_below_zero: return "nothing-below-zero";
    case Clause::below_successor: return "below-successor";
  }
  return "?";
}

struct ClauseVerdict {
  Clause clause;
  bool passed = true;
  // Violating elements, in the order the clause names them.
  std::vector<Element> witness;
  std::string detail;
};

struct AxiomReport {
  Regime regime = Regime::pre_inductive;
  std::size_t budget = 0;
  std::vector<ClauseVerdict> clauses;

  bool passed() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const auto& c) { return c.passed; });
  }
  const ClauseVerdict* find(Clause c) const {
    for (const auto& v : clauses)
      if (v.clause == c) return &v;
    return nullptr;
  }
  const ClauseVerdict* first_failure() const {
    for (const auto& v : clauses)
      if (!v.passed) return &v;
    return nullptr;
  }
};

// Transitivity is checked on triples drawn from the first 32 elements.
inline constexpr std::size_t kTransitivityCap = 32;

inline AxiomReport check_axioms(const Model& m, Regime regime, std::size_t budget) {
  if (budget == 0) throw std::invalid_argument("check_axioms: budget must be at least 1");
  AxiomReport rep;
  rep.regime = regime;
  rep.budget = budget;
  const auto xs = m.enumerate(budget);
  const auto zero = m.zero();

  std::vector<Element> succs;
  succs.reserve(xs.size());
  for (const auto& x : xs) succs.push_back(m.succ(x));

  {
    ClauseVerdict v{Clause::succ_injective};
    std::map<Element, std::size_t> seen;
    for (std::size_t i = 0; i < xs.size() && v.passed; ++i) {
      auto [it, fresh] = seen.emplace(succs[i], i);
      if (!fresh) {
        v.passed = false;
        v.witness = {xs[it->second], xs[i]};
        v.detail = "distinct elements share the successor " + succs[i].to_string();
      }
    }
    rep.clauses.push_back(std::move(v));
  }
  {
    ClauseVerdict v{Clause::zero_not_successor};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (succs[i] == zero) {
        v.passed = false;
        v.witness = {xs[i]};
        v.detail = "succ(" + xs[i].to_string() + ") is zero";
        break;
      }
    }
    rep.clauses.push_back(std::move(v));
  }
  {
    ClauseVerdict v{Clause::order_irreflexive};
    for (const auto& x : xs) {
      if (m.less(x, x)) {
        v.passed = false;
        v.witness = {x};
        v.detail = x.to_string() + " < itself";
        break;
      }
    }
    rep.clauses.push_back(std::move(v));
  }
  {
    ClauseVerdict v{Clause::order_transitive};
    const auto n = std::min(xs.size(), kTransitivityCap);
    for (std::size_t i = 0; i < n && v.passed; ++i)
      for (std::size_t j = 0; j < n && v.passed; ++j) {
        if (!m.less(xs[i], xs[j])) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (m.less(xs[j], xs[k]) && !m.less(xs[i], xs[k])) {
            v.passed = false;
            v.witness = {xs[i], xs[j], xs[k]};
            v.detail = "x < y and y < z but not x < z";
            break;
          }
        }
      }
    rep.clauses.push_back(std::move(v));
  }
  if (regime == Regime::pre_inductive) {
    {
      ClauseVerdict v{Clause::nothing_below_zero};
      for (const auto& x : xs) {
        if (m.less(x, zero)) {
          v.passed = false;
          v.witness = {x};
          v.detail = x.to_string() + " < zero";
          break;
        }
      }
      rep.clauses.push_back(std::move(v));
    }
    {
      // x < succ(p)  <=>  x = p or x < p
      ClauseVerdict v{Clause::below_successor};
      for (std::size_t pi = 0; pi < xs.size() && v.passed; ++pi) {
        const auto& p = xs[pi];
        for (const auto& x : xs) {
          const bool lhs = m.less(x, succs[pi]);
          const bool rhs = x == p || m.less(x, p);
          if (lhs != rhs) {
            v.passed = false;
            v.witness = {x, p};
            v.detail = lhs ? "x < succ(p) but neither x = p nor x < p" : "x = p or x < p, but not x < succ(p)";
            break;
          }
        }
      }
      rep.clauses.push_back(std::move(v));
    }
  }
  return rep;
}

struct ClosureResult {
  bool holds_at_budget = true;
  std::optional<Element> witness;
};

// Every enumerated element is zero or has a predecessor.
inline ClosureResult zero_succ_closure(const Model& m, std::size_t budget) {
  if (budget == 0) throw std::invalid_argument("zero_succ_closure: budget must be at least 1");
  const auto zero = m.zero();
  for (const auto& x : m.enumerate(budget)) {
    if (x != zero && !m.pred(x)) return {false, x};
  }
  return {};
}

}  // namespace peano
