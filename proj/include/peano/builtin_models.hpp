#pragma once

// The standard model and the eight counterexample structures, with the
// evidence each one is shipped with. Orders are integer predicates on the
// abstract indices.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "peano/evidence.hpp"
#include "peano/model.hpp"

namespace peano {

enum class ModelId {
  STD,
  M1_OMEGA_PLUS_OMEGA,
  M2_OMEGA_INCOMPARABLE,
  M3_GRID,
  M4_OMEGA_PLUS_ZETA,
  M5_REVERSED,
  M6_BRAID,
  M7_DISCRETE,
  M8_OMEGA_PLUS_ZETA_CUT,
};

inline constexpr std::array<ModelId, 9> kAllModels = {
    ModelId::STD,         ModelId::M1_OMEGA_PLUS_OMEGA, ModelId::M2_OMEGA_INCOMPARABLE,
    ModelId::M3_GRID,     ModelId::M4_OMEGA_PLUS_ZETA,  ModelId::M5_REVERSED,
    ModelId::M6_BRAID,    ModelId::M7_DISCRETE,         ModelId::M8_OMEGA_PLUS_ZETA_CUT,
};

inline const char* to_string(ModelId id) {
  switch (id) {
    case ModelId::STD: return "std";
    case ModelId::M1_OMEGA_PLUS_OMEGA: return "m1-omega-plus-omega";
    case ModelId::M2_OMEGA_INCOMPARABLE: return "m2-omega-incomparable";
    case ModelId::M3_GRID: return "m3-grid";
    case ModelId::M4_OMEGA_PLUS_ZETA: return "m4-omega-plus-zeta";
    case ModelId::M5_REVERSED: return "m5-reversed";
    case ModelId::M6_BRAID: return "m6-braid";
    case ModelId::M7_DISCRETE: return "m7-discrete";
    case ModelId::M8_OMEGA_PLUS_ZETA_CUT: return "m8-omega-plus-zeta-cut";
  }
  return "?";
}

// Short file stem of the bundled DSL source (models/<stem>.model).
inline const char* source_stem(ModelId id) {
  switch (id) {
    case ModelId::STD: return "std";
    case ModelId::M1_OMEGA_PLUS_OMEGA: return "m1";
    case ModelId::M2_OMEGA_INCOMPARABLE: return "m2";
    case ModelId::M3_GRID: return "m3";
    case ModelId::M4_OMEGA_PLUS_ZETA: return "m4";
    case ModelId::M5_REVERSED: return "m5";
    case ModelId::M6_BRAID: return "m6";
    case ModelId::M7_DISCRETE: return "m7";
    case ModelId::M8_OMEGA_PLUS_ZETA_CUT: return "m8";
  }
  return "?";
}

inline std::optional<ModelId> parse_model_id(std::string_view s) {
  for (auto id : kAllModels)
    if (s == to_string(id) || s == source_stem(id)) return id;
  return std::nullopt;
}

inline Regime regime_of(ModelId id) {
  switch (id) {
    case ModelId::M5_REVERSED:
    case ModelId::M6_BRAID:
    case ModelId::M7_DISCRETE:
    case ModelId::M8_OMEGA_PLUS_ZETA_CUT: return Regime::sub_inductive;
    default: return Regime::pre_inductive;
  }
}

namespace builtin {

class Base : public Model {
 public:
  Base(std::string name, std::vector<SortSpec> sorts) : name_(std::move(name)), sorts_(std::move(sorts)) {}
  std::string name() const override { return name_; }
  const std::vector<SortSpec>& sorts() const override { return sorts_; }

 protected:
  bool do_in_carrier(const Element&) const override { return true; }

  static Element shift(const Element& x, long long by) {
    auto p = x.params();
    p.back() += by;
    return Element(x.sort(), std::move(p));
  }

  static std::vector<Element> chain_below(const std::string& sort, const Int& n) {
    std::vector<Element> out;
    for (Int i = 0; i < n; ++i) out.emplace_back(sort, std::vector<Int>{i});
    return out;
  }

 private:
  std::string name_;
  std::vector<SortSpec> sorts_;
};

inline SortSpec nat_sort(std::string name) { return {std::move(name), {ParamDomain::nat}, std::nullopt}; }
inline SortSpec int_sort(std::string name) { return {std::move(name), {ParamDomain::integer}, std::nullopt}; }

// N(n), usual successor; the order is selected by the subclass.
class NaturalsBase : public Base {
 public:
  using Base::Base;

 protected:
  Element do_zero() const override { return {"N", {0}}; }
  Element do_succ(const Element& x) const override { return shift(x, 1); }
  std::optional<Element> do_pred(const Element& x) const override {
    if (x[0] == 0) return std::nullopt;
    return shift(x, -1);
  }
};

class Standard final : public NaturalsBase {
 public:
  Standard() : NaturalsBase(to_string(ModelId::STD), {nat_sort("N")}) {}

 protected:
  bool do_less(const Element& x, const Element& y) const override { return x[0] < y[0]; }
  std::optional<std::vector<Element>> do_finite_lower_section(const Element& p) const override {
    return chain_below("N", p[0]);
  }
};

class Reversed final : public NaturalsBase {
 public:
  Reversed() : NaturalsBase(to_string(ModelId::M5_REVERSED), {nat_sort("N")}) {}

 protected:
  bool do_less(const Element& x, const Element& y) const override { return y[0] < x[0]; }
};

class Discrete final : public NaturalsBase {
 public:
  Discrete() : NaturalsBase(to_string(ModelId::M7_DISCRETE), {nat_sort("N")}) {}

 protected:
  bool do_less(const Element&, const Element&) const override { return false; }
  std::optional<std::vector<Element>> do_finite_lower_section(const Element&) const override {
    return std::vector<Element>{};
  }
};

// Two copies of the naturals, A then B, each with its own successor.
class TwoChains : public Base {
 public:
  TwoChains(std::string name, bool b_over_integers)
      : Base(std::move(name), {nat_sort("A"), b_over_integers ? int_sort("B") : nat_sort("B")}),
        b_over_integers_(b_over_integers) {}

 protected:
  Element do_zero() const override { return {"A", {0}}; }
  Element do_succ(const Element& x) const override { return shift(x, 1); }
  std::optional<Element> do_pred(const Element& x) const override {
    if (x.sort() == "A" && x[0] == 0) return std::nullopt;
    if (x.sort() == "B" && x[0] == 0 && !b_over_integers_) return std::nullopt;
    return shift(x, -1);
  }
  std::optional<std::vector<Element>> do_finite_lower_section(const Element& p) const override {
    if (p.sort() == "A") return chain_below("A", p[0]);
    return std::nullopt;
  }

 private:
  bool b_over_integers_;
};

class OmegaPlusOmega final : public TwoChains {
 public:
  OmegaPlusOmega() : TwoChains(to_string(ModelId::M1_OMEGA_PLUS_OMEGA), false) {}

 protected:
  bool do_less(const Element& x, const Element& y) const override {
    if (x.sort() == y.sort()) return x[0] < y[0];
    return x.sort() == "A";
  }
};

class OmegaIncomparable final : public TwoChains {
 public:
  OmegaIncomparable() : TwoChains(to_string(ModelId::M2_OMEGA_INCOMPARABLE), false) {}

 protected:
  bool do_less(const Element& x, const Element& y) const override { return x.sort() == y.sort() && x[0] < y[0]; }
  std::optional<std::vector<Element>> do_finite_lower_section(const Element& p) const override {
    return chain_below(p.sort(), p[0]);
  }
};

class OmegaPlusZeta final : public TwoChains {
 public:
  OmegaPlusZeta() : TwoChains(to_string(ModelId::M4_OMEGA_PLUS_ZETA), true) {}

 protected:
  bool do_less(const Element& x, const Element& y) const override {
    if (x.sort() == y.sort()) return x[0] < y[0];
    return x.sort() == "A";
  }
};

// Like OmegaPlusZeta, but the negative B elements form an antichain sitting
// below every nonnegative B element.
class OmegaPlusZetaCut final : public TwoChains {
 public:
  OmegaPlusZetaCut() : TwoChains(to_string(ModelId::M8_OMEGA_PLUS_ZETA_CUT), true) {}

 protected:
  bool do_less(const Element& x, const Element& y) const override {
    if (x.sort() != y.sort()) return x.sort() == "A";
    if (x.sort() == "A") return x[0] < y[0];
    if (x[0] >= 0) return x[0] < y[0];
    return y[0] >= 0;
  }
};

// G(n,k): column n is a copy of the naturals; the bottoms of the columns
// n >= 1 are arranged in a descending sequence.
class Grid final : public Base {
 public:
  Grid() : Base(to_string(ModelId::M3_GRID), {{"G", {ParamDomain::nat, ParamDomain::nat}, std::nullopt}}) {}

 protected:
  Element do_zero() const override { return {"G", {0, 0}}; }
  Element do_succ(const Element& x) const override { return shift(x, 1); }
  std::optional<Element> do_pred(const Element& x) const override {
    if (x[1] == 0) return std::nullopt;
    return shift(x, -1);
  }
  bool do_less(const Element& x, const Element& y) const override {
    return (x[0] == y[0] && x[1] < y[1]) || (x[1] == 0 && 0 < y[0] && y[0] < x[0]);
  }
  std::optional<std::vector<Element>> do_finite_lower_section(const Element& p) const override {
    if (p[0] != 0) return std::nullopt;
    std::vector<Element> out;
    for (Int k = 0; k < p[1]; ++k) out.emplace_back("G", std::vector<Int>{0, k});
    return out;
  }
};

// Br(x,y) with y = +-x: the successor weaves the two sign chains together.
class Braid final : public Base {
 public:
  Braid()
      : Base(to_string(ModelId::M6_BRAID), {{"Br", {ParamDomain::nat, ParamDomain::integer}, std::nullopt}}) {}

 protected:
  bool do_in_carrier(const Element& e) const override { return e[1] == e[0] || e[1] == -e[0]; }
  Element do_zero() const override { return {"Br", {0, 0}}; }
  Element do_succ(const Element& e) const override {
    const Int& x = e[0];
    const Int& y = e[1];
    if (y == 0) return {"Br", {2, -2}};
    if (y < 0) return Element("Br", {x, Int(-y)});
    if (boost::multiprecision::bit_test(x, 0)) return Element("Br", {Int(x + 3), Int(-x - 3)});
    return Element("Br", {Int(x - 1), Int(1 - x)});
  }
  std::optional<Element> do_pred(const Element& e) const override {
    const Int& x = e[0];
    const Int& y = e[1];
    if (y == 0) return std::nullopt;
    if (y > 0) return Element("Br", {x, Int(-y)});
    if (x == 2) return Element("Br", {0, 0});
    if (boost::multiprecision::bit_test(x, 0)) return Element("Br", {Int(x + 1), Int(x + 1)});
    return Element("Br", {Int(x - 3), Int(x - 3)});
  }
  bool do_less(const Element& a, const Element& b) const override {
    const bool same_sign = (a[1] > 0 && b[1] > 0) || (a[1] < 0 && b[1] < 0);
    return same_sign && a[0] < b[0];
  }
  std::optional<std::vector<Element>> do_finite_lower_section(const Element& p) const override {
    std::vector<Element> out;
    if (p[1] == 0) return out;
    for (Int k = 1; k < p[0]; ++k) out.emplace_back("Br", std::vector<Int>{k, p[1] > 0 ? k : Int(-k)});
    return out;
  }
};

inline std::uint64_t to_u64(const Int& v) { return v.convert_to<std::uint64_t>(); }

// Ranks used by several bundles.
inline Ordinal nat_rank(const Element& e) { return Ordinal::from_nat(to_u64(e.params().back())); }

inline Ordinal omega_plus(std::uint64_t n) {
  std::vector<CnfTerm> t{{1, 1}};
  if (n) t.push_back({0, n});
  return Ordinal::make(std::move(t));
}

}  // namespace builtin

inline ModelPtr build(ModelId id) {
  switch (id) {
    case ModelId::STD: return std::make_shared<builtin::Standard>();
    case ModelId::M1_OMEGA_PLUS_OMEGA: return std::make_shared<builtin::OmegaPlusOmega>();
    case ModelId::M2_OMEGA_INCOMPARABLE: return std::make_shared<builtin::OmegaIncomparable>();
    case ModelId::M3_GRID: return std::make_shared<builtin::Grid>();
    case ModelId::M4_OMEGA_PLUS_ZETA: return std::make_shared<builtin::OmegaPlusZeta>();
    case ModelId::M5_REVERSED: return std::make_shared<builtin::Reversed>();
    case ModelId::M6_BRAID: return std::make_shared<builtin::Braid>();
    case ModelId::M7_DISCRETE: return std::make_shared<builtin::Discrete>();
    case ModelId::M8_OMEGA_PLUS_ZETA_CUT: return std::make_shared<builtin::OmegaPlusZetaCut>();
  }
  throw std::invalid_argument("unknown model id");
}

// Evidence names use the same text as the matching clauses in the bundled
// .model sources, so the two routes produce identical reports.
inline EvidenceBundle evidence(ModelId id) {
  using namespace builtin;
  auto sort_is = [](std::string s) { return [s](const Element& e) { return e.sort() == s; }; };
  auto b_descent = [](std::uint64_t j) { return Element("B", std::vector<Int>{-Int(j)}); };

  switch (id) {
    case ModelId::STD:
      return {ReachabilityCertificate{},
              RankCertificate{RelationKind::order, "N(n) -> n", nat_rank},
              RankCertificate{RelationKind::successor, "N(n) -> n", nat_rank},
              LinearityPlusRank{"N(n) -> n", nat_rank}};

    case ModelId::M1_OMEGA_PLUS_OMEGA: {
      auto rank = [](const Element& e) {
        return e.sort() == "A" ? nat_rank(e) : omega_plus(to_u64(e[0]));
      };
      const std::string rname = "A(n) -> n; B(n) -> w^1 + n";
      return {SubsetWitness{Principle::RI, "A(n)", sort_is("A"), Element("B", {0})},
              RankCertificate{RelationKind::order, rname, rank},
              RankCertificate{RelationKind::successor, rname, rank},
              LinearityPlusRank{rname, rank}};
    }

    case ModelId::M2_OMEGA_INCOMPARABLE:
      return {SubsetWitness{Principle::RI, "A(n)", sort_is("A"), Element("B", {0})},
              RankCertificate{RelationKind::order, "A(n) -> n; B(n) -> n", nat_rank},
              RankCertificate{RelationKind::successor, "A(n) -> n; B(n) -> n", nat_rank},
              IncomparablePair{Element("A", {0}), Element("B", {0})}};

    case ModelId::M3_GRID:
      return {SubsetWitness{Principle::RI, "G(n, k) if n = 0", [](const Element& e) { return e[0] == 0; },
                            Element("G", {1, 0})},
              RankCertificate{RelationKind::successor, "G(n, k) -> k", nat_rank},
              DescentWitness{RelationKind::order, "j -> G(j + 1, 0)",
                             [](std::uint64_t j) { return Element("G", std::vector<Int>{Int(j) + 1, 0}); }},
              IncomparablePair{Element("G", {0, 1}), Element("G", {1, 0})}};

    case ModelId::M4_OMEGA_PLUS_ZETA:
      return {SubsetWitness{Principle::RI, "A(n)", sort_is("A"), Element("B", {0})},
              DescentWitness{RelationKind::order, "j -> B(-j)", b_descent},
              DescentWitness{RelationKind::successor, "j -> B(-j)", b_descent}};

    case ModelId::M5_REVERSED:
      return {ReachabilityCertificate{},
              SubsetWitness{Principle::SI, "N(n) if n = 0", [](const Element& e) { return e[0] == 0; },
                            Element("N", {1})},
              DescentWitness{RelationKind::order, "j -> N(j)",
                             [](std::uint64_t j) { return Element("N", std::vector<Int>{Int(j)}); }},
              RankCertificate{RelationKind::successor, "N(n) -> n", nat_rank}};

    case ModelId::M6_BRAID: {
      // Position along the successor orbit (0,0), (2,-2), (2,2), (1,-1), (1,1), (4,-4), ...
      auto orbit = [](const Element& e) {
        const auto x = to_u64(e[0]);
        if (e[1] == 0) return Ordinal();
        const bool odd = x % 2 == 1;
        const bool neg = e[1] < 0;
        return Ordinal::from_nat(odd ? (neg ? 2 * x + 1 : 2 * x + 2) : (neg ? 2 * x - 3 : 2 * x - 2));
      };
      auto first_param = [](const Element& e) { return Ordinal::from_nat(to_u64(e[0])); };
      return {ReachabilityCertificate{},
              RankCertificate{RelationKind::order, "Br(x, y) -> x", first_param},
              RankCertificate{RelationKind::successor,
                              "Br(x, y) if y = 0 -> 0; "
                              "Br(x, y) if y < 0 and even(x) -> (2*x - 3); "
                              "Br(x, y) if y > 0 and even(x) -> (2*x - 2); "
                              "Br(x, y) if y < 0 and odd(x) -> (2*x + 1); "
                              "Br(x, y) if y > 0 and odd(x) -> (2*x + 2)",
                              orbit},
              SubsetWitness{Principle::SI, "Br(x, y) if x = 0 and y = 0 | Br(x, y) if x = 2 and y = -2",
                            [](const Element& e) {
                              return (e[0] == 0 && e[1] == 0) || (e[0] == 2 && e[1] == -2);
                            },
                            Element("Br", {1, 1})},
              IncomparablePair{Element("Br", {1, 1}), Element("Br", {1, -1})}};
    }

    case ModelId::M7_DISCRETE:
      return {ReachabilityCertificate{},
              RankCertificate{RelationKind::order, "N(n) -> 0", [](const Element&) { return Ordinal(); }},
              RankCertificate{RelationKind::successor, "N(n) -> n", nat_rank},
              IncomparablePair{Element("N", {0}), Element("N", {1})}};

    case ModelId::M8_OMEGA_PLUS_ZETA_CUT: {
      auto rank = [](const Element& e) {
        if (e.sort() == "A") return nat_rank(e);
        if (e[0] < 0) return Ordinal::omega();
        return omega_plus(to_u64(e[0]) + 1);
      };
      return {SubsetWitness{Principle::RI, "A(n)", sort_is("A"), Element("B", {0})},
              RankCertificate{RelationKind::order, "A(n) -> n; B(n) if n < 0 -> w^1; B(n) if n >= 0 -> w^1 + (n + 1)",
                              rank},
              DescentWitness{RelationKind::successor, "j -> B(-j)", b_descent},
              IncomparablePair{Element("B", {-1}), Element("B", {-2})}};
    }
  }
  return {};
}

}  // namespace peano
