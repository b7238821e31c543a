#pragma once

// Ordinals below w^w in Cantor normal form. These are the codomain of the
// rank certificates; only construction, comparison and text I/O exist.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace peano {

class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

class OrdinalError : public ValidationError {
 public:
  OrdinalError(const std::string& msg, std::size_t index)
      : ValidationError(msg + " (term " + std::to_string(index) + ")"), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

struct CnfTerm {
  std::uint64_t exponent = 0;
  std::uint64_t coefficient = 1;
  friend bool operator==(const CnfTerm&, const CnfTerm&) = default;
};

class Ordinal {
 public:
  Ordinal() = default;  // zero

  // Throws OrdinalError naming the first offending term.
  static Ordinal make(std::vector<CnfTerm> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (terms[i].coefficient == 0) throw OrdinalError("zero coefficient", i);
      if (i > 0 && terms[i].exponent >= terms[i - 1].exponent)
        throw OrdinalError("exponents not strictly decreasing", i);
    }
    Ordinal o;
    o.terms_ = std::move(terms);
    return o;
  }

  static Ordinal from_nat(std::uint64_t n) {
    Ordinal o;
    if (n > 0) o.terms_.push_back({0, n});
    return o;
  }

  static Ordinal omega() { return make({{1, 1}}); }

  const std::vector<CnfTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const noexcept { return terms_.empty() || terms_.front().exponent == 0; }

  friend bool operator==(const Ordinal&, const Ordinal&) = default;

  // Lexicographic on the term list: a larger leading exponent wins, then a
  // larger coefficient, then the remaining tail; a proper prefix is smaller.
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    const auto n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
      const auto& x = a.terms_[i];
      const auto& y = b.terms_[i];
      if (x.exponent != y.exponent) return x.exponent <=> y.exponent;
      if (x.coefficient != y.coefficient) return x.coefficient <=> y.coefficient;
    }
    return a.terms_.size() <=> b.terms_.size();
  }

  // "0", "3", "w^1 + 2", "w^2*3 + w^1 + 5".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) out += " + ";
      const auto& t = terms_[i];
      if (t.exponent == 0) {
        out += std::to_string(t.coefficient);
      } else {
        out += "w^" + std::to_string(t.exponent);
        if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
      }
    }
    return out;
  }

  // Accepts the rendering above plus the shorthands "w", "w*c", "w^e*c"
  // with optional spaces. Terms must already be in normal form.
  static Ordinal parse(std::string_view text);

 private:
  std::vector<CnfTerm> terms_;
};

inline Ordinal ord_from_nat(std::uint64_t n) { return Ordinal::from_nat(n); }
inline Ordinal ord_make(std::vector<CnfTerm> terms) { return Ordinal::make(std::move(terms)); }

enum class Ordering { less, equal, greater };

inline Ordering ord_compare(const Ordinal& a, const Ordinal& b) {
  const auto c = a <=> b;
  if (c < 0) return Ordering::less;
  if (c > 0) return Ordering::greater;
  return Ordering::equal;
}

namespace detail {

struct OrdinalScanner {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool at_digit() {
    skip_ws();
    return pos < s.size() && s[pos] >= '0' && s[pos] <= '9';
  }
  std::uint64_t number() {
    skip_ws();
    if (!at_digit()) throw ValidationError("ordinal: expected a number at offset " + std::to_string(pos));
    std::uint64_t v = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      const auto d = static_cast<std::uint64_t>(s[pos] - '0');
      if (v > (UINT64_MAX - d) / 10) throw ValidationError("ordinal: number too large");
      v = v * 10 + d;
      ++pos;
    }
    return v;
  }
  bool done() {
    skip_ws();
    return pos == s.size();
  }
};

}  // namespace detail

inline Ordinal Ordinal::parse(std::string_view text) {
  detail::OrdinalScanner sc{text};
  if (sc.done()) throw ValidationError("ordinal: empty text");
  std::vector<CnfTerm> terms;
  bool zero_literal = false;
  do {
    CnfTerm t;
    if (sc.eat('w')) {
      t.exponent = sc.eat('^') ? sc.number() : 1;
      t.coefficient = sc.eat('*') ? sc.number() : 1;
    } else {
      t.exponent = 0;
      t.coefficient = sc.number();
      if (t.coefficient == 0) {
        zero_literal = true;
        continue;
      }
    }
    if (t.coefficient == 0) throw OrdinalError("zero coefficient", terms.size());
    terms.push_back(t);
  } while (sc.eat('+'));
  if (!sc.done()) throw ValidationError("ordinal: trailing text at offset " + std::to_string(sc.pos));
  if (zero_literal && !terms.empty()) throw ValidationError("ordinal: 0 must stand alone");
  return make(std::move(terms));
}

}  // namespace peano
