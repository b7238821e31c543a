#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "peano/ordinal.hpp"

namespace peano {

using Int = boost::multiprecision::cpp_int;

// One member of a model's carrier: a sort tag plus a fixed-length integer
// parameter tuple. Equality is structural.
class Element {
 public:
  Element() = default;
  Element(std::string sort, std::vector<Int> params) : sort_(std::move(sort)), params_(std::move(params)) {}
  Element(std::string sort, std::initializer_list<long long> params) : sort_(std::move(sort)) {
    params_.reserve(params.size());
    for (auto p : params) params_.emplace_back(p);
  }

  const std::string& sort() const noexcept { return sort_; }
  const std::vector<Int>& params() const noexcept { return params_; }
  const Int& operator[](std::size_t i) const { return params_.at(i); }
  std::size_t arity() const noexcept { return params_.size(); }

  friend bool operator==(const Element& a, const Element& b) { return a.sort_ == b.sort_ && a.params_ == b.params_; }

  // Total order for use in ordered containers; not the model's order.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (auto c = a.sort_ <=> b.sort_; c != 0) return c;
    if (a.params_.size() != b.params_.size()) return a.params_.size() <=> b.params_.size();
    for (std::size_t i = 0; i < a.params_.size(); ++i) {
      if (a.params_[i] < b.params_[i]) return std::strong_ordering::less;
      if (a.params_[i] > b.params_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  // Canonical text: Sort(p1,p2,...)
  std::string to_string() const {
    std::string out = sort_ + "(";
    for (std::size_t i = 0; i < params_.size(); ++i) {
      if (i) out += ",";
      out += params_[i].str();
    }
    return out + ")";
  }

  // Parses the canonical text; spaces are tolerated around tokens.
  static Element parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& what) -> Element {
      throw ValidationError("element '" + std::string(text) + "': " + what);
    };
    skip();
    const auto start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    if (pos == start || std::isdigit(static_cast<unsigned char>(text[start]))) return fail("expected a sort name");
    std::string sort(text.substr(start, pos - start));
    skip();
    if (pos >= text.size() || text[pos] != '(') return fail("expected '('");
    ++pos;
    std::vector<Int> params;
    skip();
    if (pos < text.size() && text[pos] == ')') return fail("at least one parameter required");
    while (true) {
      skip();
      bool neg = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) neg = text[pos++] == '-';
      const auto ds = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (ds == pos) return fail("expected an integer");
      Int v(std::string(text.substr(ds, pos - ds)));
      params.push_back(neg ? Int(-v) : v);
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      return fail("expected ',' or ')'");
    }
    skip();
    if (pos != text.size()) return fail("trailing text");
    return Element(std::move(sort), std::move(params));
  }

 private:
  std::string sort_;
  std::vector<Int> params_;
};

inline std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.to_string(); }

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    std::size_t h = std::hash<std::string>{}(e.sort());
    for (const auto& p : e.params()) {
      h ^= static_cast<std::size_t>(boost::multiprecision::hash_value(p)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace peano
