#pragma once

// Lexer and recursive-descent parser for .model sources.

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "peano/dsl/ast.hpp"

namespace peano::dsl {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& message, std::vector<std::string> expected = {})
      : std::runtime_error(render(line, col, message, expected)),
        line_(line),
        col_(col),
        message_(message),
        expected_(std::move(expected)) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return col_; }
  const std::string& message() const noexcept { return message_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string render(int line, int col, const std::string& message, const std::vector<std::string>& expected) {
    std::string out = std::to_string(line) + ":" + std::to_string(col) + ": " + message;
    if (!expected.empty()) {
      out += "; expected one of:";
      for (const auto& e : expected) out += " " + e;
    }
    return out;
  }

  int line_, col_;
  std::string message_;
  std::vector<std::string> expected_;
};

struct Token {
  enum class Kind { ident, number, symbol, end };
  Kind kind = Kind::end;
  std::string text;
  int line = 1;
  int col = 1;

  std::string describe() const {
    switch (kind) {
      case Kind::end: return "end of input";
      case Kind::number: return "number " + text;
      case Kind::ident: return "'" + text + "'";
      case Kind::symbol: return "'" + text + "'";
    }
    return text;
  }
};

inline std::vector<Token> lex(std::string_view src) {
  static const char* const kSymbols[] = {"->", "<=", ">=", "/=", "!=", "(", ")", "{", "}", ",", ":",
                                         "<",  "=",  ">",  "+",  "-",  "*", "^", "|"};
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Token::Kind::ident;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Token::Kind::number;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    bool matched = false;
    for (const char* sym : kSymbols) {
      const std::string_view s(sym);
      if (src.substr(i, s.size()) == s) {
        t.kind = Token::Kind::symbol;
        t.text = s == "!=" ? "/=" : std::string(s);
        advance(s.size());
        out.push_back(std::move(t));
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(line, col, std::string("unexpected character '") + c + "'");
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

namespace detail {

inline const std::set<std::string>& reserved_words() {
  static const std::set<std::string> words{"and", "or", "not", "if", "iff", "where", "true", "false",
                                           "even", "odd", "excluding"};
  return words;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ModelAst model() {
    ModelAst ast;
    ast.loc = loc();
    keyword("model");
    ast.name = ident("model name");
    symbol("{");
    bool have_zero = false;
    while (true) {
      const auto& t = peek();
      if (is_symbol("}")) {
        if (!have_zero) throw ParseError(t.line, t.col, "zero declaration required", {"'zero'"});
        next();
        break;
      }
      if (t.kind != Token::Kind::ident)
        fail(t, "expected a declaration", {"'sort'", "'zero'", "'succ'", "'pred'", "'less'", "'rank'", "'witness'", "'}'"});
      if (t.text == "sort") {
        ast.sorts.push_back(sort_decl());
      } else if (t.text == "zero") {
        if (have_zero) fail(t, "duplicate zero declaration");
        ast.zero_loc = loc();
        next();
        ast.zero = term();
        have_zero = true;
      } else if (t.text == "succ" || t.text == "pred") {
        MapRule r;
        r.loc = loc();
        const bool is_succ = next().text == "succ";
        r.from = clause();
        symbol("->");
        r.to = term();
        (is_succ ? ast.succs : ast.preds).push_back(std::move(r));
      } else if (t.text == "less") {
        LessRule r;
        r.loc = loc();
        next();
        r.left = pattern();
        symbol("<");
        r.right = pattern();
        for (const auto& v : r.right.vars)
          if (std::find(r.left.vars.begin(), r.left.vars.end(), v) != r.left.vars.end())
            fail(peek(), "variable '" + v + "' bound twice in less rule");
        keyword("iff");
        r.guard = guard();
        ast.lesses.push_back(std::move(r));
      } else if (t.text == "rank") {
        ast.evidence.emplace_back(rank_decl());
      } else if (t.text == "witness") {
        ast.evidence.push_back(witness_decl());
      } else {
        fail(t, "unknown declaration", {"'sort'", "'zero'", "'succ'", "'pred'", "'less'", "'rank'", "'witness'", "'}'"});
      }
    }
    if (peek().kind != Token::Kind::end) fail(peek(), "text after the model block", {"end of input"});
    return ast;
  }

  Guard guard_only() {
    auto g = guard();
    if (peek().kind != Token::Kind::end) fail(peek(), "trailing text after guard", {"end of input"});
    return g;
  }

  Affine expr_only() {
    auto e = expr();
    if (peek().kind != Token::Kind::end) fail(peek(), "trailing text after expression", {"end of input"});
    return e;
  }

 private:
  // ---- token plumbing ----
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  Loc loc() const { return {peek().line, peek().col}; }

  [[noreturn]] static void fail(const Token& t, const std::string& msg, std::vector<std::string> expected = {}) {
    throw ParseError(t.line, t.col, msg + " (found " + t.describe() + ")", std::move(expected));
  }

  bool is_symbol(std::string_view s, std::size_t ahead = 0) const {
    const auto& t = peek(ahead);
    return t.kind == Token::Kind::symbol && t.text == s;
  }
  bool is_keyword(std::string_view s, std::size_t ahead = 0) const {
    const auto& t = peek(ahead);
    return t.kind == Token::Kind::ident && t.text == s;
  }
  bool accept_symbol(std::string_view s) {
    if (!is_symbol(s)) return false;
    next();
    return true;
  }
  void symbol(std::string_view s) {
    if (!accept_symbol(s)) fail(peek(), "unexpected token", {"'" + std::string(s) + "'"});
  }
  void keyword(std::string_view s) {
    if (!is_keyword(s)) fail(peek(), "unexpected token", {"'" + std::string(s) + "'"});
    next();
  }
  std::string ident(const std::string& what) {
    const auto& t = peek();
    if (t.kind != Token::Kind::ident) fail(t, "expected " + what, {"identifier"});
    return next().text;
  }
  std::string variable() {
    const auto& t = peek();
    if (t.kind != Token::Kind::ident) fail(t, "expected a variable", {"identifier"});
    if (reserved_words().count(t.text)) fail(t, "reserved word used as a variable", {"identifier"});
    return next().text;
  }

  // ---- declarations ----
  SortDecl sort_decl() {
    SortDecl s;
    s.loc = loc();
    keyword("sort");
    s.name = ident("sort name");
    symbol("(");
    do {
      VarDecl v;
      const auto& at = peek();
      v.name = variable();
      for (const auto& p : s.params)
        if (p.name == v.name) fail(at, "duplicate parameter '" + v.name + "'");
      symbol(":");
      if (is_keyword("nat")) {
        v.domain = ParamDomain::nat;
      } else if (is_keyword("int")) {
        v.domain = ParamDomain::integer;
      } else {
        fail(peek(), "unknown parameter domain", {"'nat'", "'int'"});
      }
      next();
      s.params.push_back(std::move(v));
    } while (accept_symbol(","));
    symbol(")");
    if (is_keyword("where")) {
      next();
      s.where = guard();
    }
    return s;
  }

  Pattern pattern() {
    Pattern p;
    p.sort = ident("sort name");
    symbol("(");
    do {
      const auto& at = peek();
      auto v = variable();
      if (std::find(p.vars.begin(), p.vars.end(), v) != p.vars.end())
        fail(at, "variable '" + v + "' bound twice in pattern");
      p.vars.push_back(std::move(v));
      if (is_symbol("+") || is_symbol("-") || is_symbol("*"))
        fail(peek(), "patterns take plain variables", {"','", "')'"});
    } while (accept_symbol(","));
    symbol(")");
    return p;
  }

  Term term() {
    Term t;
    t.sort = ident("sort name");
    symbol("(");
    do {
      t.args.push_back(expr());
    } while (accept_symbol(","));
    symbol(")");
    return t;
  }

  Clause clause() {
    Clause c;
    c.pattern = pattern();
    if (is_keyword("if")) {
      next();
      c.guard = guard();
    }
    return c;
  }

  RankDecl rank_decl() {
    RankDecl r;
    r.loc = loc();
    keyword("rank");
    if ((is_keyword("order") || is_keyword("succ")) && !is_symbol("(", 1)) {
      r.kind = next().text == "order" ? RankKind::order : RankKind::succ;
    }
    r.clause = clause();
    symbol("->");
    r.value = ordexpr();
    return r;
  }

  OrdExpr ordexpr() {
    OrdExpr o;
    std::vector<Token> starts;
    do {
      starts.push_back(peek());
      OrdTerm t;
      if (is_keyword("w")) {
        next();
        t.exponent = 1;
        if (accept_symbol("^")) t.exponent = small_number();
        if (accept_symbol("*")) t.coefficient = coefficient();
      } else {
        t.exponent = 0;
        t.coefficient = coefficient();
      }
      o.terms.push_back(std::move(t));
    } while (accept_symbol("+"));
    for (std::size_t i = 1; i < o.terms.size(); ++i)
      if (o.terms[i].exponent >= o.terms[i - 1].exponent)
        fail(starts[i], "rank exponents must strictly decrease; parenthesize sums such as (n + 1)");
    if (o.terms.size() == 1 && o.terms[0].exponent == 0 && o.terms[0].coefficient == Affine::of_const(0))
      o.terms.clear();
    return o;
  }

  Affine coefficient() {
    const auto& t = peek();
    if (t.kind == Token::Kind::number) return Affine::of_const(Int(next().text));
    if (t.kind == Token::Kind::ident && !reserved_words().count(t.text) && t.text != "w")
      return Affine::of_var(next().text);
    if (accept_symbol("(")) {
      auto e = expr();
      symbol(")");
      return e;
    }
    fail(t, "expected an ordinal coefficient", {"number", "identifier", "'('", "'w'"});
  }

  std::uint64_t small_number() {
    const auto& t = peek();
    if (t.kind != Token::Kind::number) fail(t, "expected a number", {"number"});
    if (t.text.size() > 18) fail(t, "number too large");
    return std::stoull(next().text);
  }

  EvidenceDecl witness_decl() {
    const Loc at = loc();
    keyword("witness");
    const auto& t = peek();
    if (is_keyword("subset")) {
      next();
      SubsetDecl s;
      s.loc = at;
      if (is_keyword("RI")) {
        s.target = Principle::RI;
      } else if (is_keyword("SI")) {
        s.target = Principle::SI;
      } else {
        fail(peek(), "subset witnesses refute RI or SI", {"'RI'", "'SI'"});
      }
      next();
      do {
        s.members.push_back(clause());
      } while (accept_symbol("|"));
      keyword("excluding");
      s.excluded = term();
      return s;
    }
    if (is_keyword("descent")) {
      next();
      DescentDecl d;
      d.loc = at;
      if (is_keyword("order")) {
        d.kind = RelationKind::order;
      } else if (is_keyword("succ")) {
        d.kind = RelationKind::successor;
      } else {
        fail(peek(), "unknown descent kind", {"'order'", "'succ'"});
      }
      next();
      d.index = variable();
      symbol("->");
      d.term = term();
      return d;
    }
    if (is_keyword("incomparable")) {
      next();
      IncomparableDecl d;
      d.loc = at;
      d.x = term();
      symbol(",");
      d.y = term();
      return d;
    }
    if (is_keyword("reachability")) {
      next();
      return ReachabilityDecl{at};
    }
    if (is_keyword("linear")) {
      next();
      return LinearDecl{at};
    }
    fail(t, "unknown witness",
         {"'subset'", "'descent'", "'incomparable'", "'reachability'", "'linear'"});
  }

  // ---- expressions ----
  Affine expr() {
    Affine acc = product();
    while (is_symbol("+") || is_symbol("-")) {
      const bool minus = next().text == "-";
      auto rhs = product();
      acc += minus ? rhs.scaled(-1) : rhs;
    }
    return acc;
  }

  Affine product() {
    const auto& start = peek();
    Affine a = factor();
    while (accept_symbol("*")) {
      Affine b = factor();
      if (a.is_constant()) {
        a = b.scaled(a.constant);
      } else if (b.is_constant()) {
        a = a.scaled(b.constant);
      } else {
        fail(start, "nonlinear expression");
      }
    }
    return a;
  }

  Affine factor() {
    const auto& t = peek();
    if (t.kind == Token::Kind::number) return Affine::of_const(Int(next().text));
    if (t.kind == Token::Kind::ident && !reserved_words().count(t.text)) return Affine::of_var(next().text);
    if (accept_symbol("-")) return factor().scaled(-1);
    if (accept_symbol("(")) {
      auto e = expr();
      symbol(")");
      return e;
    }
    fail(t, "malformed expression", {"number", "identifier", "'('", "'-'"});
  }

  // ---- guards ----
  Guard guard() {
    std::vector<Guard> parts{conjunction()};
    while (is_keyword("or")) {
      next();
      parts.push_back(conjunction());
    }
    return Guard::any(std::move(parts));
  }

  Guard conjunction() {
    std::vector<Guard> parts{negation()};
    while (is_keyword("and")) {
      next();
      parts.push_back(negation());
    }
    return Guard::all(std::move(parts));
  }

  Guard negation() {
    if (is_keyword("not")) {
      next();
      return Guard::negation(negation());
    }
    return atom();
  }

  static bool is_cmp(const Token& t) {
    static const std::set<std::string> ops{"<", "<=", "=", "/=", ">", ">="};
    return t.kind == Token::Kind::symbol && ops.count(t.text);
  }

  Guard atom() {
    if (is_keyword("true") || is_keyword("false")) return Guard::literal(next().text == "true");
    if ((is_keyword("even") || is_keyword("odd")) && is_symbol("(", 1)) {
      const bool even = next().text == "even";
      symbol("(");
      auto e = expr();
      symbol(")");
      return Guard::parity(even, std::move(e));
    }
    if (is_symbol("(")) {
      // Either a parenthesized guard or an expression starting with '('.
      const auto save = pos_;
      try {
        next();
        auto g = guard();
        symbol(")");
        if (!is_cmp(peek()) && !is_symbol("+") && !is_symbol("-") && !is_symbol("*")) return g;
      } catch (const ParseError&) {
      }
      pos_ = save;
    }
    auto lhs = expr();
    if (!is_cmp(peek())) fail(peek(), "expected a comparison", {"'<'", "'<='", "'='", "'/='", "'>'", "'>='"});
    const auto op_text = next().text;
    const CmpOp op = op_text == "<"    ? CmpOp::lt
                     : op_text == "<=" ? CmpOp::le
                     : op_text == "="  ? CmpOp::eq
                     : op_text == "/=" ? CmpOp::ne
                     : op_text == ">"  ? CmpOp::gt
                                       : CmpOp::ge;
    auto rhs = expr();
    return Guard::cmp(std::move(lhs), op, std::move(rhs));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ModelAst parse(std::string_view source) { return detail::Parser(lex(source)).model(); }

inline Guard parse_guard(std::string_view text) { return detail::Parser(lex(text)).guard_only(); }

inline Affine parse_expr(std::string_view text) { return detail::Parser(lex(text)).expr_only(); }

}  // namespace peano::dsl
