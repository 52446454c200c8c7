#pragma once

// Theory files: `datatype` declarations and `fun`/`primrec` specifications
// whose types and equations are written inside double quotes.
//
// Expression grammar, loosest to tightest:
//
//   expr    := \<lambda> x1 .. xn. expr | case expr of pat => expr ('|' pat => expr)*
//            | let pat = expr (';' pat = expr)* in expr | if expr then expr else expr
//            | binary
//   binary  := operators, by decreasing binding strength:
//              `!` (left), `#` (right), `* div` (left), `+ -` (left), `= <` (left)
//   app     := name atom* | atom
//   atom    := name | number | True | False | ( expr ) | [ exprs ] | { exprs }
//
// Application binds tighter than every operator. `%` and `λ` are accepted
// for `\<lambda>`, `⇒` and `\<Rightarrow>` for `=>`.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "isatype/diagnostics.hpp"
#include "isatype/expr.hpp"
#include "isatype/lexer.hpp"
#include "isatype/prelude.hpp"
#include "isatype/type.hpp"

namespace isatype {

struct DatatypeDecl {
  struct Ctor {
    std::string name;
    std::vector<Type> args;
  };

  std::string name;
  std::vector<std::string> type_params;  // variable names without the quote
  std::vector<Ctor> ctors;
  SourceLocation location;

  /// `('a, 'b) name`, or the primitive `name` when there are no parameters.
  Type result_type() const {
    if (type_params.empty()) return Type::prim(name);
    std::vector<Type> args;
    for (const auto& p : type_params) args.push_back(Type::var(p));
    return Type::constructed(std::move(args), name);
  }
};

struct Equation {
  std::vector<Expr> patterns;
  Expr rhs;
  SourceLocation location;
};

struct FunctionSpec {
  std::string name;
  Type declared_type = Type::bottom();
  std::vector<Equation> equations;
  std::string keyword = "fun";
  SourceLocation location;

  std::size_t param_count() const { return isatype::param_count(declared_type); }
  std::vector<Type> param_types() const { return split_application(declared_type, param_count()).params; }
  Type return_type() const { return split_application(declared_type, param_count()).result; }
};

struct TheoryFile {
  std::string name;
  std::vector<DatatypeDecl> datatypes;
  std::vector<FunctionSpec> functions;
};

/// Global names visible to the expression parser, and whether each one is a
/// constructor (constructors may head patterns).
class NameTable {
 public:
  static NameTable with_prelude() {
    NameTable t;
    for (const auto& e : kPrelude) t.add(std::string(e.name), e.constructor);
    return t;
  }

  void add(const std::string& name, bool constructor) { names_.insert_or_assign(name, constructor); }
  bool known(const std::string& name) const { return names_.contains(name); }
  bool is_constructor(const std::string& name) const {
    auto it = names_.find(name);
    return it != names_.end() && it->second;
  }

 private:
  std::unordered_map<std::string, bool> names_;
};

namespace detail {

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    last_end_ = t.end;
    return t;
  }
  bool at_end() const { return peek().kind == TokenKind::End; }
  SourceLocation last_end() const { return last_end_; }

  bool accept_symbol(std::string_view s) {
    if (!peek().is_symbol(s)) return false;
    next();
    return true;
  }
  bool accept_ident(std::string_view s) {
    if (!peek().is_ident(s)) return false;
    next();
    return true;
  }
  const Token& expect_symbol(std::string_view s) {
    if (!peek().is_symbol(s)) fail("expected '" + std::string(s) + "'");
    return next();
  }
  const Token& expect_ident(std::string_view s) {
    if (!peek().is_ident(s)) fail("expected '" + std::string(s) + "'");
    return next();
  }
  const Token& expect(TokenKind k, std::string_view what) {
    if (peek().kind != k) fail("expected " + std::string(what));
    return next();
  }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.begin.line, t.begin.column, message + ", found " + found);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  SourceLocation last_end_;
};

inline TypeVar type_var_from_token(const Token& tok) {
  std::string body = tok.text.substr(1);
  std::optional<std::uint32_t> counter;
  if (auto hash = body.find('#'); hash != std::string::npos) {
    counter = static_cast<std::uint32_t>(std::stoul(body.substr(hash + 1)));
    body.resize(hash);
  }
  return TypeVar{std::move(body), counter};
}

class TypeParser {
 public:
  explicit TypeParser(TokenStream& ts) : ts_(ts) {}

  Type parse() {
    std::vector<Type> parts{parse_tuple()};
    while (ts_.accept_symbol("=>")) parts.push_back(parse_tuple());
    return parts.size() == 1 ? parts.front() : Type::fun(std::move(parts));
  }

 private:
  Type parse_tuple() {
    Type left = parse_postfix();
    if (ts_.accept_symbol("*")) return Type::tuple(std::move(left), parse_tuple());
    return left;
  }

  Type parse_postfix() {
    std::vector<Type> args = parse_atom();
    if (args.size() > 1 && ts_.peek().kind != TokenKind::Ident) {
      if (args.size() == 2) return Type::tuple(args[0], args[1]);
      ts_.fail("expected a type constructor after argument list");
    }
    while (ts_.peek().kind == TokenKind::Ident) {
      std::string ctor = ts_.next().text;
      Type t = Type::constructed(std::move(args), std::move(ctor));
      args = {t};
    }
    return args.front();
  }

  std::vector<Type> parse_atom() {
    const Token& tok = ts_.peek();
    if (tok.kind == TokenKind::TypeVar) return {Type::var(type_var_from_token(ts_.next()))};
    if (tok.kind == TokenKind::Ident) return {Type::prim(ts_.next().text)};
    if (ts_.accept_symbol("(")) {
      std::vector<Type> items{parse()};
      while (ts_.accept_symbol(",")) items.push_back(parse());
      ts_.expect_symbol(")");
      return items;
    }
    ts_.fail("expected a type");
  }

  TokenStream& ts_;
};

inline bool is_expr_keyword(std::string_view s) {
  return s == "case" || s == "of" || s == "let" || s == "in" || s == "if" || s == "then" ||
         s == "else" || s == "div";
}

struct OperatorInfo {
  int level;
  bool right_assoc;
};

inline std::optional<OperatorInfo> binary_operator(const Token& tok) {
  if (tok.kind == TokenKind::Ident && tok.text == "div") return OperatorInfo{3, false};
  if (tok.kind != TokenKind::Symbol) return std::nullopt;
  const std::string& s = tok.text;
  if (s == "=" || s == "<") return OperatorInfo{1, false};
  if (s == "+" || s == "-") return OperatorInfo{2, false};
  if (s == "*") return OperatorInfo{3, false};
  if (s == "#") return OperatorInfo{4, true};
  if (s == "!") return OperatorInfo{5, false};
  return std::nullopt;
}

class ExprParser {
 public:
  ExprParser(TokenStream& ts, const NameTable& names, NodeId& next_id)
      : ts_(ts), names_(names), next_id_(next_id) {}

  Equation parse_equation(const std::string& function_name) {
    Equation eq;
    eq.location = ts_.peek().begin;
    const Token& head = ts_.expect(TokenKind::Ident, "function name");
    if (head.text != function_name) {
      throw ParseError(head.begin.line, head.begin.column,
                       "equation defines '" + head.text + "' inside the specification of '" + function_name + "'");
    }
    std::vector<std::string> binders;
    while (!ts_.peek().is_symbol("=")) {
      if (ts_.at_end()) ts_.fail("expected '='");
      eq.patterns.push_back(parse_pattern_atom(binders));
    }
    ts_.expect_symbol("=");
    scopes_.push_back(binders);
    eq.rhs = parse_expr();
    scopes_.pop_back();
    if (!ts_.at_end()) ts_.fail("unexpected trailing input");
    return eq;
  }

  Expr parse_expr() {
    const Token& tok = ts_.peek();
    SourceLocation begin = tok.begin;
    if (tok.is_symbol("\\<lambda>")) {
      ts_.next();
      std::vector<Expr> params;
      std::vector<std::string> names;
      do {
        const Token& p = ts_.expect(TokenKind::Ident, "lambda parameter");
        names.push_back(p.text);
        params.push_back(make(VarExpr{p.text}, p.begin, p.end));
      } while (ts_.peek().kind == TokenKind::Ident);
      ts_.expect_symbol(".");
      scopes_.push_back(names);
      Expr body = parse_expr();
      scopes_.pop_back();
      return make(LambdaExpr{std::move(params), std::move(body)}, begin, ts_.last_end());
    }
    if (tok.is_ident("case")) {
      ts_.next();
      Expr scrutinee = parse_expr();
      ts_.expect_ident("of");
      std::vector<CaseBranch> branches;
      do {
        std::vector<std::string> binders;
        Expr pattern = parse_pattern(binders);
        ts_.expect_symbol("=>");
        scopes_.push_back(binders);
        Expr body = parse_expr();
        scopes_.pop_back();
        branches.push_back(CaseBranch{std::move(pattern), std::move(body)});
      } while (ts_.accept_symbol("|"));
      return make(CaseExpr{std::move(scrutinee), std::move(branches)}, begin, ts_.last_end());
    }
    if (tok.is_ident("let")) {
      ts_.next();
      return parse_let_bindings(begin);
    }
    if (tok.is_ident("if")) {
      ts_.next();
      std::vector<Expr> args;
      args.push_back(parse_expr());
      ts_.expect_ident("then");
      args.push_back(parse_expr());
      ts_.expect_ident("else");
      args.push_back(parse_expr());
      return make(AppExpr{"If", std::move(args), AppStyle::KeywordIf}, begin, ts_.last_end());
    }
    return parse_binary(1);
  }

 private:
  Expr make(Expr::Node node, SourceLocation begin, SourceLocation end) {
    Expr e;
    e.id = next_id_++;
    e.span = {begin, end};
    e.node = std::move(node);
    return e;
  }

  bool is_local(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
      for (const auto& n : *it)
        if (n == name) return true;
    return false;
  }

  Expr parse_let_bindings(SourceLocation begin) {
    std::vector<std::string> binders;
    Expr pattern = parse_pattern(binders);
    ts_.expect_symbol("=");
    Expr bound = parse_expr();
    scopes_.push_back(binders);
    Expr body = ts_.accept_symbol(";") ? parse_let_bindings(ts_.peek().begin)
                                       : (ts_.expect_ident("in"), parse_expr());
    scopes_.pop_back();
    return make(LetInExpr{std::move(pattern), std::move(bound), std::move(body)}, begin, ts_.last_end());
  }

  Expr parse_binary(int min_level) {
    SourceLocation begin = ts_.peek().begin;
    Expr lhs = parse_app();
    for (;;) {
      auto op = binary_operator(ts_.peek());
      if (!op || op->level < min_level) return lhs;
      std::string name = ts_.next().text;
      Expr rhs = parse_binary(op->right_assoc ? op->level : op->level + 1);
      std::vector<Expr> args;
      args.push_back(std::move(lhs));
      args.push_back(std::move(rhs));
      lhs = make(AppExpr{std::move(name), std::move(args), AppStyle::Infix}, begin, ts_.last_end());
    }
  }

  bool starts_atom(const Token& tok) const {
    switch (tok.kind) {
      case TokenKind::Ident: return !is_expr_keyword(tok.text);
      case TokenKind::Number: return true;
      case TokenKind::Symbol: return tok.text == "(" || tok.text == "[" || tok.text == "{";
      default: return false;
    }
  }

  bool starts_compound(const Token& tok) const {
    return tok.is_symbol("\\<lambda>") || tok.is_ident("case") || tok.is_ident("let") || tok.is_ident("if");
  }

  Expr parse_app() {
    const Token& tok = ts_.peek();
    if (starts_compound(tok)) return parse_expr();
    if (tok.kind == TokenKind::Ident && !is_expr_keyword(tok.text) && tok.text != "True" &&
        tok.text != "False" && starts_atom(ts_.peek(1))) {
      SourceLocation begin = tok.begin;
      std::string head = ts_.next().text;
      std::vector<Expr> args;
      while (starts_atom(ts_.peek())) args.push_back(parse_atom());
      return make(AppExpr{std::move(head), std::move(args), AppStyle::Prefix}, begin, ts_.last_end());
    }
    Expr atom = parse_atom();
    if (starts_atom(ts_.peek())) ts_.fail("application head must be a name");
    return atom;
  }

  Expr parse_atom() {
    const Token& tok = ts_.peek();
    SourceLocation begin = tok.begin;
    if (tok.kind == TokenKind::Ident && !is_expr_keyword(tok.text)) {
      const Token& t = ts_.next();
      if (t.text == "True" || t.text == "False")
        return make(ConstExpr{t.text, LiteralKind::Boolean}, t.begin, t.end);
      if (!is_local(t.text) && names_.known(t.text)) return make(AppExpr{t.text, {}, AppStyle::Prefix}, t.begin, t.end);
      return make(VarExpr{t.text}, t.begin, t.end);
    }
    if (tok.kind == TokenKind::Number) {
      const Token& t = ts_.next();
      return make(ConstExpr{t.text, LiteralKind::Integral}, t.begin, t.end);
    }
    if (ts_.accept_symbol("(")) {
      Expr inner = parse_expr();
      ts_.expect_symbol(")");
      inner.span.begin = begin;
      inner.span.end = ts_.last_end();
      return inner;
    }
    if (ts_.accept_symbol("[")) {
      std::vector<Expr> elems = parse_elements("]");
      return make(ListExpr{std::move(elems)}, begin, ts_.last_end());
    }
    if (ts_.accept_symbol("{")) {
      std::vector<Expr> elems = parse_elements("}");
      return make(SetExpr{std::move(elems)}, begin, ts_.last_end());
    }
    ts_.fail("expected an expression");
  }

  std::vector<Expr> parse_elements(std::string_view close) {
    std::vector<Expr> elems;
    if (!ts_.accept_symbol(close)) {
      do {
        elems.push_back(parse_expr());
      } while (ts_.accept_symbol(","));
      ts_.expect_symbol(close);
    }
    return elems;
  }

  // Patterns: constructor applications, `#`, literals, list and set literals.
  Expr parse_pattern(std::vector<std::string>& binders) {
    SourceLocation begin = ts_.peek().begin;
    Expr head = parse_pattern_app(binders);
    if (!ts_.accept_symbol("#")) return head;
    Expr tail = parse_pattern(binders);
    std::vector<Expr> args;
    args.push_back(std::move(head));
    args.push_back(std::move(tail));
    return make(AppExpr{"#", std::move(args), AppStyle::Infix}, begin, ts_.last_end());
  }

  Expr parse_pattern_app(std::vector<std::string>& binders) {
    const Token& tok = ts_.peek();
    if (tok.kind == TokenKind::Ident && !is_expr_keyword(tok.text) && starts_atom(ts_.peek(1))) {
      if (!names_.is_constructor(tok.text))
        throw ParseError(tok.begin.line, tok.begin.column, "'" + tok.text + "' is not a constructor");
      SourceLocation begin = tok.begin;
      std::string ctor = ts_.next().text;
      std::vector<Expr> args;
      while (starts_atom(ts_.peek())) args.push_back(parse_pattern_atom(binders));
      return make(AppExpr{std::move(ctor), std::move(args), AppStyle::Prefix}, begin, ts_.last_end());
    }
    return parse_pattern_atom(binders);
  }

  Expr parse_pattern_atom(std::vector<std::string>& binders) {
    const Token& tok = ts_.peek();
    SourceLocation begin = tok.begin;
    if (tok.kind == TokenKind::Ident && !is_expr_keyword(tok.text)) {
      const Token& t = ts_.next();
      if (t.text == "True" || t.text == "False")
        return make(ConstExpr{t.text, LiteralKind::Boolean}, t.begin, t.end);
      if (names_.is_constructor(t.text)) return make(AppExpr{t.text, {}, AppStyle::Prefix}, t.begin, t.end);
      binders.push_back(t.text);
      return make(VarExpr{t.text}, t.begin, t.end);
    }
    if (tok.kind == TokenKind::Number) {
      const Token& t = ts_.next();
      return make(ConstExpr{t.text, LiteralKind::Integral}, t.begin, t.end);
    }
    if (ts_.accept_symbol("(")) {
      Expr inner = parse_pattern(binders);
      ts_.expect_symbol(")");
      inner.span.begin = begin;
      inner.span.end = ts_.last_end();
      return inner;
    }
    for (std::string_view close : {"]", "}"}) {
      std::string_view open = close == "]" ? "[" : "{";
      if (!ts_.accept_symbol(open)) continue;
      std::vector<Expr> elems;
      if (!ts_.accept_symbol(close)) {
        do {
          elems.push_back(parse_pattern(binders));
        } while (ts_.accept_symbol(","));
        ts_.expect_symbol(close);
      }
      if (close == "]") return make(ListExpr{std::move(elems)}, begin, ts_.last_end());
      return make(SetExpr{std::move(elems)}, begin, ts_.last_end());
    }
    ts_.fail("expected a pattern");
  }

  TokenStream& ts_;
  const NameTable& names_;
  NodeId& next_id_;
  std::vector<std::vector<std::string>> scopes_;
};

inline bool is_declaration_keyword(const Token& tok) {
  return tok.kind == TokenKind::Ident &&
         (tok.text == "datatype" || tok.text == "fun" || tok.text == "primrec" || tok.text == "end");
}

class TheoryParser {
 public:
  explicit TheoryParser(std::string_view text) : ts_(Lexer(text).tokenize()) {}

  TheoryFile parse() {
    TheoryFile theory;
    if (ts_.accept_ident("theory")) {
      theory.name = ts_.expect(TokenKind::Ident, "theory name").text;
      if (ts_.accept_ident("imports"))
        while (ts_.peek().kind == TokenKind::Ident && ts_.peek().text != "begin") ts_.next();
      ts_.expect_ident("begin");
    }
    while (!ts_.at_end()) {
      const Token& tok = ts_.peek();
      if (tok.is_ident("end")) {
        ts_.next();
        if (!ts_.at_end()) ts_.fail("unexpected input after 'end'");
        break;
      }
      if (tok.is_ident("datatype")) {
        theory.datatypes.push_back(parse_datatype());
      } else if (tok.is_ident("fun") || tok.is_ident("primrec")) {
        theory.functions.push_back(parse_function());
      } else {
        ts_.fail("expected 'datatype', 'fun' or 'primrec'");
      }
    }
    renumber(theory);
    return theory;
  }

 private:
  void declare_value(const Token& at) {
    if (!values_.insert(at.text).second) throw DuplicateName(at.begin.line, at.begin.column, at.text);
  }

  static Type parse_quoted_type(const Token& str) {
    TokenStream inner(Lexer(str.text, str.content_begin).tokenize());
    Type t = TypeParser(inner).parse();
    if (!inner.at_end()) inner.fail("unexpected trailing input in type");
    return t;
  }

  DatatypeDecl parse_datatype() {
    DatatypeDecl d;
    d.location = ts_.next().begin;
    if (ts_.peek().kind == TokenKind::TypeVar) {
      d.type_params.push_back(type_var_from_token(ts_.next()).name);
    } else if (ts_.accept_symbol("(")) {
      do {
        d.type_params.push_back(type_var_from_token(ts_.expect(TokenKind::TypeVar, "type variable")).name);
      } while (ts_.accept_symbol(","));
      ts_.expect_symbol(")");
    }
    const Token& name = ts_.expect(TokenKind::Ident, "datatype name");
    if (!types_.insert(name.text).second) throw DuplicateName(name.begin.line, name.begin.column, name.text);
    d.name = name.text;
    ts_.expect_symbol("=");
    std::set<std::string> params(d.type_params.begin(), d.type_params.end());
    do {
      const Token& ctor = ts_.expect(TokenKind::Ident, "constructor name");
      declare_value(ctor);
      DatatypeDecl::Ctor c{ctor.text, {}};
      for (;;) {
        const Token& arg = ts_.peek();
        Type t = Type::bottom();
        if (arg.kind == TokenKind::String) {
          t = parse_quoted_type(arg);
        } else if (arg.kind == TokenKind::TypeVar) {
          t = Type::var(type_var_from_token(arg));
        } else if (arg.kind == TokenKind::Ident && !is_declaration_keyword(arg)) {
          t = Type::prim(arg.text);
        } else {
          break;
        }
        for (const auto& v : free_type_vars(t)) {
          if (!params.contains(v.name) || v.counter)
            throw ParseError(arg.begin.line, arg.begin.column,
                             "type variable " + to_string(v) + " is not a parameter of " + d.name);
        }
        ts_.next();
        c.args.push_back(std::move(t));
      }
      names_.add(c.name, true);
      d.ctors.push_back(std::move(c));
    } while (ts_.accept_symbol("|"));
    return d;
  }

  FunctionSpec parse_function() {
    FunctionSpec f;
    const Token& kw = ts_.next();
    f.keyword = kw.text;
    f.location = kw.begin;
    const Token& name = ts_.expect(TokenKind::Ident, "function name");
    declare_value(name);
    f.name = name.text;
    ts_.expect_symbol("::");
    f.declared_type = parse_quoted_type(ts_.expect(TokenKind::String, "quoted type"));
    ts_.expect_ident("where");
    names_.add(f.name, false);
    std::size_t arity = f.param_count();
    do {
      const Token& str = ts_.expect(TokenKind::String, "quoted equation");
      TokenStream inner(Lexer(str.text, str.content_begin).tokenize());
      Equation eq = ExprParser(inner, names_, next_id_).parse_equation(f.name);
      if (eq.patterns.size() != arity) {
        throw ArityMismatch(str.content_begin.line, str.content_begin.column,
                            "equation has " + std::to_string(eq.patterns.size()) + " patterns but '" + f.name +
                                "' takes " + std::to_string(arity) + " parameters");
      }
      f.equations.push_back(std::move(eq));
    } while (ts_.accept_symbol("|"));
    return f;
  }

  // Dense pre-order ids across the whole theory.
  static void renumber(TheoryFile& theory) {
    NodeId next = 1;
    auto assign = [&](Expr& e) { e.id = next++; };
    for (auto& f : theory.functions) {
      for (auto& eq : f.equations) {
        for (auto& p : eq.patterns) walk_preorder(p, assign);
        walk_preorder(eq.rhs, assign);
      }
    }
  }

  TokenStream ts_;
  NameTable names_ = NameTable::with_prelude();
  NodeId next_id_ = 1;
  std::set<std::string> types_;
  std::set<std::string> values_;
};

}  // namespace detail

/// Parses a type in surface syntax, e.g. `('d => 'e) => 'd list => 'e list`.
inline Type parse_type(std::string_view text, SourceLocation start = {1, 1}) {
  detail::TokenStream ts(Lexer(text, start).tokenize());
  Type t = detail::TypeParser(ts).parse();
  if (!ts.at_end()) ts.fail("unexpected trailing input in type");
  return t;
}

inline TheoryFile parse_theory(std::string_view text) { return detail::TheoryParser(text).parse(); }

inline std::string equation_source(const FunctionSpec& f, const Equation& eq) {
  std::string out = f.name;
  for (const auto& p : eq.patterns) out += " " + to_source_atomic(p);
  return out + " = " + to_source(eq.rhs);
}

/// Concrete syntax that `parse_theory` reads back to the same declarations.
inline std::string print_theory(const TheoryFile& theory) {
  std::string out;
  for (const auto& d : theory.datatypes) {
    out += "datatype ";
    if (d.type_params.size() == 1) {
      out += "'" + d.type_params[0] + " ";
    } else if (d.type_params.size() > 1) {
      out += "(";
      for (std::size_t i = 0; i < d.type_params.size(); ++i) out += (i ? ", '" : "'") + d.type_params[i];
      out += ") ";
    }
    out += d.name + " =";
    for (std::size_t i = 0; i < d.ctors.size(); ++i) {
      out += i ? " | " : " ";
      out += d.ctors[i].name;
      for (const auto& a : d.ctors[i].args) out += " \"" + to_string(a) + "\"";
    }
    out += "\n\n";
  }
  for (const auto& f : theory.functions) {
    out += f.keyword + " " + f.name + " :: \"" + to_string(f.declared_type) + "\" where\n";
    for (std::size_t i = 0; i < f.equations.size(); ++i) {
      out += "  \"" + equation_source(f, f.equations[i]) + "\"";
      out += i + 1 < f.equations.size() ? " |\n" : "\n\n";
    }
  }
  return out;
}

}  // namespace isatype
